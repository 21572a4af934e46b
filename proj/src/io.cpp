#include "nsym/io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

namespace nsym::io {

namespace {

// significant lines: comments and blanks stripped, tokens space-separated
std::vector<std::vector<std::string>> tokenize(const std::string& text) {
  std::vector<std::vector<std::string>> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::vector<std::string> toks;
    std::string t;
    while (ls >> t) toks.push_back(t);
    if (!toks.empty()) lines.push_back(std::move(toks));
  }
  return lines;
}

int parse_kv_int(const std::string& tok, const std::string& key) {
  if (tok.rfind(key + "=", 0) != 0) fail(Errc::io, "expected " + key + "=<n>, got '" + tok + "'");
  try {
    return std::stoi(tok.substr(key.size() + 1));
  } catch (const std::exception&) {
    fail(Errc::io, "bad number in '" + tok + "'");
  }
}

int subind_index(const std::string& tok, int arity) {
  if (tok.size() < 2 || tok[0] != 'I') fail(Errc::io, "expected I<k>, got '" + tok + "'");
  int k = 0;
  try {
    k = std::stoi(tok.substr(1));
  } catch (const std::exception&) {
    fail(Errc::io, "bad sub-indeterminacy '" + tok + "'");
  }
  if (k < 1 || k > arity) fail(Errc::io, "'" + tok + "' outside I1..I" + std::to_string(arity));
  return k;
}

lit::Lit parse_lit_tok(const std::string& tok) {
  auto l = lit::parse_lit(tok);
  if (!l) fail(Errc::io, "'" + tok + "' is not a literal");
  return *l;
}

}  // namespace

FileKind sniff(const std::string& text) {
  auto lines = tokenize(text);
  if (lines.empty()) fail(Errc::io, "empty table file");
  const auto& head = lines.front();
  if (head[0] == "subind") return FileKind::subind;
  if (head[0] == "littable") return FileKind::littable;
  if (head[0] == "adjacency") return FileKind::adjacency;
  if (lines.size() == 1 && head.size() == 1 && head[0].find('>') != std::string::npos)
    return FileKind::order;
  fail(Errc::io, "unrecognized table file header '" + head[0] + "'");
}

std::string save(const ind::SubIndTable& t) {
  std::string s = "subind r=" + std::to_string(t.arity()) + "\n";
  for (int j = 1; j <= t.arity(); ++j)
    for (int k = 1; k <= t.arity(); ++k)
      s += "I" + std::to_string(j) + " I" + std::to_string(k) + " -> I" +
           std::to_string(t.mul(j, k)) + "\n";
  return s;
}

ind::SubIndTable load_subind(const std::string& text) {
  auto lines = tokenize(text);
  if (lines.empty() || lines[0].size() != 2 || lines[0][0] != "subind")
    fail(Errc::io, "expected header 'subind r=<r>'");
  int r = parse_kv_int(lines[0][1], "r");
  if (r < 1) fail(Errc::io, "subind arity must be >= 1");
  std::vector<int> cells(static_cast<size_t>(r) * r, 0);
  std::vector<bool> seen(cells.size(), false);
  if (lines.size() != cells.size() + 1)
    fail(Errc::io, "subind table needs exactly " + std::to_string(cells.size()) + " rules");
  for (size_t ln = 1; ln < lines.size(); ++ln) {
    const auto& toks = lines[ln];
    if (toks.size() != 4 || toks[2] != "->")
      fail(Errc::io, "expected 'I<j> I<k> -> I<m>'");
    int j = subind_index(toks[0], r), k = subind_index(toks[1], r),
        m = subind_index(toks[3], r);
    size_t cell = static_cast<size_t>(j - 1) * r + (k - 1);
    if (seen[cell]) fail(Errc::io, "duplicate rule for I" + std::to_string(j) + " I" + std::to_string(k));
    seen[cell] = true;
    cells[cell] = m;
  }
  return ind::SubIndTable(r, std::move(cells));
}

std::string save(const lit::Table& t) {
  std::string s = "littable " + lit::op_name(t.op()) + "\n";
  const lit::Lit dom[3] = {lit::Lit::T(), lit::Lit::I(), lit::Lit::F()};
  if (t.unary()) {
    for (lit::Lit x : dom) s += x.str() + " -> " + t.apply(x).str() + "\n";
  } else {
    for (lit::Lit x : dom)
      for (lit::Lit y : dom) s += x.str() + " " + y.str() + " -> " + t.apply(x, y).str() + "\n";
  }
  return s;
}

lit::Table load_littable(const std::string& text) {
  auto lines = tokenize(text);
  if (lines.empty() || lines[0].size() != 2 || lines[0][0] != "littable")
    fail(Errc::io, "expected header 'littable <op>'");
  auto op = lit::parse_op(lines[0][1]);
  if (!op) fail(Errc::io, "unknown operator '" + lines[0][1] + "'");
  bool unary = *op == lit::OpKind::neg;
  size_t want = unary ? 3 : 9;
  if (lines.size() != want + 1)
    fail(Errc::io, "littable needs exactly " + std::to_string(want) + " rules");
  std::vector<lit::Lit> cells(want, lit::Lit::I());
  std::vector<bool> seen(want, false);
  auto idx = [](lit::Lit l) {
    if (l.refined()) fail(Errc::io, "littable cells use plain T, I, F");
    return static_cast<int>(l.kind);
  };
  for (size_t ln = 1; ln < lines.size(); ++ln) {
    const auto& toks = lines[ln];
    size_t cell;
    lit::Lit result = lit::Lit::I();
    if (unary) {
      if (toks.size() != 3 || toks[1] != "->") fail(Errc::io, "expected 'X -> Z'");
      cell = idx(parse_lit_tok(toks[0]));
      result = parse_lit_tok(toks[2]);
    } else {
      if (toks.size() != 4 || toks[2] != "->") fail(Errc::io, "expected 'X Y -> Z'");
      cell = idx(parse_lit_tok(toks[0])) * 3 + idx(parse_lit_tok(toks[1]));
      result = parse_lit_tok(toks[3]);
    }
    if (result.refined()) fail(Errc::io, "littable cells use plain T, I, F");
    if (seen[cell]) fail(Errc::io, "duplicate littable rule");
    seen[cell] = true;
    cells[cell] = result;
  }
  return lit::Table(*op, std::move(cells));
}

std::string save(const graph::Adjacency& m) {
  std::string s = "adjacency n=" + std::to_string(m.n) + " " +
                  (m.directed ? "directed" : "undirected") + "\n";
  for (int r = 0; r < m.n; ++r) {
    for (int c = 0; c < m.n; ++c) {
      if (c) s += " ";
      s += graph::entry_str(m.at(r, c));
    }
    s += "\n";
  }
  return s;
}

graph::Adjacency load_adjacency(const std::string& text) {
  auto lines = tokenize(text);
  if (lines.empty() || lines[0].size() != 3 || lines[0][0] != "adjacency")
    fail(Errc::io, "expected header 'adjacency n=<n> directed|undirected'");
  int n = parse_kv_int(lines[0][1], "n");
  bool directed;
  if (lines[0][2] == "directed") directed = true;
  else if (lines[0][2] == "undirected") directed = false;
  else fail(Errc::io, "expected 'directed' or 'undirected'");
  auto m = graph::Adjacency::make(n, directed);
  if (lines.size() != static_cast<size_t>(n) + 1)
    fail(Errc::io, "adjacency needs exactly " + std::to_string(n) + " rows");
  for (int r = 0; r < n; ++r) {
    const auto& toks = lines[r + 1];
    if (toks.size() != static_cast<size_t>(n))
      fail(Errc::io, "row " + std::to_string(r + 1) + " needs " + std::to_string(n) + " entries");
    for (int c = 0; c < n; ++c) {
      const std::string& t = toks[c];
      if (t == "0") m.at(r, c) = graph::Entry::zero;
      else if (t == "1") m.at(r, c) = graph::Entry::plus;
      else if (t == "-1") m.at(r, c) = graph::Entry::minus;
      else if (t == "I") m.at(r, c) = graph::Entry::indet;
      else fail(Errc::io, "adjacency entry '" + t + "' outside {0, 1, -1, I}");
    }
  }
  return m;
}

std::string save_order(const lit::PrevOrder& o) { return o.str() + "\n"; }

lit::PrevOrder load_order(const std::string& text) {
  auto lines = tokenize(text);
  if (lines.size() != 1 || lines[0].size() != 1)
    fail(Errc::io, "order file holds a single chain like T>I>F");
  return lit::PrevOrder::parse(lines[0][0]);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Errc::io, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(Errc::io, "cannot write '" + path + "'");
  out << text;
}

}  // namespace nsym::io
