#include "nsym/expr/session.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "nsym/expr/eval.hpp"
#include "nsym/expr/parser.hpp"
#include "nsym/io.hpp"

namespace nsym::expr {

namespace {

std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  std::string t;
  while (in >> t) out.push_back(t);
  return out;
}

std::vector<std::string> split_on(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

tif::Norm parse_norm(const std::string& s) {
  if (s == "min") return tif::Norm::min;
  if (s == "product" || s == "prod") return tif::Norm::product;
  if (s == "lukasiewicz" || s == "luk") return tif::Norm::lukasiewicz;
  fail(Errc::domain, "unknown t-norm '" + s + "' (min, product, lukasiewicz)");
}

tif::Conorm parse_conorm(const std::string& s) {
  if (s == "max") return tif::Conorm::max;
  if (s == "probsum") return tif::Conorm::prob_sum;
  if (s == "boundedsum") return tif::Conorm::bounded_sum;
  fail(Errc::domain, "unknown t-conorm '" + s + "' (max, probsum, boundedsum)");
}

tif::Impl parse_fuzzy_impl(const std::string& s) {
  if (s == "fodor") return tif::Impl::fodor;
  if (s == "weber") return tif::Impl::weber;
  if (s == "yager") return tif::Impl::yager;
  if (s == "goguen") return tif::Impl::goguen;
  if (s == "rescher") return tif::Impl::rescher;
  if (s == "kleene" || s == "kleene_dienes") return tif::Impl::kleene_dienes;
  if (s == "reichenbach") return tif::Impl::reichenbach;
  if (s == "goedel" || s == "godel") return tif::Impl::goedel;
  if (s == "lukasiewicz" || s == "luk") return tif::Impl::lukasiewicz;
  fail(Errc::domain, "unknown fuzzy implication '" + s + "'");
}

tif::NegVariant parse_neg(const std::string& s) {
  if (s == "swap_tf") return tif::NegVariant::swap_tf;
  if (s == "swap_tf_flip_i") return tif::NegVariant::swap_tf_flip_i;
  if (s == "complement_all") return tif::NegVariant::complement_all;
  if (s == "complement_tf") return tif::NegVariant::complement_tf;
  fail(Errc::domain, "unknown negation variant '" + s + "'");
}

// "minmaxmax" | "<form>" | "<form>:<norm>,<conorm>"
tif::ConjVariant parse_conj_spec(const std::string& s) {
  if (s == "minmaxmax") return tif::ConjVariant::min_max_max();
  auto main = split_on(s, ':');
  tif::ConjVariant v;
  try {
    v.form = std::stoi(main[0]);
  } catch (const std::exception&) {
    fail(Errc::domain, "conjunction spec is 'minmaxmax' or '<form 1..6>[:<norm>,<conorm>]'");
  }
  if (v.form < 1 || v.form > 6) fail(Errc::domain, "conjunction form must be 1..6");
  if (main.size() > 1) {
    auto parts = split_on(main[1], ',');
    if (!parts[0].empty()) v.norm = parse_norm(parts[0]);
    if (parts.size() > 1 && !parts[1].empty()) v.conorm = parse_conorm(parts[1]);
  }
  return v;
}

tif::DisjVariant parse_disj_spec(const std::string& s) {
  if (s == "maxminmin") return tif::DisjVariant::max_min_min();
  auto main = split_on(s, ':');
  tif::DisjVariant v;
  try {
    v.form = std::stoi(main[0]);
  } catch (const std::exception&) {
    fail(Errc::domain, "disjunction spec is 'maxminmin' or '<form 1..6>[:<conorm>,<norm>]'");
  }
  if (v.form < 1 || v.form > 6) fail(Errc::domain, "disjunction form must be 1..6");
  if (main.size() > 1) {
    auto parts = split_on(main[1], ',');
    if (!parts[0].empty()) v.conorm = parse_conorm(parts[0]);
    if (parts.size() > 1 && !parts[1].empty()) v.norm = parse_norm(parts[1]);
  }
  return v;
}

const char* kHelp =
    "commands:\n"
    "  :order <chain>     prevalence order, e.g. T>I>F or T1>T2>T3>I>F1>F2\n"
    "  :conj v1|v2|v3     literal conjunction table version\n"
    "  :conj <spec>       numeric conjunction, e.g. minmaxmax or 2:product,boundedsum\n"
    "  :disj v1           literal disjunction table (default)\n"
    "  :disj <spec>       numeric disjunction, e.g. maxminmin or 3:max,min\n"
    "  :neg <variant>     swap_tf | swap_tf_flip_i | complement_all | complement_tf\n"
    "  :impl negor[:<neg>,<disj>] | in1..in4[:<fuzzy>] | table19 | table21\n"
    "  :table <file>      load a subind / littable / adjacency file\n"
    "  :alphabet <p-r-s>  refined alphabet sizes, e.g. 3-1-2\n"
    "  :dim <n>           hypercomplex dimension\n"
    "  :dual <family>     nilpotent | idempotent | quasi\n"
    "  :show config       print the active configuration\n"
    "  :help              this text\n"
    "  :quit              leave the repl";

}  // namespace

int Session::exit_code(LineOut::Tag tag) {
  switch (tag) {
    case LineOut::Tag::parse_error: return 1;
    case LineOut::Tag::eval_error: return 2;
    case LineOut::Tag::config_error: return 3;
    default: return 0;
  }
}

Session::LineOut Session::command(const std::string& line) {
  auto ok = [](std::string text) {
    return LineOut{LineOut::Tag::config, std::move(text), {}};
  };
  auto words = split_ws(line);
  const std::string& cmd = words[0];
  auto need_arg = [&](const char* what) -> const std::string& {
    if (words.size() < 2) fail(Errc::domain, std::string(cmd) + " needs " + what);
    return words[1];
  };
  try {
    if (cmd == ":help") return ok(kHelp);
    if (cmd == ":order") {
      if (words.size() < 2) fail(Errc::domain, ":order needs a chain like T>I>F");
      std::string chain;
      for (size_t k = 1; k < words.size(); ++k) chain += words[k];
      lit::PrevOrder o = lit::PrevOrder::parse(chain);
      bool refined = false;
      for (lit::Lit l : o.chain())
        if (l.refined()) refined = true;
      if (refined) {
        // derive alphabet sizes from the chain, then validate
        quad::Alphabet al{0, 0, 0};
        for (lit::Lit l : o.chain()) {
          if (l.kind == lit::Kind::T) al.p++;
          else if (l.kind == lit::Kind::I) al.r++;
          else al.s++;
        }
        if (al.p < 1 || al.r < 1 || al.s < 1)
          fail(Errc::suborder, "a refined order must mention every class (T, I, F)");
        lit::PrevOrder norm = quad::normalize_order(o, al);
        quad::check_refined_order(norm, al);
        cfg.alphabet = al;
        cfg.order = o;
        return ok("order " + o.str() + " (alphabet " + al.str() + ")");
      }
      for (lit::Lit l : {lit::Lit::T(), lit::Lit::I(), lit::Lit::F()})
        if (!o.contains(l)) fail(Errc::domain, "a coarse order must cover T, I and F");
      cfg.order = o;
      return ok("order " + o.str());
    }
    if (cmd == ":conj") {
      const std::string& a = need_arg("a version or spec");
      if (a == "v1" || a == "v2" || a == "v3") {
        const char* chains[3] = {"I>F>T", "F>I>T", "F>T>I"};
        cfg.and_table = lit::Table::generate(lit::OpKind::conj,
                                             lit::PrevOrder::parse(chains[a[1] - '1']));
        return ok("literal conjunction " + a + " (order " + chains[a[1] - '1'] + ")");
      }
      cfg.conj = parse_conj_spec(a);
      return ok("numeric conjunction " + conj_desc(cfg.conj));
    }
    if (cmd == ":disj") {
      const std::string& a = need_arg("a version or spec");
      if (a == "v1") {
        cfg.or_table = lit::Table::generate(lit::OpKind::disj, lit::PrevOrder::parse("T>F>I"));
        return ok("literal disjunction v1 (order T>F>I)");
      }
      cfg.disj = parse_disj_spec(a);
      return ok("numeric disjunction " + disj_desc(cfg.disj));
    }
    if (cmd == ":neg") {
      cfg.neg = parse_neg(need_arg("a variant"));
      return ok("negation " + neg_variant_name(cfg.neg));
    }
    if (cmd == ":impl") {
      const std::string& a = need_arg("a class");
      if (a == "table19") {
        cfg.implies_table = lit::Table::implies_preset();
        return ok("literal implication preset restored");
      }
      if (a == "table21") {
        cfg.equiv_table = lit::Table::equiv_preset();
        return ok("literal equivalence preset restored");
      }
      auto main = split_on(a, ':');
      tif::ImplClass c;
      if (main[0] == "negor") {
        c.kind = tif::ImplClass::Kind::neg_or;
        if (main.size() > 1) {
          auto parts = split_on(main[1], ',');
          if (!parts[0].empty()) c.neg = parse_neg(parts[0]);
          if (parts.size() > 1 && !parts[1].empty()) c.disj = parse_disj_spec(parts[1]);
        }
      } else if (main[0].size() == 3 && main[0].rfind("in", 0) == 0 && main[0][2] >= '1' &&
                 main[0][2] <= '4') {
        c.kind = static_cast<tif::ImplClass::Kind>(static_cast<int>(tif::ImplClass::Kind::in1) +
                                                   (main[0][2] - '1'));
        if (main.size() > 1 && !main[1].empty()) c.impl = parse_fuzzy_impl(main[1]);
      } else {
        fail(Errc::domain, "implication classes: negor[:<neg>,<disj>] or in1..in4[:<fuzzy>]");
      }
      cfg.impl = c;
      return ok("implication " + impl_desc(cfg.impl));
    }
    if (cmd == ":table") {
      const std::string& path = need_arg("a file path");
      std::string text = io::read_file(path);
      switch (io::sniff(text)) {
        case io::FileKind::subind: {
          cfg.subind = std::make_shared<const ind::SubIndTable>(io::load_subind(text));
          return ok("sub-indeterminacy table loaded (r=" + std::to_string(cfg.subind->arity()) +
                    ")");
        }
        case io::FileKind::littable: {
          lit::Table t = io::load_littable(text);
          switch (t.op()) {
            case lit::OpKind::neg: cfg.neg_table = t; break;
            case lit::OpKind::conj: cfg.and_table = t; break;
            case lit::OpKind::disj: cfg.or_table = t; break;
            case lit::OpKind::xor_: cfg.xor_table = t; break;
            case lit::OpKind::sheffer: cfg.sheffer_table = t; break;
            case lit::OpKind::implies: cfg.implies_table = t; break;
            case lit::OpKind::equiv: cfg.equiv_table = t; break;
          }
          return ok("literal " + lit::op_name(t.op()) + " table loaded");
        }
        case io::FileKind::adjacency: {
          graph::Adjacency m = io::load_adjacency(text);
          auto v = graph::validate(m);
          if (!v)
            return ok("adjacency n=" + std::to_string(m.n) + ": INVALID, " + v.message +
                      (v.row >= 0 ? " at (" + std::to_string(v.row + 1) + "," +
                                        std::to_string(v.col + 1) + ")"
                                  : ""));
          return ok("adjacency n=" + std::to_string(m.n) + " " +
                    (m.directed ? "directed" : "undirected") + ": valid");
        }
        case io::FileKind::order: {
          return command(":order " + io::load_order(text).str());
        }
      }
      fail(Errc::io, "unrecognized table file");
    }
    if (cmd == ":alphabet") {
      const std::string& a = need_arg("sizes like 3-1-2");
      auto parts = split_on(a, '-');
      if (parts.size() != 3) fail(Errc::domain, ":alphabet takes p-r-s, e.g. 3-1-2");
      quad::Alphabet al;
      try {
        al.p = std::stoi(parts[0]);
        al.r = std::stoi(parts[1]);
        al.s = std::stoi(parts[2]);
      } catch (const std::exception&) {
        fail(Errc::domain, ":alphabet takes p-r-s, e.g. 3-1-2");
      }
      if (al.p < 1 || al.r < 1 || al.s < 1) fail(Errc::domain, "class sizes must be >= 1");
      cfg.alphabet = al;
      if (cfg.order_is_refined()) {
        // the old refined order no longer fits; fall back to the coarse chain
        cfg.order = cfg.coarse_order();
      }
      return ok("alphabet " + al.str());
    }
    if (cmd == ":dim") {
      const std::string& a = need_arg("a dimension >= 2");
      int n = 0;
      try {
        n = std::stoi(a);
      } catch (const std::exception&) {
        fail(Errc::domain, ":dim takes a number >= 2");
      }
      if (n < 2) fail(Errc::domain, "hypercomplex dimension must be >= 2");
      cfg.hc_dim = n;
      return ok("hypercomplex dimension " + std::to_string(n));
    }
    if (cmd == ":dual") {
      const std::string& a = need_arg("a family");
      if (a == "nilpotent") cfg.dual_family = hyper::DualFamily::nilpotent;
      else if (a == "idempotent") cfg.dual_family = hyper::DualFamily::idempotent;
      else if (a == "quasi" || a == "anti") cfg.dual_family = hyper::DualFamily::anti_idempotent;
      else fail(Errc::domain, "dual families: nilpotent, idempotent, quasi");
      return ok("dual family " + hyper::family_name(cfg.dual_family));
    }
    if (cmd == ":show") {
      if (words.size() > 1 && words[1] == "config")
        return ok(cfg.dump() + "fingerprint: " + cfg.fingerprint());
      fail(Errc::domain, "usage: :show config");
    }
    fail(Errc::domain, "unknown command " + cmd + " (:help lists commands)");
  } catch (const Error& e) {
    return {LineOut::Tag::config_error, e.what(), {}};
  }
}

Session::LineOut Session::run_line(const std::string& raw) {
  std::string line = raw;
  if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
  size_t a = line.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return {};
  size_t b = line.find_last_not_of(" \t\r\n");
  line = line.substr(a, b - a + 1);
  if (line[0] == ':') return command(line);
  try {
    Ast ast = parse(line);
    Value v = eval(ast, cfg);
    return {LineOut::Tag::value, to_string(v), kind_name(v)};
  } catch (const ParseError& e) {
    return {LineOut::Tag::parse_error, e.diag.str(), {}};
  } catch (const Error& e) {
    return {LineOut::Tag::eval_error, e.what(), {}};
  }
}

std::string Session::json_record(const std::string& input, const LineOut& out) const {
  nlohmann::json j;
  j["input"] = input;
  switch (out.tag) {
    case LineOut::Tag::value:
      j["value_kind"] = out.value_kind;
      j["value"] = out.text;
      break;
    case LineOut::Tag::config:
      j["value_kind"] = "config";
      j["value"] = out.text;
      break;
    default:
      j["error_kind"] = out.tag == LineOut::Tag::parse_error ? "parse"
                        : out.tag == LineOut::Tag::eval_error ? "eval"
                                                              : "config";
      j["error"] = out.text;
      break;
  }
  j["config_fingerprint"] = cfg.fingerprint();
  return j.dump();
}

int Session::batch(std::istream& in, std::ostream& out, bool keep_going, bool json) {
  std::string line;
  int code = 0;
  while (std::getline(in, line)) {
    LineOut r = run_line(line);
    if (r.tag == LineOut::Tag::empty) continue;
    if (json) {
      out << json_record(line, r) << "\n";
    } else if (r.tag == LineOut::Tag::value || r.tag == LineOut::Tag::config) {
      out << line << " => " << r.text << "\n";
    } else {
      out << line << " => error: " << r.text << "\n";
    }
    int c = exit_code(r.tag);
    if (c != 0) {
      if (!keep_going) return c;
      if (code == 0) code = c;
    }
  }
  return code;
}

int Session::repl(std::istream& in, std::ostream& out, bool color) {
  const char* red = color ? "\033[31m" : "";
  const char* dim = color ? "\033[2m" : "";
  const char* reset = color ? "\033[0m" : "";
  out << dim << "nsym repl; :help for commands, :quit to leave" << reset << "\n";
  std::string line;
  for (;;) {
    out << "nsym> " << std::flush;
    if (!std::getline(in, line)) break;
    if (line == ":quit" || line == ":q" || line == ":exit") break;
    LineOut r = run_line(line);
    switch (r.tag) {
      case LineOut::Tag::empty: break;
      case LineOut::Tag::value:
      case LineOut::Tag::config: out << r.text << "\n"; break;
      default: out << red << "error: " << r.text << reset << "\n"; break;
    }
  }
  return 0;
}

namespace {

struct SelfCase {
  std::vector<const char*> setup;
  const char* expr;
  const char* want;
};

const SelfCase kSelftest[] = {
    {{}, "(0.3,0.4,0.2) -> (0.7,0.1,0.4)", "(0.7,0.1,0.3)"},
    {{}, "(0.6,0.1,0.2) & (0.7,0.2,0.3)", "(0.6,0.2,0.3)"},
    {{}, "(0.6,0.1,0.2) & !(0.7,0.2,0.3)", "(0.3,0.2,0.7)"},
    {{}, "(0.6,0.1,0.2) & ((0.1,0.2,0.9) | (0.6,0.2,0.4))", "(0.6,0.2,0.4)"},
    {{}, "(0.6,0.1,0.2) & (0.3,0.2,0.7)", "(0.3,0.2,0.7)"},
    {{}, "(0.3,0.2) -> (0.7,0.4)", "(0.6,0.4)"},
    {{}, "d2((1,0,0), (0,1,1))", "1"},
    {{}, "d2((0.6,0.1,0.2), (0.7,0.2,0.3))", "0.1"},
    {{}, "anti(I)", "T|F"},
    {{}, "neut(T)", "I"},
    {{}, "non(F)", "T|I"},
    {{}, "!I", "I"},
    {{}, "I & F", "I"},
    {{":conj v2"}, "I & F", "F"},
    {{":conj v3"}, "T & I", "T"},
    {{}, "I -> F", "F"},
    {{}, "I -> T", "T"},
    {{}, "I <-> I", "T"},
    {{}, "(2+5I)*(1+I)", "2+12I"},
    {{}, "(1+I)*(1+I)", "1+3I"},
    {{}, "sharp(0.5+0.2I, 0.5+0.1I)", "1.4+0.1I"},
    {{":order T>I>F"}, "(1+T)*(1+F)", "1+2T+F"},
    {{":order F>I>T"}, "(1+T)*(1+F)", "1+T+2F"},
    {{}, "(1+2T+3I+4F)+(1+0T+1I-4F)", "2+2T+4I"},
    {{}, "3(1,0,0) * 9(0.7,0.1,0.3)", "9(0.7,0.1,0.3)"},
    {{}, "3(1,0,0) * 4(1,0,0)", "4(1,0,0)"},
    {{":dim 5"}, "h3*h4", "h2"},
    {{}, "i*j", "k"},
    {{}, "j*i", "-k"},
    {{}, "decompose(sqrt(7), 0, 1)", "2+I, I in (0.6,0.7)"},
    {{":order T1>T2>T3>I>F1>F2"},
     "(2-3T1+2T2+T3-I+5F1-3F2)*(0+T1-T2+0T3+5I-8F1+5F2)",
     "-2T2+2T3+18I-7F1-5F2"},
    {{":order T1>T2>T3>I>F1>F2"}, "absorb(T2,T3)", "T2"},
    {{":order T1>T2>T3>I>F1>F2"}, "absorb(T1,F1)", "T1"},
    {{":order T1>T2>T3>I>F1>F2"}, "absorb(I,F2)", "I"},
    {{}, "venn(T&F)", "{T&F}"},
    {{}, "(1+I1)*(1+I2)", "1+2I1+I2"},
};

}  // namespace

int Session::selftest(std::ostream& out) {
  int failed = 0, total = 0;
  for (const auto& c : kSelftest) {
    ++total;
    Session fresh;
    bool setup_ok = true;
    for (const char* s : c.setup) {
      auto r = fresh.run_line(s);
      if (r.tag != LineOut::Tag::config) {
        out << "[fail] setup '" << s << "': " << r.text << "\n";
        setup_ok = false;
        ++failed;
        break;
      }
    }
    if (!setup_ok) continue;
    auto r = fresh.run_line(c.expr);
    if (r.tag != LineOut::Tag::value || r.text != c.want) {
      out << "[fail] " << c.expr << " => " << r.text << " (want " << c.want << ")\n";
      ++failed;
    } else {
      out << "[ ok ] " << c.expr << " => " << r.text << "\n";
    }
  }
  out << (failed == 0 ? "selftest passed, " : "selftest FAILED, ") << (total - failed) << "/"
      << total << " cases\n";
  return failed == 0 ? 0 : 2;
}

}  // namespace nsym::expr
