#include "nsym/graph.hpp"

namespace nsym::graph {

std::string entry_str(Entry e) {
  switch (e) {
    case Entry::zero: return "0";
    case Entry::plus: return "1";
    case Entry::minus: return "-1";
    case Entry::indet: return "I";
  }
  return "?";
}

Entry Adjacency::at(int r, int c) const {
  if (r < 0 || r >= n || c < 0 || c >= n) fail(Errc::domain, "adjacency index out of range");
  return cells[r * n + c];
}

Entry& Adjacency::at(int r, int c) {
  if (r < 0 || r >= n || c < 0 || c >= n) fail(Errc::domain, "adjacency index out of range");
  return cells[r * n + c];
}

Adjacency Adjacency::make(int n, bool directed) {
  if (n < 1) fail(Errc::domain, "adjacency needs at least one vertex");
  return {n, directed, std::vector<Entry>(static_cast<size_t>(n) * n, Entry::zero)};
}

Verdict validate(const Adjacency& m) {
  if (m.n < 1 || m.cells.size() != static_cast<size_t>(m.n) * m.n)
    return {false, "matrix is not square", -1, -1};
  for (int r = 0; r < m.n; ++r)
    if (m.at(r, r) != Entry::zero)
      return {false, "diagonal cell must be 0", r, r};
  if (!m.directed) {
    for (int r = 0; r < m.n; ++r)
      for (int c = r + 1; c < m.n; ++c)
        if (m.at(r, c) != m.at(c, r))
          return {false,
                  "undirected matrix is asymmetric: cell is " + entry_str(m.at(r, c)) +
                      " but transpose is " + entry_str(m.at(c, r)),
                  r, c};
  }
  return {};
}

void TifGraph::add_edge(int u, int v, const tif::Triple& label) {
  if (u < 0 || u >= n || v < 0 || v >= n) fail(Errc::domain, "vertex out of range");
  edges.insert_or_assign({u, v}, label);
}

const tif::Triple& TifGraph::edge(int u, int v) const {
  auto it = edges.find({u, v});
  if (it == edges.end())
    fail(Errc::domain,
         "no edge " + std::to_string(u) + " -> " + std::to_string(v));
  return it->second;
}

tif::Triple path_value(const TifGraph& g, std::span<const int> path,
                       const tif::ConjVariant& conj) {
  if (path.size() < 2) fail(Errc::domain, "path needs at least one edge");
  tif::Triple acc = g.edge(path[0], path[1]);
  for (size_t k = 2; k < path.size(); ++k)
    acc = tif::conjoin(conj, acc, g.edge(path[k - 1], path[k]));
  return acc;
}

}  // namespace nsym::graph
