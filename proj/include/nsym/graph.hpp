#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "nsym/error.hpp"
#include "nsym/tif.hpp"

namespace nsym::graph {

/// Adjacency entry over the cognitive-map alphabet: no connection, direct,
/// inverse, or indeterminate connection.
enum class Entry : int8_t { zero, plus, minus, indet };

std::string entry_str(Entry e);

struct Adjacency {
  int n = 0;
  bool directed = true;
  std::vector<Entry> cells;  // row-major

  Entry at(int r, int c) const;
  Entry& at(int r, int c);
  static Adjacency make(int n, bool directed);
};

struct Verdict {
  bool ok = true;
  std::string message;
  int row = -1, col = -1;

  explicit operator bool() const { return ok; }
};

/// Diagonal must be zero; undirected matrices must be symmetric. The first
/// offending cell is reported.
Verdict validate(const Adjacency& m);

/// Directed graph with triple-labelled edges and optional per-vertex triples
/// (stored, never propagated).
struct TifGraph {
  int n = 0;
  std::map<std::pair<int, int>, tif::Triple> edges;
  std::vector<std::optional<tif::Triple>> vertex_value;

  explicit TifGraph(int n_) : n(n_), vertex_value(n_) {}
  void add_edge(int u, int v, const tif::Triple& label);
  const tif::Triple& edge(int u, int v) const;
};

/// Folds the chosen conjunction over the labels along an explicit vertex
/// list. The path needs at least one edge; a missing edge is an error.
tif::Triple path_value(const TifGraph& g, std::span<const int> path,
                       const tif::ConjVariant& conj);

}  // namespace nsym::graph
