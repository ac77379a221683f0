#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "indexcap/bitset.hpp"

namespace indexcap {

/// Simple undirected graph with one adjacency bitset per vertex. Adjacency
/// stays symmetric with an empty diagonal.
class UGraph {
 public:
  UGraph() = default;
  explicit UGraph(std::size_t num_vertices);

  std::size_t size() const { return rows_.size(); }
  bool adjacent(std::size_t u, std::size_t v) const { return rows_[u].test(v); }
  const Bitset& neighbors(std::size_t u) const { return rows_[u]; }
  std::size_t degree(std::size_t u) const { return rows_[u].count(); }
  std::size_t num_edges() const;

  /// Throws std::invalid_argument on a self-loop or out-of-range vertex.
  void add_edge(std::size_t u, std::size_t v);
  void remove_edge(std::size_t u, std::size_t v);

  /// Edges {u, v} with u < v in ascending order.
  std::vector<std::pair<std::size_t, std::size_t>> edges() const;
  UGraph complement() const;
  /// Subgraph on `vertices`, vertex k of the result being vertices[k].
  UGraph induced(const std::vector<std::size_t>& vertices) const;

  /// Direct row access for builders that fill a row at once; the caller keeps
  /// the adjacency symmetric.
  Bitset& mutable_row(std::size_t u) { return rows_[u]; }
  bool is_symmetric() const;

  friend bool operator==(const UGraph&, const UGraph&) = default;

 private:
  std::vector<Bitset> rows_;
};

/// "p edge V E" header followed by "e u v" lines, vertices 1-indexed.
std::string to_dimacs(const UGraph& g);
/// Accepts the to_dimacs output plus "c" comment lines. Throws InputError.
UGraph parse_dimacs(std::string_view text);

namespace graphs {

UGraph complete(std::size_t n);
UGraph edgeless(std::size_t n);
UGraph cycle(std::size_t n);
UGraph path(std::size_t n);
UGraph complete_bipartite(std::size_t a, std::size_t b);
UGraph petersen();
/// Vertices are d-bit words, adjacent when they differ in one bit.
UGraph hypercube(int d);

}  // namespace graphs

}  // namespace indexcap
