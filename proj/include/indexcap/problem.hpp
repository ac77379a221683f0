#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace indexcap {

/// Set of messages/receivers, bit i standing for node i (0-based). Node i is
/// written as i + 1 in every external format.
using NodeSet = std::uint64_t;
inline constexpr int kMaxNodes = 64;

constexpr NodeSet node_bit(int i) { return NodeSet{1} << i; }
constexpr NodeSet all_nodes(int n) {
  return n >= kMaxNodes ? ~NodeSet{0} : node_bit(n) - 1;
}

/// An index coding instance: receiver j wants message j and already holds
/// the messages in side_info(j). Equivalently a simple digraph with an edge
/// i -> j whenever i is in side_info(j).
class Problem {
 public:
  /// Throws InputError unless 1 <= n <= 64, j is not in A_j, and every A_j
  /// only names nodes below n.
  explicit Problem(std::vector<NodeSet> side_info);
  /// Builds from 1-indexed side-information lists.
  static Problem from_lists(const std::vector<std::vector<int>>& one_indexed);
  /// Builds from 0-based directed edges (from, to), i.e. from is in A_to.
  static Problem from_edges(int n, const std::vector<std::pair<int, int>>& edges);

  int size() const { return static_cast<int>(side_info_.size()); }
  NodeSet side_info(int j) const { return side_info_[j]; }
  const std::vector<NodeSet>& side_info() const { return side_info_; }

  bool has_edge(int from, int to) const {
    return (side_info_[to] >> from) & 1U;
  }
  int num_edges() const;
  /// Edges (from, to), sorted by (from, to).
  std::vector<std::pair<int, int>> edges() const;
  /// Out-neighbourhood of `from`: receivers that know message `from`.
  NodeSet successors(int from) const;

  /// The subproblem induced on `nodes`, relabelled in ascending order.
  Problem induced(NodeSet nodes) const;
  /// Relabels node v as perm[v].
  Problem permuted(const std::vector<int>& perm) const;
  Problem without_edge(int from, int to) const;
  Problem with_edge(int from, int to) const;

  friend bool operator==(const Problem&, const Problem&) = default;

 private:
  std::vector<NodeSet> side_info_;
};

/// Two-block split of the node set. Blocks are disjoint, nonempty, and cover
/// every node.
struct Partition2 {
  NodeSet left = 0;
  NodeSet right = 0;

  friend bool operator==(const Partition2&, const Partition2&) = default;
};

/// Throws InputError when `part` is not a valid two-block split of n nodes.
void validate_partition(const Partition2& part, int n);

enum class InteractionTag {
  NoEdges,
  OneWay,
  CompleteBipartite,
  DegradedReducible,
  Irreducible,
};

std::string_view to_string(InteractionTag tag);

/// Receiver j may drop message i: i is in A_j and A_i is a subset of A_j.
struct DegradedPair {
  int message = 0;   // i
  int receiver = 0;  // j

  friend bool operator==(const DegradedPair&, const DegradedPair&) = default;
};

struct InteractionClass {
  InteractionTag tag = InteractionTag::Irreducible;
  std::optional<Partition2> partition;  // NoEdges, OneWay, CompleteBipartite
  std::optional<DegradedPair> degraded;  // DegradedReducible
};

/// Parses the text problem format:
///
///   # comment
///   n=3
///   1: 2 3
///   2: 1
///   3: 1 2
///
/// Every receiver 1..n must have exactly one line.
Problem parse_problem(std::string_view text);
/// Inverse of parse_problem (no comments, ascending receivers).
std::string format_problem(const Problem& p);

/// Removes i from A_j whenever i is in A_j and A_i is a subset of A_j, scanning
/// (j, i) in ascending order and repeating passes until nothing changes.
Problem degraded_reduce(const Problem& p);

/// Strongly connected components. Component ids follow a topological order
/// of the condensation (sources first); ties between independent components
/// go to the one holding the smaller node.
std::vector<int> strongly_connected_components(const Problem& p);

/// Keeps edge i -> j only when i and j share a strongly connected component.
Problem remove_acyclic_edges(const Problem& p);

/// First applicable class in the order DegradedReducible, NoEdges, OneWay,
/// CompleteBipartite, Irreducible, with a witness for every class except
/// Irreducible.
InteractionClass classify_interaction(const Problem& p);

/// Canonical representative of a problem's isomorphism class: the
/// lexicographically smallest off-diagonal adjacency bitstring over all
/// relabellings. The string lists entries (i, j), i != j, row-major with
/// entry '1' meaning an edge i -> j.
struct CanonicalForm {
  int n = 0;
  /// First string character is the most significant of n(n-1) bits.
  std::uint64_t bits = 0;

  std::string to_string() const;
  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

inline constexpr int kDefaultCanonicalLimit = 6;
inline constexpr int kMaxCanonicalLimit = 8;

/// Brute force over all n! relabellings. Throws InputError when n exceeds
/// `max_n` (itself capped at 8, the largest n whose bitstring fits 64 bits).
CanonicalForm canonical_form(const Problem& p, int max_n = kDefaultCanonicalLimit);

/// Adjacency bitstring of `p` in the canonical_form layout (no relabelling).
std::uint64_t adjacency_mask(const Problem& p);
/// Inverse of adjacency_mask.
Problem problem_from_mask(int n, std::uint64_t mask);

}  // namespace indexcap
