#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "indexcap/limits.hpp"
#include "indexcap/problem.hpp"
#include "indexcap/ugraph.hpp"

namespace indexcap {

/// Per-message bit lengths t = (t_1, ..., t_n). A zero length projects the
/// message away.
class LengthTuple {
 public:
  /// Throws InputError on a negative length or a total above 62 bits.
  explicit LengthTuple(std::vector<int> lengths);
  static LengthTuple uniform(int n, int length);

  int size() const { return static_cast<int>(lengths_.size()); }
  int operator[](int j) const { return lengths_[j]; }
  const std::vector<int>& lengths() const { return lengths_; }
  int total() const { return total_; }
  bool all_zero() const { return total_ == 0; }
  /// Lengths of the nodes in `nodes`, ascending.
  LengthTuple restricted(NodeSet nodes) const;

  friend bool operator==(const LengthTuple&, const LengthTuple&) = default;

 private:
  std::vector<int> lengths_;
  int total_ = 0;
};

/// Parses "1,1,0" style comma-separated lengths.
LengthTuple parse_lengths(std::string_view text);

/// Message value of each node, x_j in [0, 2^{t_j}).
using MessageTuple = std::vector<std::uint64_t>;

/// Bijection between message tuples and vertex indices. Message j occupies
/// bits [offset(j), offset(j) + t_j) of the index; message 0 sits in the least
/// significant bits.
class VertexCodec {
 public:
  explicit VertexCodec(const LengthTuple& t);

  std::uint64_t num_vertices() const { return std::uint64_t{1} << total_bits_; }
  int total_bits() const { return total_bits_; }
  int offset(int j) const { return offsets_[j]; }
  int length(int j) const { return lengths_[j]; }
  /// Bits of the vertex index that hold message j.
  std::uint64_t message_mask(int j) const;
  /// Union of message_mask over `nodes`.
  std::uint64_t messages_mask(NodeSet nodes) const;

  /// Throws InputError when the tuple has the wrong arity or a value does not
  /// fit its length.
  std::uint64_t encode(const MessageTuple& x) const;
  MessageTuple decode(std::uint64_t vertex) const;

 private:
  std::vector<int> lengths_;
  std::vector<int> offsets_;
  int total_bits_ = 0;
};

/// Throws InputError unless t has one entry per receiver of p.
void validate_lengths(const Problem& p, const LengthTuple& t);
/// Throws BudgetError when 2^{sum t} exceeds limits.max_vertices.
void check_vertex_budget(const LengthTuple& t, const SolverLimits& limits);

/// True iff x_j != z_j while x_i = z_i for every i in A_j. `j` is 0-based.
bool confusable_at(const Problem& p, const LengthTuple& t, const MessageTuple& x,
                   const MessageTuple& z, int j);

/// Confusion graph on prod 2^{t_j} vertices (indexed by VertexCodec) where two
/// tuples are adjacent iff they are confusable at some receiver.
UGraph build_confusion_graph(const Problem& p, const LengthTuple& t,
                             const SolverLimits& limits = {});

enum class Product { Disjunctive, Lexicographic, Cartesian, None };

std::string_view to_string(Product product);

/// Cross-edge pattern of a partition, the hypothesis side of each product
/// factorization.
enum class CrossPattern {
  None,            // no edge between the blocks
  LeftToRight,     // edges only from left to right
  RightToLeft,     // edges only from right to left
  CompleteBothWays,
  Mixed,
};

CrossPattern cross_pattern(const Problem& p, const Partition2& part);

/// Adds every left -> right edge to p.
Problem complete_left_to_right(const Problem& p, const Partition2& part);

/// Maps each vertex of the whole confusion graph to its index in a product of
/// the two block confusion graphs, (u_left, u_right) -> u_left * |V_right| +
/// u_right, block vertices indexed by the VertexCodec of each subproblem.
std::vector<std::uint64_t> product_vertex_map(const LengthTuple& t,
                                              const Partition2& part);

/// Builds the confusion graph of p (of its left-to-right completion when the
/// partition is one-way left to right) and checks it edge for edge against the
/// three products of the block confusion graphs. The product predicted by the
/// cross pattern is tried first, then Disjunctive, Lexicographic, Cartesian.
Product verify_factorization(const Problem& p, const Partition2& part,
                             const LengthTuple& t, const SolverLimits& limits = {});

}  // namespace indexcap
