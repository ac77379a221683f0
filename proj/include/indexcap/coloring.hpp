#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "indexcap/bitset.hpp"
#include "indexcap/limits.hpp"
#include "indexcap/rational.hpp"
#include "indexcap/ugraph.hpp"

namespace indexcap {

/// All inclusion-maximal independent sets, sorted lexicographically by their
/// vertex lists. Throws BudgetError past limits.mis_cap sets.
std::vector<Bitset> maximal_independent_sets(const UGraph& g,
                                             const SolverLimits& limits = {});

/// A largest clique, vertices ascending.
std::vector<std::size_t> maximum_clique(const UGraph& g, const Deadline& deadline = {});
/// A largest independent set, vertices ascending.
std::vector<std::size_t> maximum_independent_set(const UGraph& g,
                                                 const Deadline& deadline = {});

/// Maximum-weight independent set for non-negative weights. Among optimal
/// sets the one with the lexicographically smallest vertex list is returned.
std::pair<Bitset, Rat> max_weight_independent_set(const UGraph& g,
                                                  const std::vector<Rat>& weights,
                                                  const Deadline& deadline = {});

struct ColoringWitness {
  int colors_used = 0;
  std::vector<int> assignment;  // vertex -> color in [0, colors_used)
};

bool is_proper_coloring(const UGraph& g, const std::vector<int>& assignment);

/// DSATUR greedy coloring; an upper bound only.
ColoringWitness dsatur_coloring(const UGraph& g);

/// Exact chromatic number by DSATUR branch and bound, seeded with a maximum
/// clique and bounded below by max(omega, ceil(n / alpha)). Throws
/// InputError on the 0-vertex graph and TimeoutError past the deadline.
ColoringWitness chromatic_number(const UGraph& g, const SolverLimits& limits = {});

/// Smallest palette giving every vertex b colors with adjacent vertices
/// disjoint, computed as chi of the lexicographic product g . K_b.
long b_fold_chromatic(const UGraph& g, int b, const SolverLimits& limits = {});

struct FractionalWitness {
  Rat value;
  /// Independent sets with positive weight rho_S, sorted by set.
  std::vector<std::pair<Bitset, Rat>> weights;
  /// Optimal dual: a fractional clique with total weight `value`.
  std::vector<Rat> vertex_weights;
};

enum class FractionalMethod { Direct, ColumnGeneration };

/// Exact fractional chromatic number from the covering LP over independent
/// sets. Direct solves it over every maximal independent set; column
/// generation grows a pool priced by exact maximum-weight independent sets.
FractionalWitness fractional_chromatic(
    const UGraph& g, FractionalMethod method = FractionalMethod::ColumnGeneration,
    const SolverLimits& limits = {});

/// Re-checks a fractional witness with exact arithmetic: support sets are
/// independent, every vertex is covered with total weight >= 1, and the
/// weights sum to value. Returns a description of the first violation.
std::optional<std::string> find_witness_violation(const UGraph& g,
                                                  const FractionalWitness& w);

}  // namespace indexcap
