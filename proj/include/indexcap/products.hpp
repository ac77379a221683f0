#pragma once

#include "indexcap/limits.hpp"
#include "indexcap/ugraph.hpp"

namespace indexcap {

// Graph products on V(g1) x V(g2), the pair (u1, u2) stored as vertex
// u1 * |V(g2)| + u2. All throw BudgetError when the product would exceed
// limits.max_vertices.

/// (u1,u2) ~ (v1,v2) iff u1 ~ v1 or u2 ~ v2.
UGraph disjunctive_product(const UGraph& g1, const UGraph& g2,
                           const SolverLimits& limits = {});

/// (u1,u2) ~ (v1,v2) iff u1 ~ v1, or u1 = v1 and u2 ~ v2. Not commutative.
UGraph lexicographic_product(const UGraph& g1, const UGraph& g2,
                             const SolverLimits& limits = {});

/// (u1,u2) ~ (v1,v2) iff (u1 = v1 and u2 ~ v2) or (u2 = v2 and u1 ~ v1).
UGraph cartesian_product(const UGraph& g1, const UGraph& g2,
                         const SolverLimits& limits = {});

/// k-fold disjunctive product of g with itself; k = 1 returns g.
UGraph disjunctive_power(const UGraph& g, int k, const SolverLimits& limits = {});

}  // namespace indexcap
