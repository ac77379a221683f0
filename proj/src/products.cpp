#include "indexcap/products.hpp"

#include <stdexcept>
#include <string>

#include "indexcap/error.hpp"

namespace indexcap {

namespace {

std::size_t product_size(const UGraph& g1, const UGraph& g2, const SolverLimits& limits) {
  const std::size_t a = g1.size();
  const std::size_t b = g2.size();
  if (a != 0 && b > limits.max_vertices / a) {
    throw BudgetError("product of " + std::to_string(a) + " and " + std::to_string(b) +
                      " vertices exceeds the budget of " +
                      std::to_string(limits.max_vertices));
  }
  return a * b;
}

// Row of (u1, u2) assembled one fiber {v1} x V(g2) at a time by `rule`.
template <typename FiberRule>
UGraph build(const UGraph& g1, const UGraph& g2, const SolverLimits& limits,
             FiberRule rule) {
  const std::size_t n = product_size(g1, g2, limits);
  const std::size_t b = g2.size();
  UGraph out(n);
  for (std::size_t u1 = 0; u1 < g1.size(); ++u1) {
    for (std::size_t u2 = 0; u2 < b; ++u2) {
      Bitset& row = out.mutable_row(u1 * b + u2);
      for (std::size_t v1 = 0; v1 < g1.size(); ++v1) {
        rule(row, u1, u2, v1, v1 * b);
      }
      row.reset(u1 * b + u2);
    }
  }
  return out;
}

}  // namespace

UGraph disjunctive_product(const UGraph& g1, const UGraph& g2, const SolverLimits& limits) {
  const std::size_t b = g2.size();
  return build(g1, g2, limits,
               [&](Bitset& row, std::size_t u1, std::size_t u2, std::size_t v1,
                   std::size_t base) {
                 if (g1.adjacent(u1, v1)) {
                   for (std::size_t v2 = 0; v2 < b; ++v2) row.set(base + v2);
                 } else {
                   g2.neighbors(u2).for_each([&](std::size_t v2) { row.set(base + v2); });
                 }
               });
}

UGraph lexicographic_product(const UGraph& g1, const UGraph& g2,
                             const SolverLimits& limits) {
  const std::size_t b = g2.size();
  return build(g1, g2, limits,
               [&](Bitset& row, std::size_t u1, std::size_t u2, std::size_t v1,
                   std::size_t base) {
                 if (g1.adjacent(u1, v1)) {
                   for (std::size_t v2 = 0; v2 < b; ++v2) row.set(base + v2);
                 } else if (u1 == v1) {
                   g2.neighbors(u2).for_each([&](std::size_t v2) { row.set(base + v2); });
                 }
               });
}

UGraph cartesian_product(const UGraph& g1, const UGraph& g2, const SolverLimits& limits) {
  return build(g1, g2, limits,
               [&](Bitset& row, std::size_t u1, std::size_t u2, std::size_t v1,
                   std::size_t base) {
                 if (g1.adjacent(u1, v1)) {
                   row.set(base + u2);
                 } else if (u1 == v1) {
                   g2.neighbors(u2).for_each([&](std::size_t v2) { row.set(base + v2); });
                 }
               });
}

UGraph disjunctive_power(const UGraph& g, int k, const SolverLimits& limits) {
  if (k < 1) throw std::invalid_argument("power must be positive");
  UGraph out = g;
  for (int i = 1; i < k; ++i) out = disjunctive_product(out, g, limits);
  return out;
}

}  // namespace indexcap
