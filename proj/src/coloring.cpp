#include "indexcap/coloring.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "indexcap/error.hpp"
#include "indexcap/lp.hpp"
#include "indexcap/products.hpp"

namespace indexcap {

namespace {

void require_vertices(const UGraph& g) {
  if (g.size() == 0) throw InputError("graph has no vertices");
}

// Bron-Kerbosch with Tomita pivoting on the complement: cliques of the
// complement are the independent sets of g.
class MisEnumerator {
 public:
  MisEnumerator(const UGraph& g, const SolverLimits& limits)
      : comp_(g.complement()), cap_(limits.mis_cap), deadline_(limits.timeout_secs) {}

  std::vector<Bitset> run() {
    Bitset r(comp_.size());
    Bitset p(comp_.size());
    p.set_all();
    Bitset x(comp_.size());
    expand(r, p, x);
    return std::move(found_);
  }

 private:
  void expand(Bitset& r, Bitset p, Bitset x) {
    deadline_.check("maximal independent sets");
    if (p.none()) {
      if (x.none()) {
        if (found_.size() >= cap_) {
          throw BudgetError("more than " + std::to_string(cap_) +
                            " maximal independent sets");
        }
        found_.push_back(r);
      }
      return;
    }
    std::size_t pivot = 0;
    std::size_t pivot_hits = 0;
    bool have_pivot = false;
    auto consider = [&](std::size_t u) {
      std::size_t hits = p.intersection_count(comp_.neighbors(u));
      if (!have_pivot || hits > pivot_hits) {
        pivot = u;
        pivot_hits = hits;
        have_pivot = true;
      }
    };
    p.for_each(consider);
    x.for_each(consider);

    Bitset branch = p;
    branch.subtract(comp_.neighbors(pivot));
    for (std::size_t v = branch.first(); v < branch.size(); v = branch.next(v)) {
      r.set(v);
      expand(r, p & comp_.neighbors(v), x & comp_.neighbors(v));
      r.reset(v);
      p.reset(v);
      x.set(v);
    }
  }

  UGraph comp_;
  std::size_t cap_;
  Deadline deadline_;
  std::vector<Bitset> found_;
};

// Maximum clique by branch and bound with a greedy colouring bound (MCQ).
// Vertices are relabelled by non-increasing degree so the colouring sees
// high-degree vertices first.
class CliqueSearch {
 public:
  CliqueSearch(const UGraph& g, const Deadline& deadline) : deadline_(deadline) {
    order_.resize(g.size());
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(), [&](std::size_t a, std::size_t b) {
      return g.degree(a) > g.degree(b);
    });
    graph_ = g.induced(order_);
  }

  std::vector<std::size_t> run() {
    Bitset p(graph_.size());
    p.set_all();
    std::vector<std::size_t> current;
    expand(current, p);
    std::vector<std::size_t> out;
    for (std::size_t v : best_) out.push_back(order_[v]);
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  void expand(std::vector<std::size_t>& current, Bitset p) {
    deadline_.check("maximum clique");
    std::vector<std::size_t> verts;
    std::vector<std::size_t> colors;
    greedy_color(p, verts, colors);
    for (std::size_t k = verts.size(); k-- > 0;) {
      if (current.size() + colors[k] <= best_.size()) return;
      std::size_t v = verts[k];
      current.push_back(v);
      Bitset next = p & graph_.neighbors(v);
      if (next.none()) {
        if (current.size() > best_.size()) best_ = current;
      } else {
        expand(current, std::move(next));
      }
      current.pop_back();
      p.reset(v);
    }
  }

  void greedy_color(const Bitset& p, std::vector<std::size_t>& verts,
                    std::vector<std::size_t>& colors) const {
    Bitset uncolored = p;
    std::size_t color = 0;
    while (uncolored.any()) {
      ++color;
      Bitset candidates = uncolored;
      for (std::size_t v = candidates.first(); v < candidates.size();
           v = candidates.next(v)) {
        candidates.subtract(graph_.neighbors(v));
        uncolored.reset(v);
        verts.push_back(v);
        colors.push_back(color);
      }
    }
  }

  const Deadline& deadline_;
  std::vector<std::size_t> order_;
  UGraph graph_;
  std::vector<std::size_t> best_;
};

// Maximum-weight independent set for positive integer weights. Vertices are
// branched on in ascending index order, include first, and the incumbent is
// only replaced on strict improvement; leaves are therefore visited in
// lexicographic order and the first optimum found is the smallest.
class WeightedIndependentSet {
 public:
  WeightedIndependentSet(const UGraph& g, std::vector<BigInt> weights,
                         const Deadline& deadline)
      : g_(g), w_(std::move(weights)), deadline_(deadline), best_(g.size()) {}

  std::pair<Bitset, BigInt> run(const Bitset& allowed) {
    Bitset r(g_.size());
    expand(r, 0, allowed);
    return {best_, best_weight_};
  }

 private:
  // Each clique of g holds at most one vertex of an independent set, so a
  // greedy clique partition of p bounds the weight still obtainable.
  BigInt bound(const Bitset& p) const {
    BigInt total = 0;
    Bitset left = p;
    while (left.any()) {
      std::size_t v = left.first();
      BigInt heaviest = w_[v];
      left.reset(v);
      Bitset candidates = left & g_.neighbors(v);
      while (candidates.any()) {
        std::size_t u = candidates.first();
        if (w_[u] > heaviest) heaviest = w_[u];
        left.reset(u);
        candidates.reset(u);
        candidates &= g_.neighbors(u);
      }
      total += heaviest;
    }
    return total;
  }

  void expand(Bitset& r, const BigInt& weight, Bitset p) {
    deadline_.check("maximum-weight independent set");
    if (p.none()) {
      if (!have_best_ || weight > best_weight_) {
        best_ = r;
        best_weight_ = weight;
        have_best_ = true;
      }
      return;
    }
    if (have_best_ && weight + bound(p) <= best_weight_) return;
    std::size_t v = p.first();
    p.reset(v);
    r.set(v);
    Bitset with = p;
    with.subtract(g_.neighbors(v));
    expand(r, weight + w_[v], std::move(with));
    r.reset(v);
    expand(r, weight, std::move(p));
  }

  const UGraph& g_;
  std::vector<BigInt> w_;
  const Deadline& deadline_;
  Bitset best_;
  BigInt best_weight_ = 0;
  bool have_best_ = false;
};

// Exact colouring by DSATUR branch and bound (Brelaz).
class DsaturSearch {
 public:
  DsaturSearch(const UGraph& g, const Deadline& deadline)
      : g_(g), deadline_(deadline), n_(g.size()) {}

  ColoringWitness run(ColoringWitness upper, const std::vector<std::size_t>& clique,
                      int lower) {
    best_ = std::move(upper);
    lower_ = lower;
    if (best_.colors_used <= lower_) return best_;
    palette_ = static_cast<std::size_t>(best_.colors_used);
    color_.assign(n_, -1);
    neighbor_colors_.assign(n_ * palette_, 0);
    saturation_.assign(n_, 0);
    degree_.resize(n_);
    for (std::size_t v = 0; v < n_; ++v) degree_[v] = g_.degree(v);

    int used = 0;
    for (std::size_t v : clique) assign(v, used++);
    search(clique.size(), used);
    return best_;
  }

 private:
  void assign(std::size_t v, int c) {
    color_[v] = c;
    g_.neighbors(v).for_each([&](std::size_t u) {
      if (neighbor_colors_[u * palette_ + c]++ == 0) ++saturation_[u];
    });
  }

  void unassign(std::size_t v) {
    int c = color_[v];
    color_[v] = -1;
    g_.neighbors(v).for_each([&](std::size_t u) {
      if (--neighbor_colors_[u * palette_ + c] == 0) --saturation_[u];
    });
  }

  // Returns true once the lower bound is met and the search can stop.
  bool search(std::size_t colored, int used) {
    deadline_.check("chromatic number");
    if (used >= best_.colors_used) return false;
    if (colored == n_) {
      best_.colors_used = used;
      best_.assignment = color_;
      return used <= lower_;
    }
    std::size_t pick = n_;
    for (std::size_t v = 0; v < n_; ++v) {
      if (color_[v] >= 0) continue;
      if (pick == n_ || saturation_[v] > saturation_[pick] ||
          (saturation_[v] == saturation_[pick] && degree_[v] > degree_[pick])) {
        pick = v;
      }
    }
    for (int c = 0; c < used; ++c) {
      if (neighbor_colors_[pick * palette_ + c] != 0) continue;
      assign(pick, c);
      bool done = search(colored + 1, used);
      unassign(pick);
      if (done) return true;
      if (used >= best_.colors_used) return false;
    }
    if (used + 1 < best_.colors_used) {
      assign(pick, used);
      bool done = search(colored + 1, used + 1);
      unassign(pick);
      if (done) return true;
    }
    return false;
  }

  const UGraph& g_;
  const Deadline& deadline_;
  std::size_t n_;
  std::size_t palette_ = 0;
  int lower_ = 0;
  ColoringWitness best_;
  std::vector<int> color_;
  std::vector<int> neighbor_colors_;
  std::vector<int> saturation_;
  std::vector<std::size_t> degree_;
};

Bitset extend_to_maximal(const UGraph& g, Bitset set) {
  Bitset blocked(g.size());
  set.for_each([&](std::size_t v) { blocked |= g.neighbors(v); });
  for (std::size_t v = 0; v < g.size(); ++v) {
    if (!set.test(v) && !blocked.test(v)) {
      set.set(v);
      blocked |= g.neighbors(v);
    }
  }
  return set;
}

struct CoveringSolution {
  Rat value;
  std::vector<Rat> set_weights;     // rho, one per pool entry
  std::vector<Rat> vertex_weights;  // y
};

// Solves the dual of the covering LP, max sum y s.t. sum_{v in S} y_v <= 1,
// whose duals are the covering weights rho.
CoveringSolution solve_covering(std::size_t n, const std::vector<Bitset>& pool,
                                const Deadline& deadline) {
  std::vector<std::vector<Rat>> a(pool.size(), std::vector<Rat>(n, Rat(0)));
  for (std::size_t s = 0; s < pool.size(); ++s) {
    pool[s].for_each([&](std::size_t v) { a[s][v] = 1; });
  }
  std::vector<Rat> b(pool.size(), Rat(1));
  std::vector<Rat> c(n, Rat(1));
  lp::Result r = lp::maximize(a, b, c, deadline);
  if (r.status != lp::Status::Optimal) {
    throw std::logic_error("covering dual unbounded: some vertex is in no set");
  }
  return {r.objective, std::move(r.dual), std::move(r.primal)};
}

FractionalWitness make_witness(const std::vector<Bitset>& pool, CoveringSolution sol) {
  FractionalWitness w;
  w.value = sol.value;
  for (std::size_t s = 0; s < pool.size(); ++s) {
    if (sol.set_weights[s] > 0) w.weights.emplace_back(pool[s], sol.set_weights[s]);
  }
  std::sort(w.weights.begin(), w.weights.end(),
            [](const auto& a, const auto& b) { return lex_less(a.first, b.first); });
  w.vertex_weights = std::move(sol.vertex_weights);
  return w;
}

}  // namespace

std::vector<Bitset> maximal_independent_sets(const UGraph& g, const SolverLimits& limits) {
  require_vertices(g);
  auto sets = MisEnumerator(g, limits).run();
  std::sort(sets.begin(), sets.end(), [](const Bitset& a, const Bitset& b) { return lex_less(a, b); });
  return sets;
}

std::vector<std::size_t> maximum_clique(const UGraph& g, const Deadline& deadline) {
  if (g.size() == 0) return {};
  return CliqueSearch(g, deadline).run();
}

std::vector<std::size_t> maximum_independent_set(const UGraph& g,
                                                 const Deadline& deadline) {
  return maximum_clique(g.complement(), deadline);
}

std::pair<Bitset, Rat> max_weight_independent_set(const UGraph& g,
                                                  const std::vector<Rat>& weights,
                                                  const Deadline& deadline) {
  if (weights.size() != g.size()) throw std::invalid_argument("one weight per vertex");
  BigInt scale = 1;
  for (const Rat& w : weights) {
    if (w < 0) throw std::invalid_argument("weights must be non-negative");
    scale = boost::multiprecision::lcm(scale, boost::multiprecision::denominator(w));
  }
  std::vector<BigInt> scaled(weights.size());
  Bitset positive(g.size());
  for (std::size_t v = 0; v < weights.size(); ++v) {
    scaled[v] = boost::multiprecision::numerator(weights[v]) * scale /
                boost::multiprecision::denominator(weights[v]);
    if (scaled[v] > 0) positive.set(v);
  }
  auto [set, weight] = WeightedIndependentSet(g, std::move(scaled), deadline).run(positive);
  return {std::move(set), Rat(weight, scale)};
}

bool is_proper_coloring(const UGraph& g, const std::vector<int>& assignment) {
  if (assignment.size() != g.size()) return false;
  for (int c : assignment) {
    if (c < 0) return false;
  }
  for (auto [u, v] : g.edges()) {
    if (assignment[u] == assignment[v]) return false;
  }
  return true;
}

ColoringWitness dsatur_coloring(const UGraph& g) {
  const std::size_t n = g.size();
  ColoringWitness out;
  out.assignment.assign(n, -1);
  std::vector<Bitset> seen(n, Bitset(n + 1));
  std::vector<std::size_t> saturation(n, 0);
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t pick = n;
    for (std::size_t v = 0; v < n; ++v) {
      if (out.assignment[v] >= 0) continue;
      if (pick == n || saturation[v] > saturation[pick] ||
          (saturation[v] == saturation[pick] && g.degree(v) > g.degree(pick))) {
        pick = v;
      }
    }
    std::size_t c = 0;
    while (seen[pick].test(c)) ++c;
    out.assignment[pick] = static_cast<int>(c);
    out.colors_used = std::max(out.colors_used, static_cast<int>(c) + 1);
    g.neighbors(pick).for_each([&](std::size_t u) {
      if (!seen[u].test(c)) {
        seen[u].set(c);
        ++saturation[u];
      }
    });
  }
  return out;
}

ColoringWitness chromatic_number(const UGraph& g, const SolverLimits& limits) {
  require_vertices(g);
  Deadline deadline(limits.timeout_secs);
  ColoringWitness upper = dsatur_coloring(g);
  auto clique = maximum_clique(g, deadline);
  int lower = static_cast<int>(clique.size());
  if (lower < upper.colors_used && g.size() <= 256) {
    const std::size_t alpha = maximum_independent_set(g, deadline).size();
    lower = std::max(lower, static_cast<int>((g.size() + alpha - 1) / alpha));
  }
  return DsaturSearch(g, deadline).run(std::move(upper), clique, lower);
}

long b_fold_chromatic(const UGraph& g, int b, const SolverLimits& limits) {
  require_vertices(g);
  if (b < 1) throw InputError("b must be positive");
  if (b == 1) return chromatic_number(g, limits).colors_used;
  return chromatic_number(lexicographic_product(g, graphs::complete(b), limits), limits)
      .colors_used;
}

FractionalWitness fractional_chromatic(const UGraph& g, FractionalMethod method,
                                       const SolverLimits& limits) {
  require_vertices(g);
  Deadline deadline(limits.timeout_secs);

  if (method == FractionalMethod::Direct) {
    auto pool = maximal_independent_sets(g, limits);
    return make_witness(pool, solve_covering(g.size(), pool, deadline));
  }

  std::vector<Bitset> pool;
  {
    ColoringWitness start = dsatur_coloring(g);
    std::vector<Bitset> classes(static_cast<std::size_t>(start.colors_used),
                                Bitset(g.size()));
    for (std::size_t v = 0; v < g.size(); ++v) classes[start.assignment[v]].set(v);
    for (auto& cls : classes) {
      Bitset full = extend_to_maximal(g, std::move(cls));
      if (std::find(pool.begin(), pool.end(), full) == pool.end()) {
        pool.push_back(std::move(full));
      }
    }
  }
  while (true) {
    CoveringSolution sol = solve_covering(g.size(), pool, deadline);
    auto [column, weight] = max_weight_independent_set(g, sol.vertex_weights, deadline);
    if (weight <= 1) return make_witness(pool, std::move(sol));
    Bitset full = extend_to_maximal(g, std::move(column));
    if (std::find(pool.begin(), pool.end(), full) != pool.end()) {
      throw std::logic_error("column generation priced an existing column");
    }
    if (pool.size() >= limits.column_cap) {
      throw BudgetError("column pool exceeded " + std::to_string(limits.column_cap));
    }
    pool.push_back(std::move(full));
  }
}

std::optional<std::string> find_witness_violation(const UGraph& g,
                                                  const FractionalWitness& w) {
  std::vector<Rat> cover(g.size(), Rat(0));
  Rat total = 0;
  for (const auto& [set, weight] : w.weights) {
    if (set.size() != g.size()) return "support set has the wrong universe size";
    if (weight < 0 || weight > 1) return "weight outside [0, 1]";
    for (std::size_t v = set.first(); v < set.size(); v = set.next(v)) {
      if (set.intersects(g.neighbors(v))) {
        return "support set is not independent at vertex " + std::to_string(v + 1);
      }
      cover[v] += weight;
    }
    total += weight;
  }
  for (std::size_t v = 0; v < g.size(); ++v) {
    if (cover[v] < 1) return "vertex " + std::to_string(v + 1) + " covered below 1";
  }
  if (total != w.value) return "weights sum to " + to_pq_string(total) + ", not the value";
  return std::nullopt;
}

}  // namespace indexcap
