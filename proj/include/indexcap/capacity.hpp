#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "indexcap/coloring.hpp"
#include "indexcap/confusion.hpp"
#include "indexcap/limits.hpp"
#include "indexcap/problem.hpp"
#include "indexcap/rational.hpp"

namespace indexcap {

/// Which chromatic quantity of the confusion graph sets the broadcast length.
enum class DenomKind {
  CeilLogChi,  // R_j <= t_j / ceil(log2 chi)
  LogChi,      // R_j <= t_j / log2 chi
  LogChiF,     // R_j <= t_j / log2 chi_f
};

std::string_view to_string(DenomKind kind);
/// Accepts "ceil-log-chi", "log-chi", "log-chi-f".
DenomKind parse_denom_kind(std::string_view text);

/// Digits used for decimal rendering and for the rational evaluation of
/// logarithmic rates.
inline constexpr int kRateDigits = 12;

/// Componentwise-maximal rate tuple for one length tuple, kept symbolic:
/// R_j = t_j / log2(base) with base = 2^ceil(log2 chi), chi, or chi_f.
struct RatePoint {
  std::vector<int> t;
  DenomKind kind = DenomKind::LogChiF;
  /// chi (an integer) or chi_f.
  Rat chromatic;

  /// A chromatic value of 1 means nothing needs to be sent.
  bool unbounded() const { return chromatic <= 1; }
  Rat log_base() const;
  /// Exact rational when log2(base) is an integer, otherwise rounded down to
  /// a multiple of 10^-digits. Throws std::logic_error when unbounded.
  std::vector<Rat> rates(int digits = kRateDigits) const;
  /// Truncated decimal strings.
  std::vector<std::string> rates_decimal(int digits = kRateDigits) const;
};

/// t1 / log2(base1) <= t2 / log2(base2), decided as base2^t1 <= base1^t2.
/// Bases must exceed 1.
bool rate_leq(long t1, const Rat& base1, long t2, const Rat& base2);

/// a <= b in every coordinate, compared exactly.
bool point_leq(const RatePoint& a, const RatePoint& b);

/// Down-closed convex hull of finitely many non-negative rational points.
class RateRegion {
 public:
  /// Drops duplicate and coordinatewise-dominated generators. Throws
  /// InputError on a dimension mismatch or a negative coordinate.
  RateRegion(int dimension, std::vector<std::vector<Rat>> generators);

  int dimension() const { return dimension_; }
  const std::vector<std::vector<Rat>>& generators() const { return generators_; }
  bool is_origin_only() const { return generators_.empty(); }

  friend bool operator==(const RateRegion&, const RateRegion&) = default;

 private:
  int dimension_ = 0;
  std::vector<std::vector<Rat>> generators_;
};

/// Rate point of p at t for the given denominator kind.
RatePoint achievable_point(const Problem& p, const LengthTuple& t, DenomKind kind,
                           const SolverLimits& limits = {});

/// Every length tuple with non-negative entries, sum in [1, budget], sorted
/// lexicographically.
std::vector<LengthTuple> length_tuples(int n, int budget);

struct CapacityOptions {
  SolverLimits limits;
  unsigned threads = 1;
};

/// Rate points for every tuple from length_tuples(n, budget), in the same
/// order. Unbounded points are kept here and dropped by inner_bound.
std::vector<RatePoint> enumerate_points(const Problem& p, int budget, DenomKind kind,
                                        const CapacityOptions& options = {});

/// Inner approximation of the capacity region from every t with sum t <=
/// budget. Larger budgets never shrink it.
RateRegion inner_bound(const Problem& p, int budget, DenomKind kind,
                       const CapacityOptions& options = {});

struct BroadcastStep {
  int t = 0;
  Rat chi_f;  // of the confusion graph at (t, ..., t)
  std::string beta_decimal;  // log2(chi_f) / t
};

struct BroadcastRates {
  std::vector<BroadcastStep> steps;
  /// beta_t never increases along the sequence.
  bool non_increasing = true;
};

/// Upper bounds log2(chi_f(Gamma_(t,...,t))) / t on the optimal broadcast
/// rate for t = 1..t_max.
BroadcastRates broadcast_rate_upper(const Problem& p, int t_max,
                                    const SolverLimits& limits = {});

/// Time division: generators (g, 0) and (0, h) for g in r1, h in r2.
RateRegion compose_timeshare(const RateRegion& r1, const RateRegion& r2);

/// Simultaneous operation: generators (g, h). Throws BudgetError past
/// limits.generator_cap.
RateRegion compose_product(const RateRegion& r1, const RateRegion& r2,
                           const SolverLimits& limits = {});

/// Exact membership: point <= some convex combination of generators. Throws
/// InputError on a dimension mismatch or negative coordinate.
bool region_contains(const RateRegion& r, const std::vector<Rat>& point);

/// Removes generators lying in the region spanned by the others (exact LP).
RateRegion prune_redundant(const RateRegion& r);

}  // namespace indexcap
