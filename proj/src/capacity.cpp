#include "indexcap/capacity.hpp"

#include <mpfr.h>

#include <algorithm>
#include <stdexcept>
#include <string>

#include "indexcap/error.hpp"
#include "indexcap/lp.hpp"
#include "indexcap/parallel.hpp"

namespace indexcap {

namespace {

constexpr mpfr_prec_t kLogPrecision = 512;

class MpfrValue {
 public:
  MpfrValue() { mpfr_init2(value_, kLogPrecision); }
  ~MpfrValue() { mpfr_clear(value_); }
  MpfrValue(const MpfrValue&) = delete;
  MpfrValue& operator=(const MpfrValue&) = delete;

  mpfr_ptr get() { return value_; }

 private:
  mpfr_t value_;
};

// log2(x) is rational only for integer powers of two; returns the exponent.
std::optional<unsigned> exact_log2(const Rat& x) {
  if (boost::multiprecision::denominator(x) != 1) return std::nullopt;
  BigInt num = boost::multiprecision::numerator(x);
  if (num <= 0) return std::nullopt;
  unsigned k = 0;
  while (num > 1) {
    if ((num & 1) != 0) return std::nullopt;
    num >>= 1;
    ++k;
  }
  return k;
}

BigInt pow10(int digits) {
  BigInt out = 1;
  for (int i = 0; i < digits; ++i) out *= 10;
  return out;
}

// floor(scale * numerator_factor * log2(x)^sign / divisor) where sign is +1
// or -1; x > 1 must not be a power of two.
BigInt floor_log_expression(const Rat& x, long numerator_factor, long divisor,
                            const BigInt& scale, bool reciprocal) {
  MpfrValue value;
  MpfrValue tmp;
  mpfr_set_q(value.get(), x.backend().data(), MPFR_RNDN);
  mpfr_log2(value.get(), value.get(), MPFR_RNDN);
  if (reciprocal) mpfr_ui_div(value.get(), 1, value.get(), MPFR_RNDN);
  mpfr_set_z(tmp.get(), scale.backend().data(), MPFR_RNDN);
  mpfr_mul(value.get(), value.get(), tmp.get(), MPFR_RNDN);
  mpfr_mul_si(value.get(), value.get(), numerator_factor, MPFR_RNDN);
  mpfr_div_si(value.get(), value.get(), divisor, MPFR_RNDN);
  BigInt out;
  mpfr_get_z(out.backend().data(), value.get(), MPFR_RNDD);
  return out;
}

// t / log2(base), exact or rounded down to a multiple of 10^-digits.
Rat rate_value(long t, const Rat& base, int digits) {
  if (t == 0) return 0;
  if (auto k = exact_log2(base)) return Rat(t, static_cast<long>(*k));
  const BigInt scale = pow10(digits);
  return Rat(floor_log_expression(base, t, 1, scale, true), scale);
}

// log2(x) / t truncated to `digits` decimals.
std::string log_over_decimal(const Rat& x, long t, int digits) {
  if (auto k = exact_log2(x)) return to_decimal(Rat(static_cast<long>(*k), t), digits);
  const BigInt scale = pow10(digits);
  return to_decimal(Rat(floor_log_expression(x, 1, t, scale, false), scale), digits);
}

void check_dimension(const RateRegion& r, const std::vector<Rat>& point) {
  if (static_cast<int>(point.size()) != r.dimension()) {
    throw InputError("point has dimension " + std::to_string(point.size()) +
                     ", region has " + std::to_string(r.dimension()));
  }
  for (const Rat& x : point) {
    if (x < 0) throw InputError("rate points must be non-negative");
  }
}

bool leq_all(const std::vector<Rat>& a, const std::vector<Rat>& b) {
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (a[k] > b[k]) return false;
  }
  return true;
}

// Membership in the down-closed hull of `gens`: maximize theta subject to
// theta * p <= sum lambda_i g_i, sum lambda <= 1, theta <= 1.
bool hull_contains(const std::vector<std::vector<Rat>>& gens, const std::vector<Rat>& p) {
  if (std::all_of(p.begin(), p.end(), [](const Rat& x) { return x == 0; })) return true;
  if (gens.empty()) return false;
  for (const auto& g : gens) {
    if (leq_all(p, g)) return true;
  }
  const std::size_t k = gens.size();
  std::vector<std::vector<Rat>> a;
  std::vector<Rat> b;
  for (std::size_t d = 0; d < p.size(); ++d) {
    if (p[d] == 0) continue;
    std::vector<Rat> row(k + 1, Rat(0));
    for (std::size_t i = 0; i < k; ++i) row[i] = -gens[i][d];
    row[k] = p[d];
    a.push_back(std::move(row));
    b.push_back(0);
  }
  std::vector<Rat> simplex_row(k + 1, Rat(1));
  simplex_row[k] = 0;
  a.push_back(std::move(simplex_row));
  b.push_back(1);
  std::vector<Rat> theta_row(k + 1, Rat(0));
  theta_row[k] = 1;
  a.push_back(std::move(theta_row));
  b.push_back(1);
  std::vector<Rat> c(k + 1, Rat(0));
  c[k] = 1;
  lp::Result r = lp::maximize(a, b, c);
  return r.status == lp::Status::Optimal && r.objective == 1;
}

void append_tuples(int n, int remaining, std::vector<int>& prefix,
                   std::vector<LengthTuple>& out) {
  if (static_cast<int>(prefix.size()) == n) {
    if (std::any_of(prefix.begin(), prefix.end(), [](int x) { return x != 0; })) {
      out.emplace_back(prefix);
    }
    return;
  }
  for (int v = 0; v <= remaining; ++v) {
    prefix.push_back(v);
    append_tuples(n, remaining - v, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::string_view to_string(DenomKind kind) {
  switch (kind) {
    case DenomKind::CeilLogChi: return "ceil-log-chi";
    case DenomKind::LogChi: return "log-chi";
    case DenomKind::LogChiF: return "log-chi-f";
  }
  return "?";
}

DenomKind parse_denom_kind(std::string_view text) {
  if (text == "ceil-log-chi") return DenomKind::CeilLogChi;
  if (text == "log-chi") return DenomKind::LogChi;
  if (text == "log-chi-f") return DenomKind::LogChiF;
  throw InputError("unknown rate kind '" + std::string(text) +
                   "' (expected ceil-log-chi, log-chi, or log-chi-f)");
}

Rat RatePoint::log_base() const {
  if (kind != DenomKind::CeilLogChi) return chromatic;
  Rat base = 1;
  while (base < chromatic) base *= 2;
  return base;
}

std::vector<Rat> RatePoint::rates(int digits) const {
  if (unbounded()) throw std::logic_error("unbounded rate point has no coordinates");
  const Rat base = log_base();
  std::vector<Rat> out;
  out.reserve(t.size());
  for (int tj : t) out.push_back(rate_value(tj, base, digits));
  return out;
}

std::vector<std::string> RatePoint::rates_decimal(int digits) const {
  std::vector<std::string> out;
  for (const Rat& r : rates(digits)) out.push_back(to_decimal(r, digits));
  return out;
}

bool rate_leq(long t1, const Rat& base1, long t2, const Rat& base2) {
  if (base1 <= 1 || base2 <= 1) throw std::invalid_argument("bases must exceed 1");
  if (t1 < 0 || t2 < 0) throw std::invalid_argument("lengths must be non-negative");
  return pow(base2, static_cast<unsigned>(t1)) <= pow(base1, static_cast<unsigned>(t2));
}

bool point_leq(const RatePoint& a, const RatePoint& b) {
  if (a.t.size() != b.t.size()) throw std::invalid_argument("dimension mismatch");
  if (b.unbounded()) return true;
  if (a.unbounded()) return false;
  const Rat base_a = a.log_base();
  const Rat base_b = b.log_base();
  for (std::size_t j = 0; j < a.t.size(); ++j) {
    if (!rate_leq(a.t[j], base_a, b.t[j], base_b)) return false;
  }
  return true;
}

RateRegion::RateRegion(int dimension, std::vector<std::vector<Rat>> generators)
    : dimension_(dimension) {
  if (dimension < 0) throw InputError("negative region dimension");
  std::vector<std::vector<Rat>> kept;
  for (auto& g : generators) {
    if (static_cast<int>(g.size()) != dimension) {
      throw InputError("generator dimension does not match the region");
    }
    for (const Rat& x : g) {
      if (x < 0) throw InputError("generator coordinates must be non-negative");
    }
    if (std::all_of(g.begin(), g.end(), [](const Rat& x) { return x == 0; })) continue;
    kept.push_back(std::move(g));
  }
  std::sort(kept.begin(), kept.end());
  kept.erase(std::unique(kept.begin(), kept.end()), kept.end());
  for (std::size_t i = 0; i < kept.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < kept.size() && !dominated; ++j) {
      dominated = i != j && leq_all(kept[i], kept[j]);
    }
    if (!dominated) generators_.push_back(kept[i]);
  }
}

RatePoint achievable_point(const Problem& p, const LengthTuple& t, DenomKind kind,
                           const SolverLimits& limits) {
  validate_lengths(p, t);
  if (t.all_zero()) throw InputError("length tuple must not be all zero");
  const UGraph g = build_confusion_graph(p, t, limits);
  RatePoint point;
  point.t = t.lengths();
  point.kind = kind;
  if (kind == DenomKind::LogChiF) {
    point.chromatic = fractional_chromatic(g, FractionalMethod::ColumnGeneration, limits).value;
  } else {
    point.chromatic = chromatic_number(g, limits).colors_used;
  }
  return point;
}

std::vector<LengthTuple> length_tuples(int n, int budget) {
  if (n < 1) throw InputError("need at least one message");
  if (budget < 1) throw InputError("length budget must be at least 1");
  std::vector<LengthTuple> out;
  std::vector<int> prefix;
  append_tuples(n, budget, prefix, out);
  return out;
}

std::vector<RatePoint> enumerate_points(const Problem& p, int budget, DenomKind kind,
                                        const CapacityOptions& options) {
  const auto tuples = length_tuples(p.size(), budget);
  for (const auto& t : tuples) check_vertex_budget(t, options.limits);
  std::vector<RatePoint> points(tuples.size());
  parallel_for(tuples.size(), options.threads, [&](std::size_t i) {
    points[i] = achievable_point(p, tuples[i], kind, options.limits);
  });
  return points;
}

RateRegion inner_bound(const Problem& p, int budget, DenomKind kind,
                       const CapacityOptions& options) {
  std::vector<std::vector<Rat>> gens;
  for (const auto& point : enumerate_points(p, budget, kind, options)) {
    if (!point.unbounded()) gens.push_back(point.rates());
  }
  return RateRegion(p.size(), std::move(gens));
}

BroadcastRates broadcast_rate_upper(const Problem& p, int t_max,
                                    const SolverLimits& limits) {
  if (t_max < 1) throw InputError("t_max must be at least 1");
  for (int t = 1; t <= t_max; ++t) {
    check_vertex_budget(LengthTuple::uniform(p.size(), t), limits);
  }
  BroadcastRates out;
  for (int t = 1; t <= t_max; ++t) {
    const UGraph g = build_confusion_graph(p, LengthTuple::uniform(p.size(), t), limits);
    BroadcastStep step;
    step.t = t;
    step.chi_f = fractional_chromatic(g, FractionalMethod::ColumnGeneration, limits).value;
    step.beta_decimal = log_over_decimal(step.chi_f, t, kRateDigits);
    if (!out.steps.empty()) {
      // beta_t <= beta_s  <=>  chi_t^s <= chi_s^t
      const BroadcastStep& prev = out.steps.back();
      if (pow(step.chi_f, static_cast<unsigned>(prev.t)) >
          pow(prev.chi_f, static_cast<unsigned>(t))) {
        out.non_increasing = false;
      }
    }
    out.steps.push_back(std::move(step));
  }
  return out;
}

RateRegion compose_timeshare(const RateRegion& r1, const RateRegion& r2) {
  const int n1 = r1.dimension();
  const int n2 = r2.dimension();
  std::vector<std::vector<Rat>> gens;
  for (const auto& g : r1.generators()) {
    auto v = g;
    v.resize(static_cast<std::size_t>(n1 + n2), Rat(0));
    gens.push_back(std::move(v));
  }
  for (const auto& h : r2.generators()) {
    std::vector<Rat> v(static_cast<std::size_t>(n1), Rat(0));
    v.insert(v.end(), h.begin(), h.end());
    gens.push_back(std::move(v));
  }
  return RateRegion(n1 + n2, std::move(gens));
}

RateRegion compose_product(const RateRegion& r1, const RateRegion& r2,
                           const SolverLimits& limits) {
  // An origin-only factor contributes the zero vector.
  auto with_origin = [](const RateRegion& r) {
    auto gens = r.generators();
    if (gens.empty()) gens.emplace_back(static_cast<std::size_t>(r.dimension()), Rat(0));
    return gens;
  };
  const auto a = with_origin(r1);
  const auto b = with_origin(r2);
  if (a.size() * b.size() > limits.generator_cap) {
    throw BudgetError("product region needs " + std::to_string(a.size() * b.size()) +
                      " generators, above the cap of " +
                      std::to_string(limits.generator_cap));
  }
  std::vector<std::vector<Rat>> gens;
  gens.reserve(a.size() * b.size());
  for (const auto& g : a) {
    for (const auto& h : b) {
      auto v = g;
      v.insert(v.end(), h.begin(), h.end());
      gens.push_back(std::move(v));
    }
  }
  return RateRegion(r1.dimension() + r2.dimension(), std::move(gens));
}

bool region_contains(const RateRegion& r, const std::vector<Rat>& point) {
  check_dimension(r, point);
  return hull_contains(r.generators(), point);
}

RateRegion prune_redundant(const RateRegion& r) {
  std::vector<std::vector<Rat>> kept = r.generators();
  for (std::size_t i = kept.size(); i-- > 0;) {
    std::vector<std::vector<Rat>> others;
    for (std::size_t j = 0; j < kept.size(); ++j) {
      if (j != i) others.push_back(kept[j]);
    }
    if (hull_contains(others, kept[i])) kept.erase(kept.begin() + static_cast<long>(i));
  }
  return RateRegion(r.dimension(), std::move(kept));
}

}  // namespace indexcap
