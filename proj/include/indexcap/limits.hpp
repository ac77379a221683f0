#pragma once

#include <chrono>
#include <cstddef>
#include <optional>
#include <string>

namespace indexcap {

/// Size and time caps shared by every solver entry point.
struct SolverLimits {
  /// Largest vertex count allowed for a dense graph (confusion graphs,
  /// products, powers).
  std::size_t max_vertices = std::size_t{1} << 14;
  /// Largest number of maximal independent sets enumerated in one call.
  std::size_t mis_cap = 1'000'000;
  /// Largest column pool for column generation.
  std::size_t column_cap = 200'000;
  /// Largest generator count produced by a region composition.
  std::size_t generator_cap = 100'000;
  std::optional<double> timeout_secs;
};

/// Wall-clock deadline derived from SolverLimits::timeout_secs. A default
/// constructed deadline never expires.
class Deadline {
 public:
  Deadline() = default;
  explicit Deadline(std::optional<double> seconds);

  bool expired() const;
  /// Throws TimeoutError naming `what` once the deadline has passed. Only
  /// consults the clock every few hundred calls.
  void check(const char* what) const;

 private:
  std::optional<std::chrono::steady_clock::time_point> until_;
  mutable unsigned counter_ = 0;
};

}  // namespace indexcap
