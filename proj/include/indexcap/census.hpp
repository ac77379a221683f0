#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string_view>
#include <vector>

#include "indexcap/problem.hpp"
#include "indexcap/rational.hpp"

namespace indexcap {

inline constexpr int kMaxCensusNodes = 6;

enum class CensusMode { OneShot, RecursiveFixpoint };

std::string_view to_string(CensusMode mode);
CensusMode parse_census_mode(std::string_view text);

enum class EnumerationStrategy {
  /// Canonicalize every labelled digraph and deduplicate.
  Dedup,
  /// Keep a labelled digraph only when it is already its own canonical form,
  /// with a degree-based prefilter. Needs no dedup store.
  Orderly,
};

struct CensusOptions {
  unsigned threads = 1;
  /// Dedup for n <= 5, Orderly above, when unset.
  std::optional<EnumerationStrategy> strategy;
  /// Sorted canonical masks, read when the file exists and written otherwise.
  std::optional<std::filesystem::path> checkpoint;
};

/// Canonical forms (CanonicalForm::bits) of every digraph class on n nodes,
/// ascending.
std::vector<std::uint64_t> canonical_masks(int n, const CensusOptions& options = {});

/// One representative problem per isomorphism class, in canonical_masks order.
std::vector<Problem> enumerate_problems(int n, const CensusOptions& options = {});

/// Fast canonical form for n <= 6 using per-permutation lookup tables.
class Canonicalizer {
 public:
  explicit Canonicalizer(int n);

  int size() const { return n_; }
  std::uint64_t canonical(std::uint64_t mask) const;
  bool is_canonical(std::uint64_t mask) const;
  std::uint64_t apply(std::size_t perm_index, std::uint64_t mask) const;
  std::size_t num_permutations() const { return num_perms_; }
  /// Indices of the permutations that relabel `node` as node 0.
  const std::vector<std::size_t>& moving_to_front(int node) const { return by_front_[node]; }

 private:
  int n_;
  int bits_;
  int chunks_;
  std::size_t num_perms_ = 0;
  std::vector<std::uint32_t> table_;  // [perm][chunk][byte]
  std::vector<std::vector<std::size_t>> by_front_;
};

/// Outcome of recursively decomposing one problem.
struct Decomposition {
  /// Every leaf of the decomposition is a single message.
  bool fully_decomposed = false;
  /// Largest irreducible leaf (0 when fully decomposed).
  int largest_irreducible = 0;
};

/// Applies classify_interaction recursively: degraded pairs lead to the
/// degraded_reduce fixpoint, partitions to both induced subproblems.
Decomposition decompose(const Problem& p);

struct CensusReport {
  int n = 0;
  CensusMode mode = CensusMode::OneShot;
  std::uint64_t total_classes = 0;
  std::map<InteractionTag, std::uint64_t> class_counts;
  /// (total - Irreducible) / total, from the top-level classification.
  Rat reducible_fraction;
  /// RecursiveFixpoint only: classes whose decomposition ends in single
  /// messages.
  std::optional<std::uint64_t> fully_decomposed;
};

/// Classifies every class on n nodes. Reports are identical for any thread
/// count.
CensusReport run_census(int n, CensusMode mode, const CensusOptions& options = {});

/// Classification of each representative, in canonical_masks order.
std::vector<InteractionClass> classify_all(const std::vector<Problem>& problems,
                                           unsigned threads);

void write_checkpoint(const std::filesystem::path& path,
                      const std::vector<std::uint64_t>& masks);
std::vector<std::uint64_t> read_checkpoint(const std::filesystem::path& path);

}  // namespace indexcap
