#include <filesystem>
#include <fstream>
#include <numeric>
#include <set>

#include "doctest.h"
#include "indexcap/census.hpp"
#include "indexcap/error.hpp"
#include "oracles.hpp"

using namespace indexcap;

namespace {

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("indexcap_test_" + name);
}

bool same_report(const CensusReport& a, const CensusReport& b) {
  return a.n == b.n && a.mode == b.mode && a.total_classes == b.total_classes &&
         a.class_counts == b.class_counts && a.reducible_fraction == b.reducible_fraction &&
         a.fully_decomposed == b.fully_decomposed;
}

}  // namespace

TEST_SUITE("census") {
  TEST_CASE("class counts for small n") {
    const std::vector<std::size_t> expected = {1, 3, 16, 218};
    for (int n = 1; n <= 4; ++n) {
      CHECK(canonical_masks(n).size() == expected[n - 1]);
      CHECK(canonical_masks(n).size() == oracle::digraph_classes(n));
    }
    CHECK(canonical_masks(5).size() == 9608);
    CHECK_THROWS_AS(canonical_masks(0), InputError);
    CHECK_THROWS_AS(canonical_masks(7), InputError);
  }

  TEST_CASE("both strategies give the same masks") {
    for (int n = 1; n <= 5; ++n) {
      CensusOptions dedup;
      dedup.strategy = EnumerationStrategy::Dedup;
      CensusOptions orderly;
      orderly.strategy = EnumerationStrategy::Orderly;
      orderly.threads = 3;
      CHECK(canonical_masks(n, dedup) == canonical_masks(n, orderly));
    }
  }

  TEST_CASE("canonicalizer matches the brute-force canonical form") {
    oracle::Rng rng(401);
    for (int n = 2; n <= 5; ++n) {
      const Canonicalizer canon(n);
      CHECK(canon.num_permutations() ==
            static_cast<std::size_t>(std::tgamma(n + 1) + 0.5));
      for (int k = 0; k < 100; ++k) {
        const Problem p = oracle::random_problem(rng, n, 0.5);
        const std::uint64_t mask = adjacency_mask(p);
        CHECK(canon.canonical(mask) == canonical_form(p).bits);
        CHECK(canon.is_canonical(canon.canonical(mask)));
      }
    }
  }

  TEST_CASE("n=2 is fully reducible") {
    const CensusReport r = run_census(2, CensusMode::OneShot);
    CHECK(r.total_classes == 3);
    CHECK(r.class_counts.at(InteractionTag::NoEdges) == 1);
    CHECK(r.class_counts.at(InteractionTag::CompleteBipartite) == 1);
    // The single edge has A_1 = {} inside A_2 = {1}.
    CHECK(r.class_counts.at(InteractionTag::DegradedReducible) == 1);
    CHECK(r.class_counts.at(InteractionTag::Irreducible) == 0);
    CHECK(r.reducible_fraction == 1);
    CHECK_FALSE(r.fully_decomposed);
  }

  TEST_CASE("counts sum to the total and the fraction matches") {
    for (int n = 1; n <= 4; ++n) {
      const CensusReport r = run_census(n, CensusMode::RecursiveFixpoint);
      std::uint64_t sum = 0;
      for (const auto& [tag, count] : r.class_counts) sum += count;
      CHECK(sum == r.total_classes);
      const auto irreducible = r.class_counts.at(InteractionTag::Irreducible);
      CHECK(r.reducible_fraction == Rat(BigInt(r.total_classes - irreducible),
                                        BigInt(r.total_classes)));
      REQUIRE(r.fully_decomposed);
      CHECK(*r.fully_decomposed <= r.total_classes);
    }
  }

  TEST_CASE("n=5 regression anchor") {
    const CensusReport r = run_census(5, CensusMode::OneShot, {4, {}, {}});
    CHECK(r.total_classes == 9608);
    CHECK(r.total_classes - r.class_counts.at(InteractionTag::Irreducible) == 8599);
  }

  TEST_CASE("thread count does not change the report") {
    CensusOptions serial;
    CensusOptions parallel;
    parallel.threads = 4;
    for (CensusMode mode : {CensusMode::OneShot, CensusMode::RecursiveFixpoint}) {
      CHECK(same_report(run_census(4, mode, serial), run_census(4, mode, parallel)));
    }
  }

  TEST_CASE("relabelled representatives land in the same classes") {
    oracle::Rng rng(409);
    const int n = 4;
    const auto masks = canonical_masks(n);
    const std::set<std::uint64_t> known(masks.begin(), masks.end());
    std::set<std::uint64_t> seen;
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    for (std::uint64_t m : masks) {
      std::shuffle(perm.begin(), perm.end(), rng);
      const Problem q = problem_from_mask(n, m).permuted(perm);
      seen.insert(canonical_form(q).bits);
    }
    CHECK(seen == known);
  }

  TEST_CASE("decomposition") {
    CHECK(decompose(Problem::from_lists({{}})).fully_decomposed);
    CHECK(decompose(Problem::from_lists({{2}, {1}})).fully_decomposed);
    // A directed 3-cycle has no degraded pair and no split.
    const Decomposition cycle = decompose(Problem::from_lists({{3}, {1}, {2}}));
    CHECK_FALSE(cycle.fully_decomposed);
    CHECK(cycle.largest_irreducible == 3);
  }

  TEST_CASE("checkpoint round-trip and reuse") {
    const auto path = temp_file("checkpoint.bin");
    std::filesystem::remove(path);
    CensusOptions options;
    options.checkpoint = path;
    const auto first = canonical_masks(4, options);
    REQUIRE(std::filesystem::exists(path));
    CHECK(std::filesystem::file_size(path) == 8 * first.size());
    CHECK(read_checkpoint(path) == first);
    CHECK(canonical_masks(4, options) == first);

    // The first mask is the empty digraph, stored as eight zero bytes.
    std::ifstream is(path, std::ios::binary);
    char bytes[16];
    is.read(bytes, 16);
    CHECK(std::all_of(bytes, bytes + 8, [](char c) { return c == 0; }));
    CHECK(static_cast<unsigned char>(bytes[8]) == (first[1] & 0xFF));

    // A checkpoint for another n is rejected.
    CHECK_THROWS_AS(canonical_masks(3, options), InputError);
    std::ofstream(path, std::ios::binary) << "abc";
    CHECK_THROWS_AS(read_checkpoint(path), InputError);
    std::filesystem::remove(path);
  }

  TEST_CASE("mode names") {
    CHECK(parse_census_mode("one-shot") == CensusMode::OneShot);
    CHECK(parse_census_mode("recursive-fixpoint") == CensusMode::RecursiveFixpoint);
    CHECK_THROWS_AS(parse_census_mode("other"), InputError);
  }
}
