#include "doctest.h"
#include "indexcap/capacity.hpp"
#include "indexcap/error.hpp"
#include "oracles.hpp"

using namespace indexcap;

namespace {

Problem three_message() { return Problem::from_lists({{2, 3}, {1}, {1, 2}}); }

std::vector<Rat> pt(std::initializer_list<Rat> xs) { return std::vector<Rat>(xs); }

RateRegion unit(int dim) { return RateRegion(dim, {std::vector<Rat>(dim, Rat(1))}); }

RateRegion triangle() { return RateRegion(2, {pt({1, 0}), pt({0, 1})}); }

// Grid points with step 1/den in [0, 1]^dim.
std::vector<std::vector<Rat>> grid(int dim, int den) {
  std::vector<std::vector<Rat>> out{{}};
  for (int d = 0; d < dim; ++d) {
    std::vector<std::vector<Rat>> next;
    for (const auto& prefix : out) {
      for (int k = 0; k <= den; ++k) {
        auto p = prefix;
        p.emplace_back(k, den);
        next.push_back(std::move(p));
      }
    }
    out = std::move(next);
  }
  return out;
}

bool same_membership(const RateRegion& a, const RateRegion& b, int den) {
  for (const auto& p : grid(a.dimension(), den)) {
    if (region_contains(a, p) != region_contains(b, p)) return false;
  }
  return true;
}

}  // namespace

TEST_SUITE("capacity") {
  TEST_CASE("denominator kind names") {
    for (DenomKind k : {DenomKind::CeilLogChi, DenomKind::LogChi, DenomKind::LogChiF}) {
      CHECK(parse_denom_kind(to_string(k)) == k);
    }
    CHECK_THROWS_AS(parse_denom_kind("log"), InputError);
  }

  TEST_CASE("achievable point examples") {
    const RatePoint empty = achievable_point(Problem::from_lists({{}, {}}), LengthTuple({1, 1}),
                                             DenomKind::CeilLogChi);
    CHECK(empty.chromatic == 4);
    CHECK(empty.log_base() == 4);
    CHECK(empty.rates() == pt({Rat(1, 2), Rat(1, 2)}));

    const RatePoint cube = achievable_point(Problem::from_lists({{2, 3}, {1, 3}, {1, 2}}),
                                            LengthTuple({1, 1, 1}), DenomKind::CeilLogChi);
    CHECK(cube.chromatic == 2);
    CHECK(cube.rates() == pt({1, 1, 1}));

    const RatePoint three =
        achievable_point(three_message(), LengthTuple({1, 1, 1}), DenomKind::LogChiF);
    CHECK(three.chromatic == 4);
    CHECK(three.rates() == pt({Rat(1, 2), Rat(1, 2), Rat(1, 2)}));
    CHECK(three.rates_decimal()[0] == "0.500000000000");

    CHECK_THROWS_AS(achievable_point(three_message(), LengthTuple({0, 0, 0}), DenomKind::LogChi),
                    InputError);
  }

  TEST_CASE("irrational rates are rounded down on the decimal grid") {
    RatePoint p;
    p.t = {1, 2};
    p.kind = DenomKind::LogChi;
    p.chromatic = 3;
    // 1 / log2(3) = 0.6309297535714574...
    CHECK(p.rates_decimal() == std::vector<std::string>{"0.630929753571", "1.261859507142"});
    CHECK(p.rates()[0] == Rat(630929753571, 1000000000000));
    p.kind = DenomKind::CeilLogChi;
    CHECK(p.log_base() == 4);
    CHECK(p.rates() == pt({Rat(1, 2), 1}));
    p.kind = DenomKind::LogChiF;
    p.chromatic = Rat(5, 2);
    CHECK(p.rates_decimal()[0] == "0.756470797366");
  }

  TEST_CASE("unbounded points") {
    RatePoint p;
    p.t = {1};
    p.chromatic = 1;
    CHECK(p.unbounded());
    CHECK_THROWS_AS(p.rates(), std::logic_error);
  }

  TEST_CASE("exact rate comparison") {
    CHECK(rate_leq(1, Rat(4), 1, Rat(2)));
    CHECK_FALSE(rate_leq(1, Rat(2), 1, Rat(4)));
    CHECK(rate_leq(1, Rat(3), 2, Rat(9)));
    CHECK(rate_leq(2, Rat(9), 1, Rat(3)));
    CHECK(rate_leq(1, Rat(5, 2), 1, Rat(5, 2)));
    CHECK(rate_leq(3, Rat(8), 1, Rat(2)));
    CHECK_FALSE(rate_leq(2, Rat(3), 1, Rat(2)));
    CHECK_THROWS_AS(rate_leq(1, Rat(1), 1, Rat(2)), std::invalid_argument);
  }

  TEST_CASE("length tuples are lexicographic and skip zero") {
    const auto ts = length_tuples(2, 2);
    std::vector<std::vector<int>> got;
    for (const auto& t : ts) got.push_back(t.lengths());
    CHECK(got == std::vector<std::vector<int>>{{0, 1}, {0, 2}, {1, 0}, {1, 1}, {2, 0}});
  }

  TEST_CASE("single message region is the unit interval") {
    for (int budget : {1, 3}) {
      const RateRegion r = inner_bound(Problem::from_lists({{}}), budget, DenomKind::LogChiF);
      CHECK(r == unit(1));
    }
  }

  TEST_CASE("inner bound of two independent messages") {
    const RateRegion r = inner_bound(Problem::from_lists({{}, {}}), 2, DenomKind::LogChi);
    const auto& gens = r.generators();
    CHECK(std::find(gens.begin(), gens.end(), pt({1, 0})) != gens.end());
    CHECK(std::find(gens.begin(), gens.end(), pt({0, 1})) != gens.end());
    CHECK(std::find(gens.begin(), gens.end(), pt({Rat(1, 2), Rat(1, 2)})) != gens.end());
    CHECK(prune_redundant(r) == triangle());
  }

  TEST_CASE("three-message inner bound holds the uniform point") {
    const RateRegion r = inner_bound(three_message(), 3, DenomKind::LogChiF);
    CHECK(region_contains(r, pt({Rat(1, 2), Rat(1, 2), Rat(1, 2)})));
  }

  TEST_CASE("inner bounds grow with the budget") {
    oracle::Rng rng(307);
    for (int k = 0; k < 8; ++k) {
      const int n = oracle::uniform_int(rng, 1, 3);
      const Problem p = oracle::random_problem(rng, n, 0.5);
      const RateRegion small = inner_bound(p, 2, DenomKind::LogChiF);
      const RateRegion large = inner_bound(p, 3, DenomKind::LogChiF);
      for (const auto& g : small.generators()) CHECK(region_contains(large, g));
    }
  }

  TEST_CASE("thread count does not change the points") {
    CapacityOptions serial;
    CapacityOptions parallel;
    parallel.threads = 4;
    const auto a = enumerate_points(three_message(), 3, DenomKind::LogChi, serial);
    const auto b = enumerate_points(three_message(), 3, DenomKind::LogChi, parallel);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      CHECK(a[i].t == b[i].t);
      CHECK(a[i].chromatic == b[i].chromatic);
    }
  }

  TEST_CASE("denominator kinds are ordered") {
    const LengthTuple t({1, 2, 1});
    const auto ceil_chi = achievable_point(three_message(), t, DenomKind::CeilLogChi);
    const auto chi = achievable_point(three_message(), t, DenomKind::LogChi);
    const auto chi_f = achievable_point(three_message(), t, DenomKind::LogChiF);
    CHECK(point_leq(ceil_chi, chi));
    CHECK(point_leq(chi, chi_f));
  }

  TEST_CASE("k-fold lengths never need more colors than the k-th power") {
    oracle::Rng rng(311);
    for (int trial = 0; trial < 15; ++trial) {
      const int n = oracle::uniform_int(rng, 1, 3);
      const Problem p = oracle::random_problem(rng, n, 0.5);
      std::vector<int> t(static_cast<std::size_t>(n), 0);
      t[static_cast<std::size_t>(oracle::uniform_int(rng, 0, n - 1))] = 1;
      std::vector<int> t2;
      for (int tj : t) t2.push_back(2 * tj);
      const long c1 = chromatic_number(build_confusion_graph(p, LengthTuple(t))).colors_used;
      const long c2 = chromatic_number(build_confusion_graph(p, LengthTuple(t2))).colors_used;
      CHECK(c2 <= c1 * c1);
    }
  }

  TEST_CASE("broadcast bounds examples") {
    const auto cube = broadcast_rate_upper(Problem::from_lists({{2, 3}, {1, 3}, {1, 2}}), 2);
    REQUIRE(cube.steps.size() == 2);
    CHECK(cube.steps[0].chi_f == 2);
    CHECK(cube.steps[0].beta_decimal == "1.000000000000");
    const auto empty = broadcast_rate_upper(Problem::from_lists({{}, {}}), 1);
    CHECK(empty.steps[0].chi_f == 4);
    CHECK(empty.steps[0].beta_decimal == "2.000000000000");
    const auto three = broadcast_rate_upper(three_message(), 2);
    CHECK(three.steps[0].chi_f == 4);
    CHECK(three.steps[0].beta_decimal == "2.000000000000");
    CHECK(three.non_increasing);
  }

  TEST_CASE("region construction drops dominated generators") {
    const RateRegion r(2, {pt({Rat(1, 2), Rat(1, 2)}), pt({Rat(1, 4), Rat(1, 2)}),
                           pt({0, 0}), pt({Rat(1, 2), Rat(1, 2)})});
    CHECK(r.generators() == std::vector<std::vector<Rat>>{pt({Rat(1, 2), Rat(1, 2)})});
    CHECK(RateRegion(2, {pt({0, 0})}).is_origin_only());
    CHECK_THROWS_AS(RateRegion(2, {pt({1})}), InputError);
    CHECK_THROWS_AS(RateRegion(1, {pt({-1})}), InputError);
  }

  TEST_CASE("membership examples") {
    CHECK(region_contains(triangle(), pt({Rat(1, 2), Rat(1, 2)})));
    CHECK_FALSE(region_contains(triangle(), pt({Rat(2, 3), Rat(2, 3)})));
    CHECK(region_contains(triangle(), pt({0, 0})));
    CHECK(region_contains(RateRegion(2, {}), pt({0, 0})));
    CHECK_FALSE(region_contains(RateRegion(2, {}), pt({0, Rat(1, 9)})));
    CHECK_THROWS_AS(region_contains(triangle(), pt({0})), InputError);
    CHECK_THROWS_AS(region_contains(triangle(), pt({-1, 0})), InputError);
  }

  TEST_CASE("membership agrees with the half-space oracle") {
    oracle::Rng rng(313);
    for (int k = 0; k < 20; ++k) {
      const int dim = oracle::uniform_int(rng, 1, 3);
      std::vector<std::vector<Rat>> gens;
      for (int g = oracle::uniform_int(rng, 1, 4); g > 0; --g) {
        std::vector<Rat> x;
        for (int d = 0; d < dim; ++d) x.emplace_back(oracle::uniform_int(rng, 0, 4), 4);
        gens.push_back(x);
      }
      const RateRegion r(dim, gens);
      const auto h = oracle::hull_halfspaces(gens, static_cast<std::size_t>(dim));
      for (const auto& p : grid(dim, 6)) CHECK(region_contains(r, p) == h.contains(p));
    }
  }

  TEST_CASE("time sharing examples") {
    CHECK(compose_timeshare(unit(1), unit(1)) == triangle());
    const RateRegion r2(2, {pt({Rat(1, 3), 1}), pt({1, Rat(1, 5)})});
    const RateRegion embedded = compose_timeshare(RateRegion(1, {}), r2);
    CHECK(embedded.generators() ==
          std::vector<std::vector<Rat>>{pt({0, Rat(1, 3), 1}), pt({0, 1, Rat(1, 5)})});
    // max(R_1, R_2) + R_3 <= 1
    const RateRegion mixed = compose_timeshare(unit(2), unit(1));
    for (const auto& p : grid(3, 4)) {
      CHECK(region_contains(mixed, p) == (std::max(p[0], p[1]) + p[2] <= 1));
    }
  }

  TEST_CASE("product examples") {
    CHECK(compose_product(unit(1), unit(1)) == unit(2));
    const RateRegion r2(2, {pt({Rat(1, 3), 1}), pt({1, Rat(1, 5)})});
    CHECK(compose_product(RateRegion(1, {}), r2).generators() ==
          std::vector<std::vector<Rat>>{pt({0, Rat(1, 3), 1}), pt({0, 1, Rat(1, 5)})});
    const RateRegion prism = compose_product(triangle(), unit(1));
    for (const auto& p : grid(3, 4)) {
      CHECK(region_contains(prism, p) == (p[0] + p[1] <= 1 && p[2] <= 1));
    }
    SolverLimits few;
    few.generator_cap = 3;
    CHECK_THROWS_AS(compose_product(triangle(), triangle(), few), BudgetError);
  }

  TEST_CASE("pruning keeps the region") {
    const RateRegion r(2, {pt({1, 0}), pt({0, 1}), pt({Rat(1, 2), Rat(1, 2)}),
                           pt({Rat(1, 3), Rat(1, 2)})});
    const RateRegion pruned = prune_redundant(r);
    CHECK(pruned == triangle());
    CHECK(same_membership(r, pruned, 6));
  }

  TEST_CASE("disjoint blocks compose by time sharing") {
    // Two messages with no side information: every t gives a complete graph.
    const Problem p = Problem::from_lists({{}, {}});
    const RateRegion whole = prune_redundant(inner_bound(p, 3, DenomKind::LogChiF));
    const RateRegion block = inner_bound(Problem::from_lists({{}}), 3, DenomKind::LogChiF);
    CHECK(whole == prune_redundant(compose_timeshare(block, block)));
  }

  TEST_CASE("fully interacting blocks compose as a product") {
    const Problem p = Problem::from_lists({{2}, {1}});
    const RateRegion whole = prune_redundant(inner_bound(p, 2, DenomKind::LogChiF));
    const RateRegion block = inner_bound(Problem::from_lists({{}}), 2, DenomKind::LogChiF);
    CHECK(whole == prune_redundant(compose_product(block, block)));
  }
}
