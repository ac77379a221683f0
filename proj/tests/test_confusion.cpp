#include "doctest.h"
#include "indexcap/confusion.hpp"
#include "indexcap/error.hpp"
#include "indexcap/products.hpp"
#include "oracles.hpp"

using namespace indexcap;

namespace {

Problem three_message() { return Problem::from_lists({{2, 3}, {1}, {1, 2}}); }

bool edges_subset(const UGraph& a, const UGraph& b) {
  for (auto [u, v] : a.edges()) {
    if (!b.adjacent(u, v)) return false;
  }
  return true;
}

}  // namespace

TEST_SUITE("ugraph") {
  TEST_CASE("named graphs") {
    CHECK(graphs::complete(4).num_edges() == 6);
    CHECK(graphs::edgeless(3).num_edges() == 0);
    CHECK(graphs::cycle(5).num_edges() == 5);
    CHECK(graphs::path(4).num_edges() == 3);
    CHECK(graphs::complete_bipartite(2, 3).num_edges() == 6);
    CHECK(graphs::petersen().num_edges() == 15);
    CHECK(graphs::hypercube(3).num_edges() == 12);
    CHECK(graphs::hypercube(3).adjacent(0b010, 0b110));
    CHECK(graphs::complete(5).complement() == graphs::edgeless(5));
  }

  TEST_CASE("adjacency stays symmetric") {
    UGraph g(4);
    g.add_edge(0, 3);
    CHECK(g.adjacent(3, 0));
    CHECK(g.is_symmetric());
    g.remove_edge(3, 0);
    CHECK(g.num_edges() == 0);
    CHECK_THROWS_AS(g.add_edge(1, 1), std::invalid_argument);
    CHECK_THROWS_AS(g.add_edge(1, 4), std::invalid_argument);
  }

  TEST_CASE("DIMACS round-trip and errors") {
    const UGraph g = graphs::petersen();
    const std::string text = to_dimacs(g);
    CHECK(text.rfind("p edge 10 15\n", 0) == 0);
    CHECK(parse_dimacs(text) == g);
    CHECK(parse_dimacs("c a comment\np edge 3 1\ne 1 3\n") == [] {
      UGraph h(3);
      h.add_edge(0, 2);
      return h;
    }());
    CHECK_THROWS_AS(parse_dimacs("e 1 2\n"), InputError);
    CHECK_THROWS_AS(parse_dimacs("p edge 2 1\ne 1 3\n"), InputError);
    CHECK_THROWS_AS(parse_dimacs("p edge 2 1\ne 1 1\n"), InputError);
    CHECK_THROWS_AS(parse_dimacs("p edge 2 1\nx 1 2\n"), InputError);
  }
}

TEST_SUITE("confusion") {
  TEST_CASE("length tuples") {
    CHECK(parse_lengths("1,0,2") == LengthTuple({1, 0, 2}));
    CHECK(LengthTuple({1, 0, 2}).total() == 3);
    CHECK(LengthTuple::uniform(3, 2) == LengthTuple({2, 2, 2}));
    CHECK(LengthTuple({3, 1, 2}).restricted(node_bit(0) | node_bit(2)) == LengthTuple({3, 2}));
    CHECK_THROWS_AS(LengthTuple({1, -1}), InputError);
    CHECK_THROWS_AS(LengthTuple({40, 40}), InputError);
    CHECK_THROWS_AS(parse_lengths("1,,2"), InputError);
    CHECK_THROWS_AS(validate_lengths(three_message(), LengthTuple({1, 1})), InputError);
  }

  TEST_CASE("vertex codec layout") {
    const VertexCodec codec(LengthTuple({1, 0, 2}));
    CHECK(codec.num_vertices() == 8);
    CHECK(codec.offset(0) == 0);
    CHECK(codec.offset(2) == 1);
    CHECK(codec.message_mask(2) == 0b110);
    CHECK(codec.message_mask(1) == 0);
    CHECK(codec.encode({1, 0, 2}) == 0b101);
    CHECK_THROWS_AS(codec.encode({2, 0, 0}), InputError);
    CHECK_THROWS_AS(codec.encode({0, 0}), InputError);
    for (std::uint64_t v = 0; v < codec.num_vertices(); ++v) CHECK(codec.encode(codec.decode(v)) == v);
  }

  TEST_CASE("confusable_at examples") {
    const Problem p = three_message();
    const LengthTuple t({1, 1, 1});
    CHECK(confusable_at(p, t, {0, 0, 0}, {1, 0, 0}, 0));
    CHECK_FALSE(confusable_at(p, t, {0, 0, 0}, {1, 0, 0}, 1));
    CHECK_FALSE(confusable_at(p, t, {0, 0, 0}, {1, 1, 0}, 0));
  }

  TEST_CASE("confusion graph examples") {
    const UGraph g = build_confusion_graph(three_message(), LengthTuple({1, 1, 1}));
    CHECK(g.size() == 8);
    CHECK(g == oracle::confusion_graph(three_message(), {1, 1, 1}));
    CHECK(g.num_edges() == 16);

    CHECK(build_confusion_graph(Problem::from_lists({{}, {}}), LengthTuple({1, 1})) ==
          graphs::complete(4));
    CHECK(build_confusion_graph(Problem::from_lists({{2, 3}, {1, 3}, {1, 2}}),
                                LengthTuple({1, 1, 1})) == graphs::hypercube(3));
  }

  TEST_CASE("confusion graph matches the definition on random instances") {
    oracle::Rng rng(101);
    for (int k = 0; k < 60; ++k) {
      const int n = oracle::uniform_int(rng, 1, 4);
      const Problem p = oracle::random_problem(rng, n, 0.5);
      std::vector<int> t;
      for (int j = 0; j < n; ++j) t.push_back(oracle::uniform_int(rng, 0, 2));
      const UGraph g = build_confusion_graph(p, LengthTuple(t));
      CHECK(g == oracle::confusion_graph(p, t));
      CHECK(g.is_symmetric());
    }
  }

  TEST_CASE("vertex budget") {
    SolverLimits limits;
    limits.max_vertices = 4;
    CHECK_THROWS_AS(build_confusion_graph(three_message(), LengthTuple({1, 1, 1}), limits),
                    BudgetError);
    CHECK_NOTHROW(build_confusion_graph(three_message(), LengthTuple({1, 1, 0}), limits));
  }

  TEST_CASE("a zero length projects the message away") {
    oracle::Rng rng(103);
    for (int k = 0; k < 60; ++k) {
      const int n = oracle::uniform_int(rng, 2, 5);
      const Problem p = oracle::random_problem(rng, n, 0.5);
      const int gone = oracle::uniform_int(rng, 0, n - 1);
      std::vector<int> t;
      for (int j = 0; j < n; ++j) t.push_back(j == gone ? 0 : oracle::uniform_int(rng, 1, 2));
      const NodeSet keep = all_nodes(n) & ~node_bit(gone);
      const LengthTuple full(t);
      CHECK(build_confusion_graph(p, full) ==
            build_confusion_graph(p.induced(keep), full.restricted(keep)));
    }
  }

  TEST_CASE("adding side information never adds confusion edges") {
    oracle::Rng rng(107);
    for (int k = 0; k < 60; ++k) {
      const int n = oracle::uniform_int(rng, 2, 4);
      const Problem p = oracle::random_problem(rng, n, 0.3);
      const int from = oracle::uniform_int(rng, 0, n - 1);
      const int to = (from + oracle::uniform_int(rng, 1, n - 1)) % n;
      const LengthTuple t = LengthTuple::uniform(n, oracle::uniform_int(rng, 1, 2));
      CHECK(edges_subset(build_confusion_graph(p.with_edge(from, to), t),
                         build_confusion_graph(p, t)));
    }
  }

  TEST_CASE("the k-block confusion graph sits inside the k-th disjunctive power") {
    oracle::Rng rng(109);
    for (int trial = 0; trial < 30; ++trial) {
      const int n = oracle::uniform_int(rng, 1, 3);
      const Problem p = oracle::random_problem(rng, n, 0.5);
      std::vector<int> t;
      for (int j = 0; j < n; ++j) t.push_back(oracle::uniform_int(rng, 0, 1));
      if (std::accumulate(t.begin(), t.end(), 0) == 0) t[0] = 1;
      const int k = oracle::uniform_int(rng, 2, 3);
      std::vector<int> kt;
      for (int tj : t) kt.push_back(k * tj);
      const VertexCodec base{LengthTuple(t)};
      const VertexCodec block{LengthTuple(kt)};
      const UGraph gamma = build_confusion_graph(p, LengthTuple(t));
      const UGraph power = disjunctive_power(gamma, k);
      const UGraph gamma_k = build_confusion_graph(p, LengthTuple(kt));
      // Message j of length k t_j splits into k chunks; chunk r feeds copy r.
      auto pair_up = [&](std::uint64_t v) {
        const MessageTuple x = block.decode(v);
        std::uint64_t index = 0;
        for (int r = 0; r < k; ++r) {
          MessageTuple part(static_cast<std::size_t>(n));
          for (int j = 0; j < n; ++j) {
            part[j] = (x[j] >> (r * t[j])) & ((std::uint64_t{1} << t[j]) - 1);
          }
          index = index * base.num_vertices() + base.encode(part);
        }
        return index;
      };
      bool contained = true;
      for (auto [u, v] : gamma_k.edges()) {
        if (!power.adjacent(pair_up(u), pair_up(v))) contained = false;
      }
      CHECK(contained);
    }
  }

  TEST_CASE("cross patterns and completion") {
    const Partition2 part{node_bit(0) | node_bit(1), node_bit(2)};
    CHECK(cross_pattern(Problem::from_lists({{2}, {1}, {}}), part) == CrossPattern::None);
    CHECK(cross_pattern(Problem::from_lists({{2}, {1}, {1}}), part) == CrossPattern::LeftToRight);
    CHECK(cross_pattern(Problem::from_lists({{3}, {1}, {}}), part) == CrossPattern::RightToLeft);
    CHECK(cross_pattern(Problem::from_lists({{3}, {3}, {1, 2}}), part) ==
          CrossPattern::CompleteBothWays);
    CHECK(cross_pattern(Problem::from_lists({{3}, {}, {1}}), part) == CrossPattern::Mixed);
    CHECK(complete_left_to_right(Problem::from_lists({{2}, {1}, {1}}), part) ==
          Problem::from_lists({{2}, {1}, {1, 2}}));
  }

  TEST_CASE("factorization examples") {
    const Partition2 halves{node_bit(0) | node_bit(1), node_bit(2) | node_bit(3)};
    const LengthTuple ones = LengthTuple::uniform(4, 1);
    const Problem disjoint = Problem::from_lists({{2}, {}, {4}, {3}});
    CHECK(verify_factorization(disjoint, halves, ones) == Product::Disjunctive);

    Problem one_way = Problem::from_lists({{2}, {1}, {}, {3}});
    for (int i : {0, 1}) {
      for (int j : {2, 3}) one_way = one_way.with_edge(i, j);
    }
    CHECK(verify_factorization(one_way, halves, ones) == Product::Lexicographic);

    Problem both = one_way;
    for (int i : {2, 3}) {
      for (int j : {0, 1}) both = both.with_edge(i, j);
    }
    CHECK(verify_factorization(both, halves, ones) == Product::Cartesian);
  }

  TEST_CASE("product vertex map is a bijection") {
    const LengthTuple t({1, 2, 0, 1});
    const Partition2 part{node_bit(1) | node_bit(3), node_bit(0) | node_bit(2)};
    auto map = product_vertex_map(t, part);
    CHECK(map.size() == 16);
    std::sort(map.begin(), map.end());
    for (std::size_t v = 0; v < map.size(); ++v) CHECK(map[v] == v);
  }
}
