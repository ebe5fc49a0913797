#include "clos/oracle.hpp"

#include <numeric>
#include <set>

#include "clos/algorithms.hpp"
#include "clos/instances.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace clos;

TEST_CASE("single flow: the optimum is its demand") {
  FlowSet fs({3, 2}, {{1, 1, 1, 2, 2, Rational(2, 7)}});
  auto outcome = exact_opt(fs);
  REQUIRE_FALSE(outcome.budget_exceeded());
  CHECK(outcome.result->opt == Rational(2, 7));
  CHECK(congestion(fs, outcome.result->witness).max_congestion() ==
        Rational(2, 7));
}

TEST_CASE("empty flow set solves to zero") {
  auto outcome = exact_opt(FlowSet());
  REQUIRE_FALSE(outcome.budget_exceeded());
  CHECK(outcome.result->opt == Rational(0));
}

TEST_CASE("crossing gadget of size two is solved at one") {
  NamedInstance inst = cross_gadget(2);
  auto outcome = exact_opt(inst.flowset);
  REQUIRE_FALSE(outcome.budget_exceeded());
  CHECK(outcome.result->opt == Rational(1));
}

TEST_CASE("three-halves instances are solved exactly") {
  for (int n : {2, 3}) {
    NamedInstance inst = three_halves_lower_bound(n);
    auto outcome = exact_opt(inst.flowset);
    REQUIRE_FALSE(outcome.budget_exceeded());
    CHECK(outcome.result->opt == Rational(3, 2));
    CHECK(congestion(inst.flowset, outcome.result->witness).max_congestion() ==
          Rational(3, 2));
  }
}

TEST_CASE("the pruned search agrees with plain enumeration") {
  for (int i = 0; i < 200; ++i) {
    FlowSet fs = random_hose_instance({i % 3 + 1, i % 3 + 1}, i % 7 + 1,
                                      1 + i % 6, 97531 + i);
    auto outcome = exact_opt(fs);
    REQUIRE_FALSE(outcome.budget_exceeded());
    CHECK(outcome.result->opt == testing::naive_opt(fs));
  }
}

TEST_CASE("the lower bound never exceeds the optimum") {
  for (int i = 0; i < 200; ++i) {
    FlowSet fs = testing::corpus_instance(i, 111);
    auto outcome = exact_opt(fs);
    REQUIRE_FALSE(outcome.budget_exceeded());
    CHECK(congestion_lower_bound(fs) <= outcome.result->opt);
  }
}

TEST_CASE("heuristics never beat the oracle") {
  for (int i = 0; i < 100; ++i) {
    FlowSet fs = testing::corpus_instance(i, 222);
    auto outcome = exact_opt(fs);
    REQUIRE_FALSE(outcome.budget_exceeded());
    std::vector<int> order(fs.size());
    std::iota(order.begin(), order.end(), 1);
    for (const Routing& r :
         {sorted_greedy(fs), unsorted_greedy(fs, order), ecmp(fs, 5),
          route_two_phase(fs)}) {
      CHECK(outcome.result->opt <= congestion(fs, r).max_congestion());
    }
  }
}

TEST_CASE("unit instances always reach congestion one") {
  for (int i = 0; i < 200; ++i) {
    FlowSet fs = random_hose_instance({i % 3 + 1, i % 3 + 1}, i % 7 + 1, 1,
                                      31415 + i);
    if (fs.empty()) continue;
    auto outcome = exact_opt(fs);
    REQUIRE_FALSE(outcome.budget_exceeded());
    CHECK(outcome.result->opt == Rational(1));
  }
}

TEST_CASE("an exhausted budget is reported, never a wrong optimum") {
  NamedInstance inst = three_halves_lower_bound(3);
  auto outcome = exact_opt(inst.flowset, 10);
  CHECK(outcome.budget_exceeded());
  CHECK_FALSE(outcome.result.has_value());
  CHECK(outcome.nodes_explored >= 10);
}

TEST_CASE("the witness is deterministic") {
  FlowSet fs = random_hose_instance({3, 3}, 7, 4, 5555);
  auto a = exact_opt(fs);
  auto b = exact_opt(fs);
  REQUIRE_FALSE(a.budget_exceeded());
  CHECK(a.result->witness == b.result->witness);
}

TEST_CASE("complete graph on four vertices is 3-edge-colorable") {
  auto coloring = three_edge_colorable(k4_graph());
  REQUIRE(coloring.has_value());
  const SimpleGraph g = k4_graph();
  std::set<std::pair<int, int>> used;
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    int c = (*coloring)[e];
    CHECK(c >= 1);
    CHECK(c <= 3);
    CHECK(used.insert({g.edges[e].first, c}).second);
    CHECK(used.insert({g.edges[e].second, c}).second);
  }
}

TEST_CASE("subdividing one edge of the complete graph kills 3-colorability") {
  CHECK_FALSE(three_edge_colorable(k4_subdivided_graph()).has_value());
}

TEST_CASE("a single edge is colorable and high degrees are rejected") {
  SimpleGraph one{2, {{1, 2}}};
  auto coloring = three_edge_colorable(one);
  REQUIRE(coloring.has_value());
  CHECK((*coloring)[0] == 1);

  SimpleGraph star{5, {{1, 2}, {1, 3}, {1, 4}, {1, 5}}};
  CHECK_THROWS_AS(three_edge_colorable(star), std::invalid_argument);
}
