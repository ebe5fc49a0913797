#include "clos/online.hpp"

#include <numeric>

#include "doctest.h"
#include "support.hpp"

using namespace clos;

namespace {

FlowSequence sequence_of(FlowSet fs) {
  FlowSequence seq;
  seq.arrival_order.resize(fs.size());
  std::iota(seq.arrival_order.begin(), seq.arrival_order.end(), 1);
  seq.flows = std::move(fs);
  return seq;
}

}  // namespace

TEST_CASE("the online greedy matches the offline greedy decision for decision") {
  for (int i = 0; i < 100; ++i) {
    FlowSequence seq = sequence_of(testing::corpus_instance(i, 456));
    auto router = make_router("unsorted-greedy");
    Routing online = run_online(*router, seq);
    Routing offline = unsorted_greedy(seq.flows, seq.arrival_order);
    CHECK(online == offline);
  }
}

TEST_CASE("a single flow costs its own demand") {
  FlowSequence seq =
      sequence_of(FlowSet({3, 1}, {{1, 1, 1, 1, 1, Rational(2, 3)}}));
  auto router = make_router("round-robin");
  Routing r = run_online(*router, seq);
  CHECK(congestion(seq.flows, r).max_congestion() == Rational(2, 3));
}

TEST_CASE("prefix decisions are oblivious to the suffix") {
  OnlinePair pair = online_sequences(4);
  for (const std::string& name : deterministic_router_names()) {
    auto router = make_router(name);
    Routing on_x = run_online(*router, pair.x);
    Routing on_y = run_online(*router, pair.y);
    for (int id = 1; id <= pair.prefix_length; ++id)
      CHECK(on_x.middle_of(id) == on_y.middle_of(id));
  }
}

TEST_CASE("routers returning bad middles are caught") {
  class BadRouter : public OnlineRouter {
   public:
    void reset(const ClosDims&) override {}
    int choose(const Flow&, const LinkLoads&) override { return 99; }
    std::string name() const override { return "bad"; }
  };
  BadRouter bad;
  FlowSequence seq =
      sequence_of(FlowSet({2, 1}, {{1, 1, 1, 1, 1, Rational(1)}}));
  CHECK_THROWS_AS(run_online(bad, seq), std::runtime_error);
}

TEST_CASE("unknown router names are rejected") {
  CHECK_THROWS_AS(make_router("nonsense"), std::invalid_argument);
}

TEST_CASE("the adaptive suffix defeats every deterministic router") {
  for (int n : {2, 4}) {
    for (const std::string& name : deterministic_router_names()) {
      auto router = make_router(name);
      AdversaryOutcome outcome = adversary_xy(*router, n);
      CHECK(outcome.final_congestion >= Rational(2));
      CHECK(outcome.opt_witness_congestion == Rational(1));
      CHECK((outcome.chosen_name == "X" || outcome.chosen_name == "Y"));
    }
  }
}

TEST_CASE("the chosen sequence is still solvable offline at congestion one") {
  auto router = make_router("unsorted-greedy");
  AdversaryOutcome outcome = adversary_xy(*router, 4);
  // the adversary's own witness certifies the gap
  CHECK(outcome.opt_witness_congestion == Rational(1));
  CHECK(outcome.final_congestion / outcome.opt_witness_congestion >=
        Rational(2));
}

TEST_CASE("deterministic routers serve at most one supersequence cleanly") {
  for (const std::string& name : deterministic_router_names()) {
    auto factory = [&](std::uint64_t) { return make_router(name); };
    ExperimentResult result = randomized_experiment(factory, 4, 2, 0, 0);
    CHECK(result.runs == 4);
    CHECK(result.link_disjoint_count <= 1);
    CHECK(result.mean_congestion >= Rational(7, 4));
  }
}

TEST_CASE("the single-block family already forces mean three halves") {
  for (const std::string& name : deterministic_router_names()) {
    auto factory = [&](std::uint64_t) { return make_router(name); };
    ExperimentResult result = randomized_experiment(factory, 4, 1, 0, 0);
    CHECK(result.runs == 2);
    CHECK(result.mean_congestion >= Rational(3, 2));
  }
}

TEST_CASE("a reused router is reset between runs") {
  OnlinePair pair = online_sequences(4);
  auto router = make_router("ecmp", 77);
  Routing first = run_online(*router, pair.x);
  Routing second = run_online(*router, pair.x);
  CHECK(first == second);
}

TEST_CASE("seeded random routing is measured, not bounded") {
  auto factory = [](std::uint64_t seed) { return make_router("ecmp", seed); };
  ExperimentResult result = randomized_experiment(factory, 4, 2, 1000, 99);
  CHECK(result.runs == 1000);
  CHECK(result.mean_congestion >= Rational(1));
  CHECK(result.congestions.size() == 1000);
}
