#include "clos/online.hpp"

#include <stdexcept>

#include "clos/rng.hpp"

namespace clos {

namespace {

class GreedyRouter : public OnlineRouter {
 public:
  GreedyRouter(std::string name, bool highest_tie)
      : name_(std::move(name)), highest_tie_(highest_tie) {}

  void reset(const ClosDims& dims) override { dims_ = dims; }

  int choose(const Flow& f, const LinkLoads& loads) override {
    int best = highest_tie_ ? dims_.n_middle : 1;
    Rational best_cost = loads.path_cost(f, best);
    for (int step = 1; step < dims_.n_middle; ++step) {
      int m = highest_tie_ ? dims_.n_middle - step : 1 + step;
      Rational cost = loads.path_cost(f, m);
      if (cost < best_cost) {
        best = m;
        best_cost = cost;
      }
    }
    return best;
  }

  std::string name() const override { return name_; }

 private:
  std::string name_;
  bool highest_tie_;
  ClosDims dims_;
};

class RoundRobinRouter : public OnlineRouter {
 public:
  void reset(const ClosDims& dims) override {
    dims_ = dims;
    next_ = 0;
  }
  int choose(const Flow&, const LinkLoads&) override {
    int m = next_ % dims_.n_middle + 1;
    ++next_;
    return m;
  }
  std::string name() const override { return "round-robin"; }

 private:
  ClosDims dims_;
  int next_ = 0;
};

class EcmpRouter : public OnlineRouter {
 public:
  explicit EcmpRouter(std::uint64_t seed) : seed_(seed), rng_(seed) {}
  void reset(const ClosDims& dims) override {
    dims_ = dims;
    rng_.seed(seed_);
  }
  int choose(const Flow&, const LinkLoads&) override {
    return uniform_middle(rng_, dims_.n_middle);
  }
  std::string name() const override { return "ecmp"; }

 private:
  std::uint64_t seed_;
  std::mt19937_64 rng_;
  ClosDims dims_;
};

}  // namespace

std::unique_ptr<OnlineRouter> make_router(const std::string& name,
                                          std::uint64_t seed) {
  if (name == "unsorted-greedy")
    return std::make_unique<GreedyRouter>(name, false);
  if (name == "sorted-greedy")
    return std::make_unique<GreedyRouter>(name, true);
  if (name == "round-robin") return std::make_unique<RoundRobinRouter>();
  if (name == "ecmp") return std::make_unique<EcmpRouter>(seed);
  throw std::invalid_argument("unknown router '" + name + "'");
}

std::vector<std::string> router_names() {
  return {"unsorted-greedy", "sorted-greedy", "round-robin", "ecmp"};
}

std::vector<std::string> deterministic_router_names() {
  return {"unsorted-greedy", "sorted-greedy", "round-robin"};
}

Routing run_online(OnlineRouter& router, const FlowSequence& seq) {
  router.reset(seq.flows.dims());
  LinkLoads loads(seq.flows.dims());
  Routing r = Routing::empty_for(seq.flows);
  for (int id : seq.arrival_order) {
    const Flow& f = seq.flows.flow(id);
    int m = router.choose(f, loads);
    if (m < 1 || m > seq.flows.dims().n_middle)
      throw std::runtime_error("router '" + router.name() +
                               "' returned middle " + std::to_string(m) +
                               " outside [1," +
                               std::to_string(seq.flows.dims().n_middle) + "]");
    r.assign(id, m);
    loads.add(f, m);
  }
  return r;
}

AdversaryOutcome adversary_xy(OnlineRouter& router, int n) {
  OnlinePair pair = online_sequences(n);

  router.reset(pair.x.flows.dims());
  LinkLoads loads(pair.x.flows.dims());
  Routing prefix;
  for (int id = 1; id <= pair.prefix_length; ++id) {
    const Flow& f = pair.x.flows.flow(id);  // prefix is shared with Y
    int m = router.choose(f, loads);
    if (m < 1 || m > n)
      throw std::runtime_error("router '" + router.name() +
                               "' returned middle out of range");
    prefix.assign(id, m);
    loads.add(f, m);
  }

  // A prefix that keeps X serviceable cannot keep Y serviceable; feed
  // whichever suffix the prefix has already ruined.
  bool serves_x = prefix_x_compatible(pair, prefix);
  const FlowSequence& chosen = serves_x ? pair.y : pair.x;
  const Routing& witness = serves_x ? pair.y_witness : pair.x_witness;

  Routing full = prefix;
  for (int id = pair.prefix_length + 1; id <= chosen.flows.size(); ++id) {
    const Flow& f = chosen.flows.flow(id);
    int m = router.choose(f, loads);
    if (m < 1 || m > n)
      throw std::runtime_error("router '" + router.name() +
                               "' returned middle out of range");
    full.assign(id, m);
    loads.add(f, m);
  }

  AdversaryOutcome outcome;
  outcome.chosen_name = serves_x ? "Y" : "X";
  outcome.chosen_sequence = chosen;
  outcome.routing = full;
  outcome.final_congestion =
      congestion(chosen.flows, full).max_congestion();
  outcome.opt_witness_congestion =
      congestion(chosen.flows, witness).max_congestion();
  return outcome;
}

ExperimentResult randomized_experiment(
    const std::function<std::unique_ptr<OnlineRouter>(std::uint64_t)>& factory,
    int n, int s, int trials, std::uint64_t seed) {
  std::vector<Supersequence> family = supersequences(n, 3 * s);
  ExperimentResult result;
  Rational total;

  auto play = [&](int index, std::uint64_t router_seed) {
    auto router = factory(router_seed);
    const Supersequence& super = family[index];
    Routing r = run_online(*router, super.sequence);
    Rational cong = congestion(super.sequence.flows, r).max_congestion();
    if (is_link_disjoint(super.sequence.flows, r))
      ++result.link_disjoint_count;
    result.congestions.push_back(cong);
    result.sequence_indices.push_back(index);
    total += cong;
    ++result.runs;
  };

  if (trials <= 0) {
    for (std::size_t i = 0; i < family.size(); ++i)
      play(static_cast<int>(i), seed);
  } else {
    std::mt19937_64 rng(seed);
    for (int t = 0; t < trials; ++t) {
      int index = static_cast<int>(uniform_below(rng, family.size()));
      play(index, rng());
    }
  }
  result.mean_congestion = total / Rational(result.runs);
  return result;
}

}  // namespace clos
