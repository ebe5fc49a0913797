#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "clos/algorithms.hpp"
#include "clos/core.hpp"
#include "clos/instances.hpp"

namespace clos {

// A router sees the dimensions, the per-link loads accumulated so far, and
// one flow at a time; it may keep internal state but can never revisit a
// decision. Decisions on a prefix are independent of what follows.
class OnlineRouter {
 public:
  virtual ~OnlineRouter() = default;
  virtual void reset(const ClosDims& dims) = 0;
  virtual int choose(const Flow& f, const LinkLoads& loads) = 0;
  virtual std::string name() const = 0;
};

// Registry: "unsorted-greedy" and "sorted-greedy" assign each arrival to a
// path of minimum congestion (sorting is unavailable online, so the two
// differ only in their tie rule: lowest vs highest middle index);
// "round-robin" cycles through the middle switches; "ecmp" picks uniformly
// at random from the seed. Throws on unknown names.
std::unique_ptr<OnlineRouter> make_router(const std::string& name,
                                          std::uint64_t seed = 0);
std::vector<std::string> router_names();
std::vector<std::string> deterministic_router_names();

// Feeds the flows in arrival order and records the decisions. Throws if the
// router returns a middle switch outside [1, N].
Routing run_online(OnlineRouter& router, const FlowSequence& seq);

struct AdversaryOutcome {
  std::string chosen_name;  // "X" or "Y"
  FlowSequence chosen_sequence;
  Routing routing;
  Rational final_congestion;
  Rational opt_witness_congestion;
};

// Plays the shared prefix, inspects the router's prefix routing, and picks
// the suffix the routing cannot serve link-disjointly: the Y suffix when the
// prefix groups share their middle set, the X suffix otherwise. Every
// deterministic router ends at congestion >= 2 while the witness routing of
// the chosen sequence stays at 1.
AdversaryOutcome adversary_xy(OnlineRouter& router, int n);

struct ExperimentResult {
  int runs = 0;
  Rational mean_congestion;
  int link_disjoint_count = 0;
  std::vector<Rational> congestions;       // per run
  std::vector<int> sequence_indices;       // per run
};

// Runs a router over the 2^s supersequence family on C_{n,3s}. With
// trials = 0 every sequence is played once against factory(seed); otherwise
// `trials` sequences are drawn uniformly, each against a freshly seeded
// router. A deterministic router serves at most one sequence of the family
// link-disjointly, so its exhaustive mean is at least 2 - 1/2^s.
ExperimentResult randomized_experiment(
    const std::function<std::unique_ptr<OnlineRouter>(std::uint64_t)>& factory,
    int n, int s, int trials, std::uint64_t seed);

}  // namespace clos
