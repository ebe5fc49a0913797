#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "clos/core.hpp"
#include "clos/graph.hpp"

namespace clos {

// A generated flow set bundled with named witness routings and the exact
// values they are expected to reproduce. Generators self-check every
// "congestion:<witness>" entry on construction; optimum claims are keyed
// "opt" and left to callers with an exact solver at hand.
struct NamedInstance {
  FlowSet flowset;
  std::map<std::string, Routing> witness_routings;
  std::map<std::string, Rational> expected;
};

// Flows of a FlowSet in a fixed arrival order (a permutation of the ids).
struct FlowSequence {
  FlowSet flows;
  std::vector<int> arrival_order;
};

// N(N-1) unit flows in C_{N,N}: each of the N input switches sends one flow
// to each of the first N-1 output switches. Any congestion-1 routing uses,
// per input switch, N-1 distinct middles and leaves a different middle
// unused at every input switch. Witness "elemental" is the canonical
// congestion-1 routing. Requires n >= 2.
NamedInstance cross_gadget(int n);

// Instance over C_{n,n+1} with demands 1 and 1/2 whose minimum congestion is
// exactly 3/2: a cross gadget, one half-unit flow per input switch into the
// last output switch, and one unit flow from a fresh input switch into the
// same output switch. Witness "optimal" attains 3/2. Requires n >= 2.
NamedInstance three_halves_lower_bound(int n);

// One unit flow plus (n-1)/eps flows of demand eps, all between the first
// ToR switch pair. Witness "optimal" has congestion 1; witness
// "mt-adversarial" is a valid copy-expansion output whose congestion is
// 1 + (K-1)*eps for K = ceil(flows/n) copies, which equals
// 2 - eps - (1-eps)/n whenever (1 + (n-1)/eps) is divisible by n.
// Requires n >= 2, 0 < eps <= 1, and 1/eps as well as (n-1)/eps integral.
NamedInstance melen_turner_worstcase(int n, const Rational& eps);

// Distinct ranks in {1,2,3} for the neighbors of every vertex.
struct NeighborRanks {
  std::vector<std::map<int, int>> rank_of;  // [vertex-1][neighbor] -> rank

  static NeighborRanks adjacency_order(const SimpleGraph& g);
};

// Flow-level embedding of a max-degree-3 graph: one cross gadget of size 3
// per vertex, two unit flows per edge block, and per edge two half-unit
// flows from the endpoint vertex blocks into the edge block. The instance
// has a congestion-1 routing iff the graph is 3-edge-colorable.
struct ReductionInstance {
  SimpleGraph graph;
  NeighborRanks ranks;
  NamedInstance instance;
  std::vector<std::array<int, 2>> edge_flow_ids;      // per edge
  std::vector<std::array<int, 2>> incident_flow_ids;  // per edge

  // i in [3], j in [2]: the gadget flow of vertex block k from its i'th
  // input switch to its j'th output switch.
  int vertex_flow_id(int k, int i, int j) const {
    return 6 * (k - 1) + (i - 1) * 2 + j;
  }
};

ReductionInstance coloring_reduction(const SimpleGraph& g);
ReductionInstance coloring_reduction(const SimpleGraph& g,
                                     const NeighborRanks& ranks);

// Expands a proper 3-edge-coloring (indexed by edge position, values 1..3)
// into a congestion-1 routing: incident flows ride the edge color, edge
// flows take the two remaining middles, vertex gadgets follow the elemental
// routing renumbered so the unused middle at each input switch lines up with
// its incident flow.
Routing routing_from_coloring(const ReductionInstance& inst,
                              const std::vector<int>& edge_colors);

// Reads the edge colors back from the incident flows' middle switches;
// nullopt when the two incident flows of some edge disagree (impossible in a
// routing with congestion at most 1).
std::optional<std::vector<int>> coloring_from_routing(
    const ReductionInstance& inst, const Routing& r);

// The two unit-demand sequences over C_{n,3} that share a prefix but admit
// incompatible link-disjoint routings. The prefix puts n/2 flows on (I1,O1)
// and n/2 on (I2,O2); sequence X continues with n/2 flows (I1,O2), sequence
// Y with n/2 flows (I3,O1) and n/2 flows (I3,O2). Requires n even, >= 2.
struct OnlinePair {
  FlowSequence x;
  FlowSequence y;
  int prefix_length = 0;
  Routing x_witness;  // link-disjoint routing of X
  Routing y_witness;  // link-disjoint routing of Y
};

OnlinePair online_sequences(int n);

// True iff the prefix routing assigns the (I1,O1) flows to distinct middles,
// the (I2,O2) flows to distinct middles, and both groups to the same set.
// Every link-disjoint routing of X restricts to such a prefix.
bool prefix_x_compatible(const OnlinePair& pair, const Routing& prefix);

// Same with the two groups on complementary sets, as every link-disjoint
// routing of Y requires. No prefix routing satisfies both predicates.
bool prefix_y_compatible(const OnlinePair& pair, const Routing& prefix);

// Demand-weighted variant of the online pair that defeats the sorted greedy
// algorithm: the prefix flows carry demand 1 (so the sort routes them first,
// committing the shared prefix blindly) and the suffix flows carry demand
// 1 - eps. Two flows per switch pair, as in the online pair at n = 4. For
// n < 4 the flow set deliberately overloads the hose constraint; the greedy
// algorithms accept it regardless.
struct WorstCasePair {
  FlowSequence x;
  FlowSequence y;
};

WorstCasePair sorted_greedy_worstcase(int n, const Rational& eps);

// Nine-flow instance over C_{4,3} exercising the phase-1 admission boundary:
// with budget p*L = 5/3 the first eight flows are admitted and the last is
// rejected by its input switch (its copy stack would total 7/4) and left for
// phase 2. Demands are 1, four halves, and four quarters, all from the first
// input switch.
NamedInstance admission_boundary_instance();

// The 2^s sequences over C_{n, 3s} obtained by concatenating, per block of
// three ToR switch pairs, either the X or the Y sequence, as selected by the
// bits of the sequence index. Each carries a blockwise link-disjoint
// witness. Requires n even and r divisible by 3.
struct Supersequence {
  FlowSequence sequence;
  Routing witness;
  std::vector<bool> block_choices;  // true = Y in that block
};

std::vector<Supersequence> supersequences(int n, int r);

// Deterministic hose-valid random instance: endpoints are drawn among
// sources/destinations with free capacity, demands are rationals with
// denominator at most max_denominator, truncated to the remaining capacity.
// May return fewer than target_flows when capacity runs out.
FlowSet random_hose_instance(ClosDims dims, int target_flows,
                             int max_denominator, std::uint64_t seed);

}  // namespace clos
