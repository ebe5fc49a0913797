#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "clos/core.hpp"

namespace clos {

enum class TieBreak { kLowestIndex };

// Parameters of the two-phase routing algorithm. p scales the congestion
// lower bound into the phase-1 admission budget, q is the copy index from
// which admission starts charging that budget. The defaults give the 9/5
// congestion and approximation guarantee; validate() enforces
// p >= (1 + 1/2 + ... + 1/(q-1)), which the guarantee's analysis needs.
struct AlgorithmConfig {
  Rational p{9, 5};
  int q = 3;
  TieBreak tie_break = TieBreak::kLowestIndex;
  std::uint64_t rng_seed = 0;  // consumed by ECMP only

  void validate() const;
};

// Running per-link load, shared by the greedy routines and the online
// harness. path_cost is the bottleneck congestion a flow would meet on the
// path through a given middle switch, before adding the flow itself.
class LinkLoads {
 public:
  explicit LinkLoads(ClosDims dims);

  const ClosDims& dims() const { return dims_; }
  const Rational& up(int in_switch, int middle) const;
  const Rational& down(int middle, int out_switch) const;
  void add(const Flow& f, int middle);
  Rational path_cost(const Flow& f, int middle) const;
  // Lowest-index middle switch minimizing path_cost.
  int best_middle(const Flow& f) const;

 private:
  ClosDims dims_;
  std::vector<Rational> up_;
  std::vector<Rational> down_;
};

// Routes flows one at a time in the given order (a permutation of the flow
// ids), each to the path of minimum congestion, lowest middle on ties.
Routing unsorted_greedy(const FlowSet& fs, std::span<const int> order);

// unsorted_greedy with flows ordered by decreasing demand, id on ties.
Routing sorted_greedy(const FlowSet& fs);

// Assigns every flow to a middle switch drawn uniformly and independently.
// Identical output for identical seeds, on every platform.
Routing ecmp(const FlowSet& fs, std::uint64_t seed);

// Copy expansion plus matching decomposition: splits every ToR switch into
// copies holding at most N flows each, filled in decreasing demand order,
// then projects a link-disjoint routing of the expanded network back. The
// decomposition order, when given, fixes which of the many valid matching
// decompositions is produced (edge ids = flow ids).
Routing melen_turner(const FlowSet& fs,
                     std::span<const int> decomposition_order = {});

// Bookkeeping of phase-1 admission over the copy-expanded network.
struct PhaseOneState {
  struct CopyStats {
    int count = 0;
    Rational max_demand;
    Rational min_demand;
  };
  struct Rejection {
    bool by_input = false;
    bool by_output = false;
  };

  int k_copies = 1;
  // indexed [tor_switch-1][copy-1]
  std::vector<std::vector<CopyStats>> in_copies;
  std::vector<std::vector<CopyStats>> out_copies;
  std::map<int, std::pair<int, int>> accepted;  // flow id -> (in copy, out copy)
  std::map<int, Rejection> rejected;
};

struct PhaseOneOutcome {
  std::vector<int> accepted_ids;  // ascending
  PhaseOneState state;
};

// Phase 1.a: tests flows in decreasing demand order and admits a flow iff
// both its ToR switches accept it. A switch whose next free copy index is at
// least q accepts only while the stacked per-copy maxima stay within p*L.
// Admitted flows land on the lowest free copies of their switches.
PhaseOneOutcome phase_one_admission(const FlowSet& fs,
                                    const AlgorithmConfig& cfg,
                                    const Rational& lower_bound);

struct TwoPhaseResult {
  Routing routing;
  Routing phase1_routing;  // partial: admitted flows only
  PhaseOneOutcome phase1;
};

// The two-phase algorithm: link-disjoint routing of the admitted flows in the
// copy-expanded network, then sorted-greedy completion of the rest on top of
// the phase-1 link loads. With the default config the result has congestion
// at most (9/5) * min(OPT, 1). Requires a hose-valid flow set.
TwoPhaseResult route_two_phase_detailed(const FlowSet& fs,
                                        const AlgorithmConfig& cfg = {});
Routing route_two_phase(const FlowSet& fs, const AlgorithmConfig& cfg = {});

}  // namespace clos
