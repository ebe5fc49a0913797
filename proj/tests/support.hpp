#pragma once

// Shared test utilities. The exhaustive solver here is the independent
// check for the pruned branch-and-bound and for the gadget enumerations; it
// must stay free of pruning and symmetry breaking.

#include <functional>
#include <optional>
#include <vector>

#include "clos/core.hpp"
#include "clos/instances.hpp"

namespace clos::testing {

// Visits every routing of fs (n_middle^|flows| of them).
inline void for_each_routing(const FlowSet& fs,
                             const std::function<void(const Routing&)>& visit) {
  Routing r = Routing::empty_for(fs);
  const int n = fs.dims().n_middle;
  std::function<void(int)> rec = [&](int id) {
    if (id > fs.size()) {
      visit(r);
      return;
    }
    for (int m = 1; m <= n; ++m) {
      r.assign(id, m);
      rec(id + 1);
    }
  };
  rec(1);
}

// Plain full enumeration of the minimum congestion, no shortcuts.
inline Rational naive_opt(const FlowSet& fs) {
  std::optional<Rational> best;
  for_each_routing(fs, [&](const Routing& r) {
    Rational c = congestion(fs, r).max_congestion();
    if (!best || c < *best) best = c;
  });
  return best.value_or(Rational(0));
}

// Corpus used by several suites: dims cycle over N,R in [1,3], flow targets
// over [1,9], denominators over a small mixed set including 1 (unit demands).
inline FlowSet corpus_instance(int index, std::uint64_t seed_base = 4242) {
  static const int denominators[] = {1, 2, 3, 4, 6, 8, 12};
  ClosDims dims{index % 3 + 1, (index / 3) % 3 + 1};
  int target = index % 9 + 1;
  int max_den = denominators[index % 7];
  return random_hose_instance(dims, target, max_den,
                              seed_base + static_cast<std::uint64_t>(index));
}

}  // namespace clos::testing
