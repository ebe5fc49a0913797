#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "clos/core.hpp"
#include "clos/graph.hpp"

namespace clos {

inline constexpr std::uint64_t kDefaultOracleBudget = 100'000'000;

struct OracleResult {
  Rational opt;
  Routing witness;  // achieves opt exactly
  std::uint64_t nodes_explored = 0;
};

// nullopt result means the node budget ran out before the search finished; a
// partial incumbent is never reported as the optimum.
struct OracleOutcome {
  std::optional<OracleResult> result;
  std::uint64_t nodes_explored = 0;

  bool budget_exceeded() const { return !result.has_value(); }
};

// Exact minimum congestion by branch and bound: flows in decreasing demand
// order, partial assignments pruned against the incumbent, and fresh middle
// switches (interchangeable until first used) restricted to the lowest
// unused index. The witness is the lexicographically smallest optimal
// assignment within that symmetry-reduced space.
OracleOutcome exact_opt(const FlowSet& fs,
                        std::uint64_t node_budget = kDefaultOracleBudget);

// Proper 3-edge-coloring of a simple graph with maximum degree at most 3, or
// nullopt when exhaustive backtracking rules one out. Colors indexed by edge
// position, values in {1,2,3}.
std::optional<std::vector<int>> three_edge_colorable(const SimpleGraph& g);

}  // namespace clos
