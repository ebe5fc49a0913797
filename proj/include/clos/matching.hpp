#pragma once

#include <span>
#include <unordered_map>
#include <vector>

#include "clos/core.hpp"

namespace clos {

// Bipartite multigraph; parallel edges allowed, edge ids unique and stable
// (they need not be contiguous).
struct BipartiteMultigraph {
  struct Edge {
    int id;
    int left;   // 1-based
    int right;  // 1-based
  };
  int left_count = 0;
  int right_count = 0;
  std::vector<Edge> edges;
};

// Proper edge coloring: no two edges sharing a vertex get the same color.
struct EdgeColoring {
  std::unordered_map<int, int> color_of;  // edge id -> color in [n_colors]

  int color(int edge_id) const { return color_of.at(edge_id); }
};

// Colors a bipartite multigraph of maximum degree <= n_colors with at most
// n_colors colors. Edges are processed in the given order (edge ids; defaults
// to the graph's edge order) and take the lowest color free at both
// endpoints, recoloring along an alternating chain when none is. Deterministic
// for a fixed input and order. Throws if some vertex has degree > n_colors or
// the order is not a permutation of the edge ids.
EdgeColoring edge_color(const BipartiteMultigraph& g, int n_colors,
                        std::span<const int> order = {});

// Routes a flow set with at most one flow per source and per destination and
// at most N flows per ToR switch so that no two flows share a ToR<->middle
// link. Colors of the switch-level bipartite graph map to middle switches.
Routing link_disjoint_routing(const FlowSet& fs);

}  // namespace clos
