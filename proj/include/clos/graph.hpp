#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace clos {

// Undirected simple graph, vertices 1..vertex_count.
struct SimpleGraph {
  int vertex_count = 0;
  std::vector<std::pair<int, int>> edges;

  std::vector<int> degrees() const {
    std::vector<int> deg(vertex_count, 0);
    for (auto [u, v] : edges) {
      if (u < 1 || u > vertex_count || v < 1 || v > vertex_count || u == v)
        throw std::invalid_argument("graph: bad edge (" + std::to_string(u) +
                                    "," + std::to_string(v) + ")");
      ++deg[u - 1];
      ++deg[v - 1];
    }
    return deg;
  }
  int max_degree() const {
    int best = 0;
    for (int d : degrees()) best = best < d ? d : best;
    return best;
  }
};

inline SimpleGraph triangle_graph() {
  return {3, {{1, 2}, {2, 3}, {1, 3}}};
}

inline SimpleGraph k4_graph() {
  return {4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}};
}

// K4 with the edge {3,4} subdivided through a fifth vertex. Cubic except at
// the degree-2 subdivision vertex, and not 3-edge-colorable.
inline SimpleGraph k4_subdivided_graph() {
  return {5, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 5}, {4, 5}}};
}

}  // namespace clos
