#include "clos/matching.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

namespace clos {

namespace {

// Per-vertex lookup color -> edge id (0 = no edge of that color yet).
class VertexColors {
 public:
  VertexColors(int vertex_count, int n_colors)
      : n_colors_(n_colors),
        table_(static_cast<std::size_t>(vertex_count) * n_colors, 0) {}

  int edge_with(int vertex, int color) const {
    return table_[index(vertex, color)];
  }
  void set(int vertex, int color, int edge_id) {
    table_[index(vertex, color)] = edge_id;
  }
  int lowest_free(int vertex) const {
    for (int c = 1; c <= n_colors_; ++c)
      if (edge_with(vertex, c) == 0) return c;
    return 0;
  }

 private:
  std::size_t index(int vertex, int color) const {
    return static_cast<std::size_t>(vertex - 1) * n_colors_ + (color - 1);
  }
  int n_colors_;
  std::vector<int> table_;
};

}  // namespace

EdgeColoring edge_color(const BipartiteMultigraph& g, int n_colors,
                        std::span<const int> order) {
  if (n_colors < 1) throw std::invalid_argument("edge_color: need >= 1 color");

  std::unordered_map<int, const BipartiteMultigraph::Edge*> by_id;
  std::vector<int> left_degree(g.left_count, 0), right_degree(g.right_count, 0);
  for (const auto& e : g.edges) {
    if (e.left < 1 || e.left > g.left_count || e.right < 1 ||
        e.right > g.right_count)
      throw std::invalid_argument("edge_color: edge " + std::to_string(e.id) +
                                  " has endpoint out of range");
    if (!by_id.emplace(e.id, &e).second)
      throw std::invalid_argument("edge_color: duplicate edge id " +
                                  std::to_string(e.id));
    if (++left_degree[e.left - 1] > n_colors)
      throw std::invalid_argument("edge_color: left vertex " +
                                  std::to_string(e.left) + " has degree > " +
                                  std::to_string(n_colors));
    if (++right_degree[e.right - 1] > n_colors)
      throw std::invalid_argument("edge_color: right vertex " +
                                  std::to_string(e.right) + " has degree > " +
                                  std::to_string(n_colors));
  }

  std::vector<int> processing;
  if (order.empty()) {
    processing.reserve(g.edges.size());
    for (const auto& e : g.edges) processing.push_back(e.id);
  } else {
    processing.assign(order.begin(), order.end());
    std::set<int> seen(processing.begin(), processing.end());
    if (processing.size() != g.edges.size() || seen.size() != g.edges.size())
      throw std::invalid_argument(
          "edge_color: order is not a permutation of the edge ids");
    for (int id : processing)
      if (!by_id.count(id))
        throw std::invalid_argument("edge_color: unknown edge id " +
                                    std::to_string(id) + " in order");
  }

  VertexColors left(g.left_count, n_colors);
  VertexColors right(g.right_count, n_colors);
  EdgeColoring coloring;
  coloring.color_of.reserve(g.edges.size());

  for (int edge_id : processing) {
    const auto& e = *by_id.at(edge_id);
    int common = 0;
    for (int c = 1; c <= n_colors; ++c) {
      if (left.edge_with(e.left, c) == 0 && right.edge_with(e.right, c) == 0) {
        common = c;
        break;
      }
    }
    if (common != 0) {
      left.set(e.left, common, e.id);
      right.set(e.right, common, e.id);
      coloring.color_of[e.id] = common;
      continue;
    }

    // No color free at both ends: alpha is free at the left endpoint, beta at
    // the right. Walk the alpha/beta alternating chain starting from the
    // right endpoint and swap it; the chain cannot reach the left endpoint
    // (it would have to arrive on an alpha edge, which that vertex lacks),
    // so alpha becomes free at both ends.
    int alpha = left.lowest_free(e.left);
    int beta = right.lowest_free(e.right);

    struct Hop {
      int edge_id;
      bool from_right;  // side the chain entered this edge from
    };
    std::vector<Hop> chain;
    int vertex = e.right;
    bool on_right = true;
    int want = alpha;
    while (true) {
      int next_edge = on_right ? right.edge_with(vertex, want)
                               : left.edge_with(vertex, want);
      if (next_edge == 0) break;
      chain.push_back({next_edge, on_right});
      const auto& ce = *by_id.at(next_edge);
      vertex = on_right ? ce.left : ce.right;
      on_right = !on_right;
      want = (want == alpha) ? beta : alpha;
    }
    for (const Hop& hop : chain) {
      const auto& ce = *by_id.at(hop.edge_id);
      int old_color = coloring.color_of.at(hop.edge_id);
      int new_color = (old_color == alpha) ? beta : alpha;
      if (left.edge_with(ce.left, old_color) == hop.edge_id)
        left.set(ce.left, old_color, 0);
      if (right.edge_with(ce.right, old_color) == hop.edge_id)
        right.set(ce.right, old_color, 0);
      left.set(ce.left, new_color, hop.edge_id);
      right.set(ce.right, new_color, hop.edge_id);
      coloring.color_of[hop.edge_id] = new_color;
    }

    left.set(e.left, alpha, e.id);
    right.set(e.right, alpha, e.id);
    coloring.color_of[e.id] = alpha;
  }

  return coloring;
}

Routing link_disjoint_routing(const FlowSet& fs) {
  const int n = fs.dims().n_middle;
  std::set<std::pair<int, int>> sources, sinks;
  for (const Flow& f : fs.flows()) {
    if (!sources.insert({f.in_switch, f.src_server}).second)
      throw std::invalid_argument(
          "link_disjoint_routing: two flows leave source (" +
          std::to_string(f.in_switch) + "," + std::to_string(f.src_server) +
          ")");
    if (!sinks.insert({f.out_switch, f.dst_server}).second)
      throw std::invalid_argument(
          "link_disjoint_routing: two flows enter destination (" +
          std::to_string(f.out_switch) + "," + std::to_string(f.dst_server) +
          ")");
  }

  BipartiteMultigraph g;
  g.left_count = fs.dims().n_tor;
  g.right_count = fs.dims().n_tor;
  for (const Flow& f : fs.flows())
    g.edges.push_back({f.id, f.in_switch, f.out_switch});

  EdgeColoring coloring = edge_color(g, n);  // degree check happens here
  Routing r = Routing::empty_for(fs);
  for (const Flow& f : fs.flows()) r.assign(f.id, coloring.color(f.id));
  return r;
}

}  // namespace clos
