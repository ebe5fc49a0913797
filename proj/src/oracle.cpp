#include "clos/oracle.hpp"

#include <algorithm>
#include <stdexcept>

namespace clos {

namespace {

struct SearchState {
  const FlowSet* fs;
  std::vector<int> order;  // flow ids, decreasing demand
  std::vector<Rational> up;
  std::vector<Rational> down;
  std::vector<int> assignment;  // by flow id - 1
  Rational incumbent;
  bool has_incumbent = false;
  Routing best;
  std::uint64_t nodes = 0;
  std::uint64_t budget = 0;
  bool out_of_budget = false;

  Rational& up_at(int i, int m) {
    return up[static_cast<std::size_t>(i - 1) * fs->dims().n_middle + (m - 1)];
  }
  Rational& down_at(int j, int m) {
    return down[static_cast<std::size_t>(j - 1) * fs->dims().n_middle +
                (m - 1)];
  }
};

// depth = flows assigned so far, used_middles = highest middle index touched.
// partial_max is the bottleneck congestion of the partial assignment; it only
// grows along a branch, so pruning against the incumbent is safe.
void search(SearchState& s, int depth, int used_middles,
            const Rational& partial_max) {
  if (s.out_of_budget) return;
  if (depth == static_cast<int>(s.order.size())) {
    if (!s.has_incumbent || partial_max < s.incumbent) {
      s.incumbent = partial_max;
      s.has_incumbent = true;
      s.best.assignment = s.assignment;
    }
    return;
  }
  const Flow& f = s.fs->flow(s.order[depth]);
  // Middle switches the partial assignment has never used are
  // interchangeable; trying only the lowest fresh one loses no routing up to
  // relabeling.
  int choices = std::min(s.fs->dims().n_middle, used_middles + 1);
  for (int m = 1; m <= choices; ++m) {
    if (++s.nodes > s.budget) {
      s.out_of_budget = true;
      return;
    }
    Rational& up = s.up_at(f.in_switch, m);
    Rational& down = s.down_at(f.out_switch, m);
    up += f.demand;
    down += f.demand;
    Rational new_max = max(partial_max, max(up, down));
    if (!s.has_incumbent || new_max < s.incumbent) {
      s.assignment[f.id - 1] = m;
      search(s, depth + 1, std::max(used_middles, m), new_max);
      s.assignment[f.id - 1] = 0;
    }
    up -= f.demand;
    down -= f.demand;
    if (s.out_of_budget) return;
  }
}

}  // namespace

OracleOutcome exact_opt(const FlowSet& fs, std::uint64_t node_budget) {
  SearchState s;
  s.fs = &fs;
  s.order.resize(fs.size());
  for (int i = 0; i < fs.size(); ++i) s.order[i] = i + 1;
  std::sort(s.order.begin(), s.order.end(), [&](int a, int b) {
    const Rational& da = fs.flow(a).demand;
    const Rational& db = fs.flow(b).demand;
    if (da != db) return db < da;
    return a < b;
  });
  s.up.assign(static_cast<std::size_t>(fs.dims().n_tor) * fs.dims().n_middle,
              Rational());
  s.down = s.up;
  s.assignment.assign(fs.size(), 0);
  s.best = Routing::empty_for(fs);
  s.budget = node_budget;

  search(s, 0, 0, Rational());

  OracleOutcome outcome;
  outcome.nodes_explored = s.nodes;
  if (s.out_of_budget) return outcome;
  outcome.result = OracleResult{s.incumbent, s.best, s.nodes};
  return outcome;
}

std::optional<std::vector<int>> three_edge_colorable(const SimpleGraph& g) {
  if (g.max_degree() > 3)
    throw std::invalid_argument("three_edge_colorable: maximum degree > 3");

  const int edge_count = static_cast<int>(g.edges.size());
  // used[v] holds a bitmask of colors taken at vertex v.
  std::vector<int> used(g.vertex_count + 1, 0);
  std::vector<int> colors(edge_count, 0);

  auto backtrack = [&](auto&& self, int e) -> bool {
    if (e == edge_count) return true;
    auto [u, v] = g.edges[e];
    for (int c = 1; c <= 3; ++c) {
      int bit = 1 << c;
      if ((used[u] & bit) || (used[v] & bit)) continue;
      used[u] |= bit;
      used[v] |= bit;
      colors[e] = c;
      if (self(self, e + 1)) return true;
      used[u] &= ~bit;
      used[v] &= ~bit;
      colors[e] = 0;
    }
    return false;
  };

  if (!backtrack(backtrack, 0)) return std::nullopt;
  return colors;
}

}  // namespace clos
