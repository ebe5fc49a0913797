#include "clos/instances.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "clos/algorithms.hpp"
#include "clos/rng.hpp"

namespace clos {

namespace {

// Generators re-derive every recorded witness congestion; a mismatch is a
// construction bug, not an input error.
void record_witness(NamedInstance& inst, const std::string& name, Routing r,
                    const Rational& expected_congestion) {
  Rational actual = congestion(inst.flowset, r).max_congestion();
  if (actual != expected_congestion)
    throw std::logic_error("instance generator: witness '" + name +
                           "' recomputes to " + actual.str() +
                           ", expected " + expected_congestion.str());
  inst.witness_routings[name] = std::move(r);
  inst.expected["congestion:" + name] = expected_congestion;
}

int elemental_middle(int i, int j, int n) {
  return (i + j - 2) % n + 1;
}

// Middle switch the elemental routing leaves unused at input switch i.
int elemental_free_middle(int i, int n) {
  return ((i - 2) % n + n) % n + 1;
}

std::vector<Flow> cross_gadget_flows(int n, int first_id, int in_offset,
                                     int out_offset) {
  std::vector<Flow> flows;
  int id = first_id;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n - 1; ++j)
      flows.push_back({id++, in_offset + i, j, out_offset + j, i, Rational(1)});
  return flows;
}

Routing elemental_routing_for(const std::vector<Flow>& gadget, int n,
                              Routing base) {
  for (const Flow& f : gadget) {
    // src_server is the gadget's j index, dst_server its i index.
    base.assign(f.id, elemental_middle(f.dst_server, f.src_server, n));
  }
  return base;
}

}  // namespace

NamedInstance cross_gadget(int n) {
  if (n < 2) throw std::invalid_argument("cross_gadget: n must be >= 2");
  NamedInstance inst;
  std::vector<Flow> flows = cross_gadget_flows(n, 1, 0, 0);
  inst.flowset = FlowSet({n, n}, flows);
  Routing elemental = elemental_routing_for(
      flows, n, Routing::empty_for(inst.flowset));
  record_witness(inst, "elemental", std::move(elemental), Rational(1));
  inst.expected["opt"] = Rational(1);
  return inst;
}

NamedInstance three_halves_lower_bound(int n) {
  if (n < 2)
    throw std::invalid_argument("three_halves_lower_bound: n must be >= 2");
  NamedInstance inst;
  std::vector<Flow> flows = cross_gadget_flows(n, 1, 0, 0);
  // One half-unit flow per input switch, all entering the last output
  // switch, two per destination server.
  for (int i = 1; i <= n; ++i)
    flows.push_back({static_cast<int>(flows.size()) + 1, i, n, n, (i + 1) / 2,
                     Rational(1, 2)});
  // One unit flow from the extra input switch into the last output switch.
  flows.push_back(
      {static_cast<int>(flows.size()) + 1, n + 1, n, n, n, Rational(1)});
  inst.flowset = FlowSet({n, n + 1}, flows);

  Routing witness = elemental_routing_for(
      std::vector<Flow>(flows.begin(), flows.begin() + n * (n - 1)), n,
      Routing::empty_for(inst.flowset));
  for (int i = 1; i <= n; ++i) {
    int id = n * (n - 1) + i;
    witness.assign(id, ((i - 2) % n + n) % n + 1);
  }
  witness.assign(inst.flowset.size(), n);
  record_witness(inst, "optimal", std::move(witness), Rational(3, 2));
  inst.expected["opt"] = Rational(3, 2);
  return inst;
}

NamedInstance melen_turner_worstcase(int n, const Rational& eps) {
  if (n < 2)
    throw std::invalid_argument("melen_turner_worstcase: n must be >= 2");
  if (eps <= Rational(0) || eps > Rational(1))
    throw std::invalid_argument("melen_turner_worstcase: eps outside (0,1]");
  if (eps.num() != 1)
    throw std::invalid_argument(
        "melen_turner_worstcase: 1/eps must be an integer");
  const std::int64_t per_source = eps.den();  // flows of demand eps per source
  if ((Rational(n - 1) / eps).den() != 1)
    throw std::invalid_argument(
        "melen_turner_worstcase: (n-1)/eps must be an integer");
  const int small_flows = static_cast<int>((n - 1) * per_source);

  NamedInstance inst;
  std::vector<Flow> flows;
  flows.push_back({1, 1, 1, 1, 1, Rational(1)});
  for (int c = 1; c <= small_flows; ++c) {
    int bucket = 2 + (c - 1) / static_cast<int>(per_source);
    flows.push_back({c + 1, 1, bucket, 1, bucket, eps});
  }
  inst.flowset = FlowSet({n, 1}, flows);

  Routing optimal = Routing::empty_for(inst.flowset);
  optimal.assign(1, 1);
  for (int c = 1; c <= small_flows; ++c)
    optimal.assign(c + 1, 2 + (c - 1) % (n - 1));
  record_witness(inst, "optimal", std::move(optimal), Rational(1));
  inst.expected["opt"] = Rational(1);

  // Copy expansion puts flows 1..n on the first copy pair, the next n on the
  // second, and so on. Coloring the unit flow first and then the first flow
  // of every later copy stacks them all on middle 1, the worst valid
  // decomposition: congestion 1 + (copies-1)*eps.
  const int total = inst.flowset.size();
  const int copies = (total + n - 1) / n;
  std::vector<int> order;
  order.push_back(1);
  for (int k = 2; k <= copies; ++k) order.push_back((k - 1) * n + 1);
  for (int id = 2; id <= total; ++id)
    if ((id - 1) % n != 0) order.push_back(id);
  Routing adversarial = melen_turner(inst.flowset, order);
  record_witness(inst, "mt-adversarial", std::move(adversarial),
                 Rational(1) + Rational(copies - 1) * eps);
  return inst;
}

NeighborRanks NeighborRanks::adjacency_order(const SimpleGraph& g) {
  NeighborRanks ranks;
  ranks.rank_of.resize(g.vertex_count);
  for (auto [u, v] : g.edges) {
    ranks.rank_of[u - 1][v] = static_cast<int>(ranks.rank_of[u - 1].size()) + 1;
    ranks.rank_of[v - 1][u] = static_cast<int>(ranks.rank_of[v - 1].size()) + 1;
  }
  return ranks;
}

ReductionInstance coloring_reduction(const SimpleGraph& g) {
  return coloring_reduction(g, NeighborRanks::adjacency_order(g));
}

ReductionInstance coloring_reduction(const SimpleGraph& g,
                                     const NeighborRanks& ranks) {
  if (g.max_degree() > 3)
    throw std::invalid_argument("coloring_reduction: maximum degree > 3");
  if (static_cast<int>(ranks.rank_of.size()) != g.vertex_count)
    throw std::invalid_argument("coloring_reduction: ranks cover " +
                                std::to_string(ranks.rank_of.size()) +
                                " vertices, graph has " +
                                std::to_string(g.vertex_count));
  for (int v = 1; v <= g.vertex_count; ++v) {
    std::set<int> used;
    for (const auto& [neighbor, rank] : ranks.rank_of[v - 1]) {
      if (rank < 1 || rank > 3 || !used.insert(rank).second)
        throw std::invalid_argument(
            "coloring_reduction: ranks of vertex " + std::to_string(v) +
            " are not distinct values in {1,2,3}");
    }
  }

  const int vertices = g.vertex_count;
  const int edge_count = static_cast<int>(g.edges.size());

  ReductionInstance inst;
  inst.graph = g;
  inst.ranks = ranks;
  inst.edge_flow_ids.resize(edge_count);
  inst.incident_flow_ids.resize(edge_count);

  std::vector<Flow> flows;
  for (int k = 1; k <= vertices; ++k) {
    auto gadget = cross_gadget_flows(3, static_cast<int>(flows.size()) + 1,
                                     3 * (k - 1), 3 * (k - 1));
    flows.insert(flows.end(), gadget.begin(), gadget.end());
  }
  for (int m = 1; m <= edge_count; ++m) {
    int block = 3 * vertices + m;
    for (int server = 1; server <= 2; ++server) {
      flows.push_back({static_cast<int>(flows.size()) + 1, block, server,
                       block, server, Rational(1)});
      inst.edge_flow_ids[m - 1][server - 1] = flows.back().id;
    }
  }
  for (int m = 1; m <= edge_count; ++m) {
    auto [u, v] = g.edges[m - 1];
    int block = 3 * vertices + m;
    int side = 0;
    for (auto [from, to] : {std::pair{u, v}, std::pair{v, u}}) {
      int rank = ranks.rank_of[from - 1].at(to);
      flows.push_back({static_cast<int>(flows.size()) + 1,
                       3 * (from - 1) + rank, 3, block, 3, Rational(1, 2)});
      inst.incident_flow_ids[m - 1][side++] = flows.back().id;
    }
  }
  inst.instance.flowset = FlowSet({3, 3 * vertices + edge_count}, flows);
  return inst;
}

Routing routing_from_coloring(const ReductionInstance& inst,
                              const std::vector<int>& edge_colors) {
  const SimpleGraph& g = inst.graph;
  if (edge_colors.size() != g.edges.size())
    throw std::invalid_argument("routing_from_coloring: color count mismatch");
  {
    std::vector<int> used(g.vertex_count + 1, 0);
    for (std::size_t m = 0; m < g.edges.size(); ++m) {
      int c = edge_colors[m];
      if (c < 1 || c > 3)
        throw std::invalid_argument("routing_from_coloring: color " +
                                    std::to_string(c) + " outside {1,2,3}");
      int bit = 1 << c;
      auto [u, v] = g.edges[m];
      if ((used[u] & bit) || (used[v] & bit))
        throw std::invalid_argument(
            "routing_from_coloring: coloring is not proper at edge " +
            std::to_string(m + 1));
      used[u] |= bit;
      used[v] |= bit;
    }
  }

  Routing r = Routing::empty_for(inst.instance.flowset);

  for (std::size_t m = 0; m < g.edges.size(); ++m) {
    int c = edge_colors[m];
    r.assign(inst.incident_flow_ids[m][0], c);
    r.assign(inst.incident_flow_ids[m][1], c);
    std::vector<int> rest;
    for (int x = 1; x <= 3; ++x)
      if (x != c) rest.push_back(x);
    r.assign(inst.edge_flow_ids[m][0], rest[0]);
    r.assign(inst.edge_flow_ids[m][1], rest[1]);
  }

  // Per vertex block, renumber the elemental routing so that the middle left
  // free at the input switch of rank r is exactly the color of the edge
  // ranked r; the incident flow riding that color then meets an empty link.
  for (int k = 1; k <= g.vertex_count; ++k) {
    std::array<int, 4> perm{};  // local middle -> global middle, 0 = unset
    std::array<bool, 4> taken{};
    for (const auto& [neighbor, rank] : inst.ranks.rank_of[k - 1]) {
      int edge_index = -1;
      for (std::size_t m = 0; m < g.edges.size(); ++m) {
        auto [u, v] = g.edges[m];
        if ((u == k && v == neighbor) || (v == k && u == neighbor)) {
          edge_index = static_cast<int>(m);
          break;
        }
      }
      int color = edge_colors[edge_index];
      perm[elemental_free_middle(rank, 3)] = color;
      taken[color] = true;
    }
    for (int local = 1; local <= 3; ++local) {
      if (perm[local] != 0) continue;
      for (int global = 1; global <= 3; ++global) {
        if (!taken[global]) {
          perm[local] = global;
          taken[global] = true;
          break;
        }
      }
    }
    for (int i = 1; i <= 3; ++i)
      for (int j = 1; j <= 2; ++j)
        r.assign(inst.vertex_flow_id(k, i, j),
                 perm[elemental_middle(i, j, 3)]);
  }
  return r;
}

std::optional<std::vector<int>> coloring_from_routing(
    const ReductionInstance& inst, const Routing& r) {
  std::vector<int> colors;
  colors.reserve(inst.graph.edges.size());
  for (std::size_t m = 0; m < inst.graph.edges.size(); ++m) {
    int a = r.middle_of(inst.incident_flow_ids[m][0]);
    int b = r.middle_of(inst.incident_flow_ids[m][1]);
    if (a != b || a < 1 || a > 3) return std::nullopt;
    colors.push_back(a);
  }
  return colors;
}

namespace {

// One flow (in->out) per k in [count], on servers first_server..+count-1.
void append_flows(std::vector<Flow>& flows, int count, int in_switch,
                  int first_src, int out_switch, int first_dst,
                  const Rational& demand) {
  for (int k = 0; k < count; ++k)
    flows.push_back({static_cast<int>(flows.size()) + 1, in_switch,
                     first_src + k, out_switch, first_dst + k, demand});
}

}  // namespace

OnlinePair online_sequences(int n) {
  if (n < 2 || n % 2 != 0)
    throw std::invalid_argument("online_sequences: n must be even and >= 2");
  const int half = n / 2;

  OnlinePair pair;
  pair.prefix_length = n;

  std::vector<Flow> x_flows;
  append_flows(x_flows, half, 1, 1, 1, 1, Rational(1));
  append_flows(x_flows, half, 2, 1, 2, 1, Rational(1));
  std::vector<Flow> y_flows = x_flows;
  append_flows(x_flows, half, 1, half + 1, 2, half + 1, Rational(1));
  append_flows(y_flows, half, 3, 1, 1, half + 1, Rational(1));
  append_flows(y_flows, half, 3, half + 1, 2, half + 1, Rational(1));

  pair.x.flows = FlowSet({n, 3}, x_flows);
  pair.y.flows = FlowSet({n, 3}, y_flows);
  for (int id = 1; id <= pair.x.flows.size(); ++id)
    pair.x.arrival_order.push_back(id);
  for (int id = 1; id <= pair.y.flows.size(); ++id)
    pair.y.arrival_order.push_back(id);

  pair.x_witness = Routing::empty_for(pair.x.flows);
  for (int k = 1; k <= half; ++k) {
    pair.x_witness.assign(k, k);                  // (I1,O1) -> Mk
    pair.x_witness.assign(half + k, k);           // (I2,O2) -> Mk
    pair.x_witness.assign(n + k, half + k);       // (I1,O2) -> M(half+k)
  }
  pair.y_witness = Routing::empty_for(pair.y.flows);
  for (int k = 1; k <= half; ++k) {
    pair.y_witness.assign(k, k);                  // (I1,O1) -> Mk
    pair.y_witness.assign(half + k, half + k);    // (I2,O2) -> M(half+k)
    pair.y_witness.assign(n + k, half + k);       // (I3,O1) -> M(half+k)
    pair.y_witness.assign(n + half + k, k);       // (I3,O2) -> Mk
  }
  if (!is_link_disjoint(pair.x.flows, pair.x_witness) ||
      !is_link_disjoint(pair.y.flows, pair.y_witness))
    throw std::logic_error("online_sequences: witness not link-disjoint");
  return pair;
}

namespace {

bool prefix_groups(const OnlinePair& pair, const Routing& prefix,
                   std::set<int>* first, std::set<int>* second) {
  const int half = pair.prefix_length / 2;
  for (int id = 1; id <= pair.prefix_length; ++id) {
    int m = prefix.middle_of(id);
    if (m == 0) throw std::invalid_argument("prefix routing incomplete");
    if (!(id <= half ? first : second)->insert(m).second)
      return false;  // two flows of one group share a middle
  }
  return true;
}

}  // namespace

bool prefix_x_compatible(const OnlinePair& pair, const Routing& prefix) {
  std::set<int> first, second;
  if (!prefix_groups(pair, prefix, &first, &second)) return false;
  return first == second;
}

bool prefix_y_compatible(const OnlinePair& pair, const Routing& prefix) {
  std::set<int> first, second;
  if (!prefix_groups(pair, prefix, &first, &second)) return false;
  for (int m : first)
    if (second.count(m)) return false;
  return true;
}

WorstCasePair sorted_greedy_worstcase(int n, const Rational& eps) {
  if (n < 2)
    throw std::invalid_argument("sorted_greedy_worstcase: n must be >= 2");
  if (eps <= Rational(0) || Rational(1) <= eps)
    throw std::invalid_argument("sorted_greedy_worstcase: eps outside (0,1)");
  const Rational low = Rational(1) - eps;

  // Server packing within a switch: lowest-index server that still fits,
  // otherwise the one with the largest remaining capacity. For n < 4 this
  // overloads some servers; the greedy algorithms do not require hose
  // validity and the overload is the point of the construction.
  struct Packer {
    std::vector<std::vector<Rational>> residual;
    Packer(int switches, int servers)
        : residual(switches, std::vector<Rational>(servers, Rational(1))) {}
    int place(int sw, const Rational& demand) {
      auto& caps = residual[sw - 1];
      int best = 0;
      for (std::size_t s = 0; s < caps.size(); ++s) {
        if (caps[s] >= demand) {
          best = static_cast<int>(s) + 1;
          break;
        }
        if (best == 0 || caps[s] > caps[best - 1])
          best = static_cast<int>(s) + 1;
      }
      caps[best - 1] -= demand;
      return best;
    }
  };

  auto build = [&](bool suffix_is_y) {
    Packer src(3, n), dst(3, n);
    std::vector<Flow> flows;
    auto add = [&](int in, int out, const Rational& demand) {
      int s = src.place(in, demand);
      int t = dst.place(out, demand);
      flows.push_back(
          {static_cast<int>(flows.size()) + 1, in, s, out, t, demand});
    };
    add(1, 1, Rational(1));
    add(1, 1, Rational(1));
    add(2, 2, Rational(1));
    add(2, 2, Rational(1));
    if (suffix_is_y) {
      add(3, 1, low);
      add(3, 1, low);
      add(3, 2, low);
      add(3, 2, low);
    } else {
      add(1, 2, low);
      add(1, 2, low);
    }
    FlowSequence seq;
    seq.flows = FlowSet({n, 3}, flows);
    for (int id = 1; id <= seq.flows.size(); ++id)
      seq.arrival_order.push_back(id);
    return seq;
  };

  WorstCasePair pair;
  pair.x = build(false);
  pair.y = build(true);
  return pair;
}

NamedInstance admission_boundary_instance() {
  NamedInstance inst;
  std::vector<Flow> flows;
  flows.push_back({1, 1, 1, 1, 1, Rational(1)});
  flows.push_back({2, 1, 2, 1, 2, Rational(1, 2)});
  flows.push_back({3, 1, 2, 1, 3, Rational(1, 2)});
  flows.push_back({4, 1, 3, 1, 4, Rational(1, 2)});
  flows.push_back({5, 1, 3, 2, 1, Rational(1, 2)});
  flows.push_back({6, 1, 4, 2, 2, Rational(1, 4)});
  flows.push_back({7, 1, 4, 2, 3, Rational(1, 4)});
  flows.push_back({8, 1, 4, 2, 4, Rational(1, 4)});
  flows.push_back({9, 1, 4, 3, 1, Rational(1, 4)});
  inst.flowset = FlowSet({4, 3}, flows);
  return inst;
}

std::vector<Supersequence> supersequences(int n, int r) {
  if (n < 2 || n % 2 != 0)
    throw std::invalid_argument("supersequences: n must be even and >= 2");
  if (r < 3 || r % 3 != 0)
    throw std::invalid_argument("supersequences: r must be a multiple of 3");
  const int blocks = r / 3;
  if (blocks > 20)
    throw std::invalid_argument("supersequences: too many blocks");

  OnlinePair base = online_sequences(n);
  std::vector<Supersequence> result;
  result.reserve(1u << blocks);

  for (std::uint32_t index = 0; index < (1u << blocks); ++index) {
    Supersequence super;
    std::vector<Flow> flows;
    for (int b = 0; b < blocks; ++b) {
      bool use_y = (index >> b) & 1;
      super.block_choices.push_back(use_y);
      const FlowSequence& src = use_y ? base.y : base.x;
      const Routing& witness = use_y ? base.y_witness : base.x_witness;
      for (const Flow& f : src.flows.flows()) {
        Flow shifted = f;
        shifted.id = static_cast<int>(flows.size()) + 1;
        shifted.in_switch += 3 * b;
        shifted.out_switch += 3 * b;
        flows.push_back(shifted);
        super.witness.assign(shifted.id, witness.middle_of(f.id));
      }
    }
    super.sequence.flows = FlowSet({n, r}, flows);
    for (int id = 1; id <= super.sequence.flows.size(); ++id)
      super.sequence.arrival_order.push_back(id);
    if (!is_link_disjoint(super.sequence.flows, super.witness))
      throw std::logic_error("supersequences: witness not link-disjoint");
    result.push_back(std::move(super));
  }
  return result;
}

FlowSet random_hose_instance(ClosDims dims, int target_flows,
                             int max_denominator, std::uint64_t seed) {
  if (max_denominator < 1)
    throw std::invalid_argument("random_hose_instance: max_denominator >= 1");
  std::mt19937_64 rng(seed);
  std::vector<Rational> src_free(
      static_cast<std::size_t>(dims.n_tor) * dims.n_middle, Rational(1));
  std::vector<Rational> dst_free = src_free;

  auto pick = [&](const std::vector<Rational>& free) -> int {
    std::vector<int> open;
    for (std::size_t i = 0; i < free.size(); ++i)
      if (free[i] > Rational(0)) open.push_back(static_cast<int>(i));
    if (open.empty()) return -1;
    return open[uniform_below(rng, open.size())];
  };

  std::vector<Flow> flows;
  for (int t = 0; t < target_flows; ++t) {
    int src = pick(src_free);
    int dst = pick(dst_free);
    if (src < 0 || dst < 0) break;
    std::int64_t den =
        1 + static_cast<std::int64_t>(uniform_below(rng, max_denominator));
    std::int64_t num = 1 + static_cast<std::int64_t>(uniform_below(rng, den));
    Rational demand =
        min(Rational(num, den), min(src_free[src], dst_free[dst]));
    src_free[src] -= demand;
    dst_free[dst] -= demand;
    flows.push_back({static_cast<int>(flows.size()) + 1,
                     src / dims.n_middle + 1, src % dims.n_middle + 1,
                     dst / dims.n_middle + 1, dst % dims.n_middle + 1,
                     demand});
  }
  return FlowSet(dims, std::move(flows));
}

}  // namespace clos
