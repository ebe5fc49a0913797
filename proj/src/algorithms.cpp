#include "clos/algorithms.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

#include "clos/matching.hpp"
#include "clos/rng.hpp"

namespace clos {

namespace {

// Flow ids by decreasing demand, ascending id on equal demands.
std::vector<int> demand_order(const FlowSet& fs) {
  std::vector<int> ids(fs.size());
  for (int i = 0; i < fs.size(); ++i) ids[i] = i + 1;
  std::sort(ids.begin(), ids.end(), [&](int a, int b) {
    const Rational& da = fs.flow(a).demand;
    const Rational& db = fs.flow(b).demand;
    if (da != db) return db < da;
    return a < b;
  });
  return ids;
}

// Flows incident to the busiest ToR switch, over both sides.
int max_incident_flows(const FlowSet& fs) {
  std::vector<int> in(fs.dims().n_tor, 0), out(fs.dims().n_tor, 0);
  int best = 0;
  for (const Flow& f : fs.flows()) {
    best = std::max(best, ++in[f.in_switch - 1]);
    best = std::max(best, ++out[f.out_switch - 1]);
  }
  return best;
}

int copy_count(const FlowSet& fs) {
  int f = max_incident_flows(fs);
  int n = fs.dims().n_middle;
  return f == 0 ? 1 : (f + n - 1) / n;
}

void check_permutation(const FlowSet& fs, std::span<const int> order,
                       const char* who) {
  if (static_cast<int>(order.size()) != fs.size())
    throw std::invalid_argument(std::string(who) +
                                ": order length differs from flow count");
  std::set<int> seen;
  for (int id : order) {
    if (id < 1 || id > fs.size() || !seen.insert(id).second)
      throw std::invalid_argument(std::string(who) +
                                  ": order is not a permutation of flow ids");
  }
}

}  // namespace

void AlgorithmConfig::validate() const {
  if (q < 1) throw std::invalid_argument("config: q must be positive");
  Rational harmonic;
  for (int k = 1; k <= q - 1; ++k) harmonic += Rational(1, k);
  if (p < harmonic)
    throw std::invalid_argument("config: p = " + p.str() +
                                " below the required " + harmonic.str());
}

LinkLoads::LinkLoads(ClosDims dims)
    : dims_(dims),
      up_(static_cast<std::size_t>(dims.n_tor) * dims.n_middle),
      down_(static_cast<std::size_t>(dims.n_tor) * dims.n_middle) {}

const Rational& LinkLoads::up(int in_switch, int middle) const {
  return up_[static_cast<std::size_t>(in_switch - 1) * dims_.n_middle +
             (middle - 1)];
}

const Rational& LinkLoads::down(int middle, int out_switch) const {
  return down_[static_cast<std::size_t>(out_switch - 1) * dims_.n_middle +
               (middle - 1)];
}

void LinkLoads::add(const Flow& f, int middle) {
  up_[static_cast<std::size_t>(f.in_switch - 1) * dims_.n_middle +
      (middle - 1)] += f.demand;
  down_[static_cast<std::size_t>(f.out_switch - 1) * dims_.n_middle +
        (middle - 1)] += f.demand;
}

Rational LinkLoads::path_cost(const Flow& f, int middle) const {
  return max(up(f.in_switch, middle), down(middle, f.out_switch));
}

int LinkLoads::best_middle(const Flow& f) const {
  int best = 1;
  Rational best_cost = path_cost(f, 1);
  for (int m = 2; m <= dims_.n_middle; ++m) {
    Rational cost = path_cost(f, m);
    if (cost < best_cost) {
      best = m;
      best_cost = cost;
    }
  }
  return best;
}

Routing unsorted_greedy(const FlowSet& fs, std::span<const int> order) {
  check_permutation(fs, order, "unsorted_greedy");
  LinkLoads loads(fs.dims());
  Routing r = Routing::empty_for(fs);
  for (int id : order) {
    const Flow& f = fs.flow(id);
    int m = loads.best_middle(f);
    r.assign(id, m);
    loads.add(f, m);
  }
  return r;
}

Routing sorted_greedy(const FlowSet& fs) {
  return unsorted_greedy(fs, demand_order(fs));
}

Routing ecmp(const FlowSet& fs, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Routing r = Routing::empty_for(fs);
  for (const Flow& f : fs.flows())
    r.assign(f.id, uniform_middle(rng, fs.dims().n_middle));
  return r;
}

Routing melen_turner(const FlowSet& fs,
                     std::span<const int> decomposition_order) {
  if (!decomposition_order.empty())
    check_permutation(fs, decomposition_order, "melen_turner");
  if (fs.empty()) return Routing::empty_for(fs);

  const int n = fs.dims().n_middle;
  const int k_copies = copy_count(fs);

  // Fill copies of each switch in decreasing demand order, N flows per copy.
  std::vector<int> in_copy(fs.size() + 1, 0), out_copy(fs.size() + 1, 0);
  std::vector<int> in_fill(fs.dims().n_tor, 0), out_fill(fs.dims().n_tor, 0);
  for (int id : demand_order(fs)) {
    const Flow& f = fs.flow(id);
    in_copy[id] = in_fill[f.in_switch - 1]++ / n + 1;
    out_copy[id] = out_fill[f.out_switch - 1]++ / n + 1;
  }

  BipartiteMultigraph g;
  g.left_count = fs.dims().n_tor * k_copies;
  g.right_count = fs.dims().n_tor * k_copies;
  for (const Flow& f : fs.flows()) {
    g.edges.push_back({f.id,
                       (f.in_switch - 1) * k_copies + in_copy[f.id],
                       (f.out_switch - 1) * k_copies + out_copy[f.id]});
  }

  EdgeColoring coloring = edge_color(g, n, decomposition_order);
  Routing r = Routing::empty_for(fs);
  for (const Flow& f : fs.flows()) r.assign(f.id, coloring.color(f.id));
  return r;
}

PhaseOneOutcome phase_one_admission(const FlowSet& fs,
                                    const AlgorithmConfig& cfg,
                                    const Rational& lower_bound) {
  cfg.validate();
  PhaseOneOutcome outcome;
  PhaseOneState& state = outcome.state;
  state.k_copies = copy_count(fs);
  state.in_copies.assign(fs.dims().n_tor,
                         std::vector<PhaseOneState::CopyStats>(state.k_copies));
  state.out_copies.assign(
      fs.dims().n_tor, std::vector<PhaseOneState::CopyStats>(state.k_copies));

  const Rational budget = cfg.p * lower_bound;

  // A switch accepts a flow unless placing it on the lowest free copy x >= q
  // would push the stack of per-copy maxima past the budget. The tested flow
  // counts with max(existing copy max, its own demand); exact equality with
  // the budget still passes.
  auto side_accepts = [&](const std::vector<PhaseOneState::CopyStats>& copies,
                          const Rational& demand, int* free_copy) {
    int x = 1;
    while (copies[x - 1].count >= fs.dims().n_middle) ++x;
    *free_copy = x;
    if (x < cfg.q) return true;
    Rational stacked;
    for (int k = 1; k < x; ++k) stacked += copies[k - 1].max_demand;
    Rational top = copies[x - 1].count > 0
                       ? max(copies[x - 1].max_demand, demand)
                       : demand;
    return stacked + top <= budget;
  };

  auto place = [](std::vector<PhaseOneState::CopyStats>& copies, int copy,
                  const Rational& demand) {
    PhaseOneState::CopyStats& stats = copies[copy - 1];
    if (stats.count == 0) {
      stats.max_demand = demand;
      stats.min_demand = demand;
    } else {
      stats.max_demand = max(stats.max_demand, demand);
      stats.min_demand = min(stats.min_demand, demand);
    }
    ++stats.count;
  };

  for (int id : demand_order(fs)) {
    const Flow& f = fs.flow(id);
    int x = 0, y = 0;
    bool in_ok = side_accepts(state.in_copies[f.in_switch - 1], f.demand, &x);
    bool out_ok =
        side_accepts(state.out_copies[f.out_switch - 1], f.demand, &y);
    if (in_ok && out_ok) {
      state.accepted[id] = {x, y};
      place(state.in_copies[f.in_switch - 1], x, f.demand);
      place(state.out_copies[f.out_switch - 1], y, f.demand);
    } else {
      state.rejected[id] = {!in_ok, !out_ok};
    }
  }

  for (const auto& [id, copies] : state.accepted)
    outcome.accepted_ids.push_back(id);
  return outcome;
}

TwoPhaseResult route_two_phase_detailed(const FlowSet& fs,
                                        const AlgorithmConfig& cfg) {
  cfg.validate();
  ValidationResult valid = validate_flowset(fs);
  if (!valid.ok)
    throw std::invalid_argument("route_two_phase: " + valid.message);

  TwoPhaseResult result;
  result.phase1 =
      phase_one_admission(fs, cfg, congestion_lower_bound(fs));
  const PhaseOneState& state = result.phase1.state;

  // Phase 1.b: link-disjoint routing of the admitted flows across the
  // copy-expanded network; copies of a switch are distinct vertices, so a
  // link of the original network carries at most one admitted flow per copy.
  BipartiteMultigraph g;
  g.left_count = fs.dims().n_tor * state.k_copies;
  g.right_count = fs.dims().n_tor * state.k_copies;
  for (const auto& [id, copies] : state.accepted) {
    const Flow& f = fs.flow(id);
    g.edges.push_back({id, (f.in_switch - 1) * state.k_copies + copies.first,
                       (f.out_switch - 1) * state.k_copies + copies.second});
  }
  EdgeColoring coloring = edge_color(g, fs.dims().n_middle);

  result.phase1_routing = Routing::empty_for(fs);
  LinkLoads loads(fs.dims());
  for (const auto& [id, copies] : state.accepted) {
    int m = coloring.color(id);
    result.phase1_routing.assign(id, m);
    loads.add(fs.flow(id), m);
  }

  // Phase 2: remaining flows in decreasing demand order, each to the path of
  // minimum congestion on top of the phase-1 loads.
  result.routing = result.phase1_routing;
  for (int id : demand_order(fs)) {
    if (state.accepted.count(id)) continue;
    const Flow& f = fs.flow(id);
    int m = loads.best_middle(f);
    result.routing.assign(id, m);
    loads.add(f, m);
  }
  return result;
}

Routing route_two_phase(const FlowSet& fs, const AlgorithmConfig& cfg) {
  return route_two_phase_detailed(fs, cfg).routing;
}

}  // namespace clos
