#include "clos/core.hpp"

#include <map>
#include <stdexcept>

namespace clos {

namespace {

void check_range(int value, int lo, int hi, const char* what, int flow_id) {
  if (value < lo || value > hi)
    throw std::invalid_argument("flow " + std::to_string(flow_id) + ": " +
                                what + " " + std::to_string(value) +
                                " outside [" + std::to_string(lo) + "," +
                                std::to_string(hi) + "]");
}

}  // namespace

FlowSet::FlowSet(ClosDims dims, std::vector<Flow> flows)
    : dims_(dims), flows_(std::move(flows)) {
  if (dims_.n_middle < 1 || dims_.n_tor < 1)
    throw std::invalid_argument("clos dimensions must be positive");
  int expected_id = 1;
  for (const Flow& f : flows_) {
    if (f.id != expected_id)
      throw std::invalid_argument("flow ids must be 1..n in order, got " +
                                  std::to_string(f.id) + " at position " +
                                  std::to_string(expected_id));
    check_range(f.in_switch, 1, dims_.n_tor, "input switch", f.id);
    check_range(f.out_switch, 1, dims_.n_tor, "output switch", f.id);
    check_range(f.src_server, 1, dims_.n_middle, "source server", f.id);
    check_range(f.dst_server, 1, dims_.n_middle, "destination server", f.id);
    if (f.demand <= Rational(0) || f.demand > Rational(1))
      throw std::invalid_argument("flow " + std::to_string(f.id) +
                                  ": demand " + f.demand.str() +
                                  " outside (0,1]");
    ++expected_id;
  }
}

CongestionReport::CongestionReport(ClosDims dims)
    : dims_(dims),
      up_(static_cast<std::size_t>(dims.n_tor) * dims.n_middle),
      down_(static_cast<std::size_t>(dims.n_tor) * dims.n_middle) {}

const Rational& CongestionReport::up(int in_switch, int middle) const {
  return up_.at(static_cast<std::size_t>(in_switch - 1) * dims_.n_middle +
                (middle - 1));
}

const Rational& CongestionReport::down(int middle, int out_switch) const {
  return down_.at(static_cast<std::size_t>(middle - 1) * dims_.n_tor +
                  (out_switch - 1));
}

void CongestionReport::add_up(int in_switch, int middle,
                              const Rational& demand) {
  Rational& cell = up_.at(
      static_cast<std::size_t>(in_switch - 1) * dims_.n_middle + (middle - 1));
  cell += demand;
  max_ = clos::max(max_, cell);
}

void CongestionReport::add_down(int middle, int out_switch,
                                const Rational& demand) {
  Rational& cell = down_.at(static_cast<std::size_t>(middle - 1) * dims_.n_tor +
                            (out_switch - 1));
  cell += demand;
  max_ = clos::max(max_, cell);
}

ValidationResult validate_flowset(const FlowSet& fs) {
  std::map<std::pair<int, int>, Rational> sources;
  std::map<std::pair<int, int>, Rational> sinks;
  for (const Flow& f : fs.flows()) {
    sources[{f.in_switch, f.src_server}] += f.demand;
    sinks[{f.out_switch, f.dst_server}] += f.demand;
  }
  for (const auto& [key, total] : sources) {
    if (total > Rational(1))
      return {false, "source (" + std::to_string(key.first) + "," +
                         std::to_string(key.second) + ") carries total " +
                         total.str() + " > 1"};
  }
  for (const auto& [key, total] : sinks) {
    if (total > Rational(1))
      return {false, "destination (" + std::to_string(key.first) + "," +
                         std::to_string(key.second) + ") carries total " +
                         total.str() + " > 1"};
  }
  return {true, ""};
}

CongestionReport congestion(const FlowSet& fs, const Routing& r) {
  CongestionReport report(fs.dims());
  std::string missing;
  for (const Flow& f : fs.flows()) {
    int m = r.middle_of(f.id);
    if (m == 0) {
      missing += (missing.empty() ? "" : ",") + std::to_string(f.id);
      continue;
    }
    if (m < 1 || m > fs.dims().n_middle)
      throw std::invalid_argument("flow " + std::to_string(f.id) +
                                  " assigned to middle " + std::to_string(m) +
                                  " outside [1," +
                                  std::to_string(fs.dims().n_middle) + "]");
    report.add_up(f.in_switch, m, f.demand);
    report.add_down(m, f.out_switch, f.demand);
  }
  if (!missing.empty())
    throw std::invalid_argument("routing leaves flows unassigned: " + missing);
  return report;
}

Rational congestion_lower_bound(const FlowSet& fs) {
  const int n = fs.dims().n_middle;
  const int r = fs.dims().n_tor;
  std::vector<Rational> in_sum(r), out_sum(r), in_max(r), out_max(r);
  for (const Flow& f : fs.flows()) {
    in_sum[f.in_switch - 1] += f.demand;
    out_sum[f.out_switch - 1] += f.demand;
    in_max[f.in_switch - 1] = max(in_max[f.in_switch - 1], f.demand);
    out_max[f.out_switch - 1] = max(out_max[f.out_switch - 1], f.demand);
  }
  Rational bound;
  for (int i = 0; i < r; ++i) {
    bound = max(bound, max(in_max[i], in_sum[i] / Rational(n)));
    bound = max(bound, max(out_max[i], out_sum[i] / Rational(n)));
  }
  return bound;
}

bool is_link_disjoint(const FlowSet& fs, const Routing& r) {
  const int n = fs.dims().n_middle;
  const int rt = fs.dims().n_tor;
  std::vector<int> up(static_cast<std::size_t>(rt) * n, 0);
  std::vector<int> down(static_cast<std::size_t>(rt) * n, 0);
  std::string missing;
  for (const Flow& f : fs.flows()) {
    int m = r.middle_of(f.id);
    if (m == 0) {
      missing += (missing.empty() ? "" : ",") + std::to_string(f.id);
      continue;
    }
    if (m < 1 || m > n)
      throw std::invalid_argument("flow " + std::to_string(f.id) +
                                  " assigned to middle " + std::to_string(m) +
                                  " outside [1," + std::to_string(n) + "]");
    if (++up[static_cast<std::size_t>(f.in_switch - 1) * n + (m - 1)] > 1)
      return false;
    if (++down[static_cast<std::size_t>(f.out_switch - 1) * n + (m - 1)] > 1)
      return false;
  }
  if (!missing.empty())
    throw std::invalid_argument("routing leaves flows unassigned: " + missing);
  return true;
}

}  // namespace clos
