#pragma once

#include <optional>
#include <string>
#include <vector>

#include "clos/rational.hpp"

namespace clos {

// Dimensions of a three-stage Clos network: n_middle middle switches,
// n_tor input ToR switches and as many output ToR switches, and n_middle
// servers per ToR switch. All links have capacity 1.
struct ClosDims {
  int n_middle = 1;  // paths per source-destination pair
  int n_tor = 1;     // ToR switch pairs

  bool operator==(const ClosDims&) const = default;
};

// An unsplittable demand from one source server to one destination server.
// Indices are 1-based: switches in [n_tor], servers in [n_middle].
struct Flow {
  int id = 0;
  int in_switch = 0;
  int src_server = 0;
  int out_switch = 0;
  int dst_server = 0;
  Rational demand;

  bool operator==(const Flow&) const = default;
};

// A set of flows over one Clos network. Construction enforces the structural
// invariants (index ranges, demands in (0,1], ids 1..n in order); the hose
// constraint is checked separately by validate_flowset so that deliberately
// overloaded instances remain representable.
class FlowSet {
 public:
  FlowSet() = default;
  FlowSet(ClosDims dims, std::vector<Flow> flows);

  const ClosDims& dims() const { return dims_; }
  const std::vector<Flow>& flows() const { return flows_; }
  int size() const { return static_cast<int>(flows_.size()); }
  bool empty() const { return flows_.empty(); }
  const Flow& flow(int id) const { return flows_.at(id - 1); }

  bool operator==(const FlowSet&) const = default;

 private:
  ClosDims dims_{1, 1};
  std::vector<Flow> flows_;
};

// Total assignment flow id -> middle switch. Entries default to 0
// (unassigned) so partially built routings are representable; operations
// that need a total routing report the missing ids.
struct Routing {
  std::vector<int> assignment;  // index id-1 -> middle in [N], 0 = unassigned

  static Routing empty_for(const FlowSet& fs) {
    return Routing{std::vector<int>(fs.size(), 0)};
  }
  int middle_of(int flow_id) const {
    return flow_id >= 1 && flow_id <= static_cast<int>(assignment.size())
               ? assignment[flow_id - 1]
               : 0;
  }
  void assign(int flow_id, int middle) {
    if (flow_id > static_cast<int>(assignment.size()))
      assignment.resize(flow_id, 0);
    assignment[flow_id - 1] = middle;
  }

  bool operator==(const Routing&) const = default;
};

// Exact per-link load between ToR and middle switches. Server<->ToR links are
// out of scope. up(i,m) is the load of the link from input switch i to middle
// m; down(m,j) from middle m to output switch j.
class CongestionReport {
 public:
  CongestionReport(ClosDims dims);

  const Rational& up(int in_switch, int middle) const;
  const Rational& down(int middle, int out_switch) const;
  const Rational& max_congestion() const { return max_; }
  const ClosDims& dims() const { return dims_; }

  void add_up(int in_switch, int middle, const Rational& demand);
  void add_down(int middle, int out_switch, const Rational& demand);

 private:
  ClosDims dims_;
  std::vector<Rational> up_;    // (i-1)*N + (m-1)
  std::vector<Rational> down_;  // (m-1)*R + (j-1)
  Rational max_;
};

struct ValidationResult {
  bool ok = true;
  std::string message;  // names the offending endpoint and its total demand
};

// Checks the hose constraint: per (input switch, source server) the total
// demand is at most 1, and symmetrically per (output switch, destination
// server). Violations are reported, not thrown.
ValidationResult validate_flowset(const FlowSet& fs);

// Exact link loads of a total routing. Throws if some flow is unassigned
// (listing the ids) or a middle index is out of range.
CongestionReport congestion(const FlowSet& fs, const Routing& r);

// Lower bound on the minimum congestion: over every ToR switch, the larger of
// the largest incident demand and the incident total averaged over the
// middle switches. Zero for an empty flow set.
Rational congestion_lower_bound(const FlowSet& fs);

// True iff no ToR<->middle link carries two flows.
bool is_link_disjoint(const FlowSet& fs, const Routing& r);

}  // namespace clos
