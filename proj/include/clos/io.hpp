#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "clos/core.hpp"

namespace clos {

struct ParseError : std::runtime_error {
  ParseError(int line_number, const std::string& what)
      : std::runtime_error("line " + std::to_string(line_number) + ": " +
                           what),
        line(line_number) {}
  int line;
};

// Line-oriented instance format:
//   clos <N> <R>
//   flow <id> <in_switch> <src_server> <out_switch> <dst_server> <num>/<den>
// Blank lines and lines starting with '#' are ignored. write/parse round-trip
// bit-exactly on canonical output.
std::string write_instance(const FlowSet& fs);
FlowSet parse_instance(std::string_view text);

// Routing format:
//   routing <instance-digest-or-dash>
//   expect <name> <value>        (optional, e.g. "expect congestion 3/2")
//   assign <flow-id> <middle>
struct RoutingFile {
  std::string instance_ref = "-";
  std::map<int, int> assignments;                     // flow id -> middle
  std::vector<std::pair<std::string, std::string>> expectations;

  // Converts to a Routing covering the flow set; unmapped flows stay 0.
  Routing to_routing(const FlowSet& fs) const;
};

std::string write_routing(const Routing& r, const std::string& instance_ref,
                          const std::vector<std::pair<std::string, std::string>>&
                              expectations = {});
RoutingFile parse_routing(std::string_view text);

// FNV-1a hash of the canonical instance text, as 16 hex digits. Stable across
// runs and platforms.
std::string instance_digest(const FlowSet& fs);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace clos
