#include "clos/io.hpp"

#include <cstdint>
#include <fstream>
#include <sstream>

namespace clos {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
  std::vector<std::string> tokens;
  std::istringstream in(line);
  std::string token;
  while (in >> token) tokens.push_back(token);
  return tokens;
}

int parse_positive_int(const std::string& s, int line, const char* what) {
  try {
    std::size_t used = 0;
    long v = std::stol(s, &used);
    if (used != s.size() || v < 1 || v > INT32_MAX) throw std::exception();
    return static_cast<int>(v);
  } catch (...) {
    throw ParseError(line, std::string(what) + " expects a positive integer, got '" + s + "'");
  }
}

}  // namespace

std::string write_instance(const FlowSet& fs) {
  std::string out = "clos " + std::to_string(fs.dims().n_middle) + " " +
                    std::to_string(fs.dims().n_tor) + "\n";
  for (const Flow& f : fs.flows()) {
    out += "flow " + std::to_string(f.id) + " " + std::to_string(f.in_switch) +
           " " + std::to_string(f.src_server) + " " +
           std::to_string(f.out_switch) + " " + std::to_string(f.dst_server) +
           " " + f.demand.str() + "\n";
  }
  return out;
}

FlowSet parse_instance(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  bool header_seen = false;
  ClosDims dims;
  std::vector<Flow> flows;
  while (std::getline(in, line)) {
    ++line_no;
    auto tokens = tokenize(line);
    if (tokens.empty() || tokens[0][0] == '#') continue;
    if (!header_seen) {
      if (tokens[0] != "clos" || tokens.size() != 3)
        throw ParseError(line_no, "expected header 'clos <N> <R>'");
      dims.n_middle = parse_positive_int(tokens[1], line_no, "N");
      dims.n_tor = parse_positive_int(tokens[2], line_no, "R");
      header_seen = true;
      continue;
    }
    if (tokens[0] != "flow" || tokens.size() != 7)
      throw ParseError(line_no,
                       "expected 'flow <id> <i> <s> <j> <t> <num>/<den>'");
    Flow f;
    f.id = parse_positive_int(tokens[1], line_no, "flow id");
    f.in_switch = parse_positive_int(tokens[2], line_no, "input switch");
    f.src_server = parse_positive_int(tokens[3], line_no, "source server");
    f.out_switch = parse_positive_int(tokens[4], line_no, "output switch");
    f.dst_server = parse_positive_int(tokens[5], line_no, "destination server");
    try {
      f.demand = Rational::parse(tokens[6]);
    } catch (const std::exception& e) {
      throw ParseError(line_no, std::string("bad demand: ") + e.what());
    }
    flows.push_back(f);
  }
  if (!header_seen) throw ParseError(line_no, "missing 'clos <N> <R>' header");
  try {
    return FlowSet(dims, std::move(flows));
  } catch (const std::exception& e) {
    throw ParseError(line_no, e.what());
  }
}

Routing RoutingFile::to_routing(const FlowSet& fs) const {
  Routing r = Routing::empty_for(fs);
  for (const auto& [id, m] : assignments) {
    if (id < 1 || id > fs.size())
      throw std::invalid_argument("routing assigns unknown flow id " +
                                  std::to_string(id));
    r.assign(id, m);
  }
  return r;
}

std::string write_routing(
    const Routing& r, const std::string& instance_ref,
    const std::vector<std::pair<std::string, std::string>>& expectations) {
  std::string out = "routing " + instance_ref + "\n";
  for (const auto& [name, value] : expectations)
    out += "expect " + name + " " + value + "\n";
  for (std::size_t i = 0; i < r.assignment.size(); ++i) {
    if (r.assignment[i] == 0) continue;
    out += "assign " + std::to_string(i + 1) + " " +
           std::to_string(r.assignment[i]) + "\n";
  }
  return out;
}

RoutingFile parse_routing(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  bool header_seen = false;
  RoutingFile file;
  while (std::getline(in, line)) {
    ++line_no;
    auto tokens = tokenize(line);
    if (tokens.empty() || tokens[0][0] == '#') continue;
    if (!header_seen) {
      if (tokens[0] != "routing" || tokens.size() != 2)
        throw ParseError(line_no, "expected header 'routing <instance-ref>'");
      file.instance_ref = tokens[1];
      header_seen = true;
      continue;
    }
    if (tokens[0] == "expect") {
      if (tokens.size() != 3)
        throw ParseError(line_no, "expected 'expect <name> <value>'");
      file.expectations.emplace_back(tokens[1], tokens[2]);
      continue;
    }
    if (tokens[0] != "assign" || tokens.size() != 3)
      throw ParseError(line_no, "expected 'assign <flow-id> <middle>'");
    int id = parse_positive_int(tokens[1], line_no, "flow id");
    int m = parse_positive_int(tokens[2], line_no, "middle switch");
    if (!file.assignments.emplace(id, m).second)
      throw ParseError(line_no,
                       "flow " + std::to_string(id) + " assigned twice");
  }
  if (!header_seen)
    throw ParseError(line_no, "missing 'routing <instance-ref>' header");
  return file;
}

std::string instance_digest(const FlowSet& fs) {
  const std::string text = write_instance(fs);
  std::uint64_t hash = 14695981039346656037ull;
  for (unsigned char c : text) {
    hash ^= c;
    hash *= 1099511628211ull;
  }
  static const char* hex = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[i] = hex[hash & 0xf];
    hash >>= 4;
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << content;
}

}  // namespace clos
