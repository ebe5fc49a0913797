// Command-line workbench: generate instances, run the routing algorithms,
// solve small instances exactly, verify routing files, drive the online
// adversary, and benchmark approximation ratios. Reports are printed for
// humans followed by line-delimited JSON records prefixed with "@ ".
//
// Exit codes: 0 success, 1 verification failure or violation, 2 usage or
// parse errors.

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "clos/algorithms.hpp"
#include "clos/core.hpp"
#include "clos/graph.hpp"
#include "clos/instances.hpp"
#include "clos/io.hpp"
#include "clos/online.hpp"
#include "clos/oracle.hpp"

using json = nlohmann::json;
using namespace clos;

namespace {

constexpr int kOk = 0;
constexpr int kViolation = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct Violation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::uint64_t oracle_budget_from_env() {
  const char* env = std::getenv("CLOS_ORACLE_BUDGET");
  if (!env) return kDefaultOracleBudget;
  return std::strtoull(env, nullptr, 10);
}

FlowSet load_instance(const std::string& path) {
  return parse_instance(read_file(path));
}

Rational parse_rational_flag(const std::string& text, const char* flag) {
  try {
    return Rational::parse(text);
  } catch (const std::exception& e) {
    throw UsageError(std::string(flag) + ": " + e.what());
  }
}

void emit_record(const json& record) {
  std::cout << "@ " << record.dump() << "\n";
}

void print_link_table(const FlowSet& fs, const CongestionReport& report) {
  for (int i = 1; i <= fs.dims().n_tor; ++i)
    for (int m = 1; m <= fs.dims().n_middle; ++m)
      if (!(report.up(i, m) == Rational(0)))
        std::cout << "  link I" << i << "M" << m << " " << report.up(i, m).str()
                  << "\n";
  for (int m = 1; m <= fs.dims().n_middle; ++m)
    for (int j = 1; j <= fs.dims().n_tor; ++j)
      if (!(report.down(m, j) == Rational(0)))
        std::cout << "  link M" << m << "O" << j << " "
                  << report.down(m, j).str() << "\n";
}

json dims_json(const FlowSet& fs) {
  return {{"n_middle", fs.dims().n_middle},
          {"n_tor", fs.dims().n_tor},
          {"flows", fs.size()}};
}

// --- gen -------------------------------------------------------------------

struct GenOptions {
  std::string family;
  std::string out;
  int n = 3;
  int r = 3;
  int s = 1;
  std::string eps = "1/2";
  int flows = 6;
  int max_den = 6;
  std::optional<std::uint64_t> seed;
  std::string graph = "k4";
  std::string graph_file;
};

SimpleGraph resolve_graph(const GenOptions& opt) {
  if (!opt.graph_file.empty()) {
    // minimal edge list: first line "V E", then one "u v" line per edge
    std::istringstream in(read_file(opt.graph_file));
    SimpleGraph g;
    int edge_count = 0;
    if (!(in >> g.vertex_count >> edge_count))
      throw UsageError("graph file: expected 'V E' header");
    for (int e = 0; e < edge_count; ++e) {
      int u = 0, v = 0;
      if (!(in >> u >> v)) throw UsageError("graph file: truncated edge list");
      g.edges.push_back({u, v});
    }
    return g;
  }
  if (opt.graph == "k4") return k4_graph();
  if (opt.graph == "k4-subdivided") return k4_subdivided_graph();
  if (opt.graph == "triangle") return triangle_graph();
  throw UsageError("unknown graph '" + opt.graph +
                   "' (use k4, k4-subdivided, triangle, or --graph-file)");
}

void write_named_instance(const NamedInstance& inst, const std::string& out,
                          std::vector<std::string>* written) {
  std::string digest = instance_digest(inst.flowset);
  write_file(out + ".instance", write_instance(inst.flowset));
  written->push_back(out + ".instance");
  for (const auto& [name, routing] : inst.witness_routings) {
    std::vector<std::pair<std::string, std::string>> expectations;
    auto it = inst.expected.find("congestion:" + name);
    if (it != inst.expected.end())
      expectations.push_back({"congestion", it->second.str()});
    write_file(out + "." + name + ".routing",
               write_routing(routing, digest, expectations));
    written->push_back(out + "." + name + ".routing");
  }
}

void write_sequence(const FlowSequence& seq, const Routing* witness,
                    const std::string& out, std::vector<std::string>* written) {
  write_file(out + ".instance", write_instance(seq.flows));
  written->push_back(out + ".instance");
  if (witness) {
    write_file(out + ".witness.routing",
               write_routing(*witness, instance_digest(seq.flows),
                             {{"congestion", Rational(1).str()},
                              {"link-disjoint", "1"}}));
    written->push_back(out + ".witness.routing");
  }
}

int cmd_gen(const GenOptions& opt) {
  std::vector<std::string> written;
  if (opt.family == "cross-gadget") {
    write_named_instance(cross_gadget(opt.n), opt.out, &written);
  } else if (opt.family == "theorem6") {
    write_named_instance(three_halves_lower_bound(opt.n), opt.out, &written);
  } else if (opt.family == "mt-worstcase") {
    Rational eps = parse_rational_flag(opt.eps, "--eps");
    write_named_instance(melen_turner_worstcase(opt.n, eps), opt.out,
                         &written);
  } else if (opt.family == "reduction") {
    ReductionInstance inst = coloring_reduction(resolve_graph(opt));
    NamedInstance named = inst.instance;
    if (auto coloring = three_edge_colorable(inst.graph)) {
      Routing witness = routing_from_coloring(inst, *coloring);
      named.witness_routings["optimal"] = witness;
      named.expected["congestion:optimal"] = Rational(1);
    }
    write_named_instance(named, opt.out, &written);
  } else if (opt.family == "online-xy") {
    OnlinePair pair = online_sequences(opt.n);
    write_sequence(pair.x, &pair.x_witness, opt.out + ".x", &written);
    write_sequence(pair.y, &pair.y_witness, opt.out + ".y", &written);
  } else if (opt.family == "supersequences") {
    auto family = supersequences(opt.n, 3 * opt.s);
    for (std::size_t i = 0; i < family.size(); ++i)
      write_sequence(family[i].sequence, &family[i].witness,
                     opt.out + ".seq" + std::to_string(i), &written);
  } else if (opt.family == "random") {
    if (!opt.seed)
      throw UsageError("--seed is required for the random family");
    FlowSet fs = random_hose_instance({opt.n, opt.r}, opt.flows, opt.max_den,
                                      *opt.seed);
    write_file(opt.out + ".instance", write_instance(fs));
    written.push_back(opt.out + ".instance");
  } else {
    throw UsageError("unknown family '" + opt.family + "'");
  }

  for (const std::string& path : written)
    std::cout << "wrote " << path << "\n";
  emit_record({{"cmd", "gen"}, {"family", opt.family}, {"files", written}});
  return kOk;
}

// --- route -------------------------------------------------------------------

int cmd_route(const std::string& instance_path, const std::string& algorithm,
              const std::string& out, const std::string& p_flag, int q_flag,
              std::optional<std::uint64_t> seed, bool with_opt) {
  FlowSet fs = load_instance(instance_path);
  ValidationResult valid = validate_flowset(fs);
  if (!valid.ok)
    throw Violation("instance violates the hose model: " + valid.message);

  auto start = std::chrono::steady_clock::now();
  Routing routing;
  json config;
  if (algorithm == "two-phase") {
    AlgorithmConfig cfg;
    cfg.p = parse_rational_flag(p_flag, "--p");
    cfg.q = q_flag;
    try {
      cfg.validate();
    } catch (const std::exception& e) {
      throw UsageError(e.what());
    }
    routing = route_two_phase(fs, cfg);
    config = {{"p", cfg.p.str()}, {"q", cfg.q}};
  } else if (algorithm == "sorted-greedy") {
    routing = sorted_greedy(fs);
  } else if (algorithm == "unsorted-greedy") {
    std::vector<int> order(fs.size());
    std::iota(order.begin(), order.end(), 1);
    routing = unsorted_greedy(fs, order);
    config = {{"order", "by-id"}};
  } else if (algorithm == "ecmp") {
    if (!seed) throw UsageError("--seed is required for ecmp");
    routing = ecmp(fs, *seed);
    config = {{"seed", *seed}};
  } else if (algorithm == "melen-turner") {
    routing = melen_turner(fs);
  } else {
    throw UsageError("unknown algorithm '" + algorithm + "'");
  }
  auto elapsed = std::chrono::duration_cast<std::chrono::microseconds>(
                     std::chrono::steady_clock::now() - start)
                     .count();

  CongestionReport report = congestion(fs, routing);
  std::string digest = instance_digest(fs);

  std::cout << "instance " << digest << " (N=" << fs.dims().n_middle
            << " R=" << fs.dims().n_tor << " flows=" << fs.size() << ")\n";
  std::cout << "algorithm " << algorithm << "\n";
  std::cout << "congestion " << report.max_congestion().str() << "\n";
  print_link_table(fs, report);

  json record{{"cmd", "route"},
              {"digest", digest},
              {"instance", dims_json(fs)},
              {"algorithm", algorithm},
              {"config", config},
              {"congestion", report.max_congestion().str()},
              {"micros", elapsed}};

  if (with_opt) {
    OracleOutcome outcome = exact_opt(fs, oracle_budget_from_env());
    if (outcome.budget_exceeded()) {
      std::cout << "opt unknown (budget exceeded after "
                << outcome.nodes_explored << " nodes)\n";
      record["opt"] = nullptr;
    } else {
      Rational ratio = outcome.result->opt.is_zero()
                           ? Rational(1)
                           : report.max_congestion() / outcome.result->opt;
      std::cout << "opt " << outcome.result->opt.str() << "\n";
      std::cout << "ratio " << ratio.str() << "\n";
      record["opt"] = outcome.result->opt.str();
      record["ratio"] = ratio.str();
    }
  }
  std::cout << "time " << elapsed / 1000.0 << "ms\n";

  if (!out.empty()) {
    write_file(out, write_routing(routing, digest,
                                  {{"congestion",
                                    report.max_congestion().str()}}));
    std::cout << "wrote " << out << "\n";
    record["routing_file"] = out;
  }
  emit_record(record);
  return kOk;
}

// --- opt -------------------------------------------------------------------

int cmd_opt(const std::string& instance_path, std::uint64_t budget,
            const std::string& out) {
  FlowSet fs = load_instance(instance_path);
  OracleOutcome outcome = exact_opt(fs, budget);
  if (outcome.budget_exceeded()) {
    std::cout << "budget exceeded after " << outcome.nodes_explored
              << " nodes; no optimum reported\n";
    emit_record({{"cmd", "opt"},
                 {"digest", instance_digest(fs)},
                 {"status", "budget-exceeded"},
                 {"nodes", outcome.nodes_explored}});
    return kViolation;
  }
  std::cout << "opt " << outcome.result->opt.str() << " (nodes "
            << outcome.result->nodes_explored << ")\n";
  if (!out.empty()) {
    write_file(out,
               write_routing(outcome.result->witness, instance_digest(fs),
                             {{"congestion", outcome.result->opt.str()}}));
    std::cout << "wrote " << out << "\n";
  }
  emit_record({{"cmd", "opt"},
               {"digest", instance_digest(fs)},
               {"opt", outcome.result->opt.str()},
               {"nodes", outcome.result->nodes_explored}});
  return kOk;
}

// --- verify ------------------------------------------------------------------

int cmd_verify(const std::string& instance_path,
               const std::string& routing_path) {
  FlowSet fs = load_instance(instance_path);
  RoutingFile file = parse_routing(read_file(routing_path));

  std::vector<std::string> problems;
  std::string digest = instance_digest(fs);
  if (file.instance_ref != "-" && file.instance_ref != digest)
    problems.push_back("routing references instance " + file.instance_ref +
                       ", file digests to " + digest);

  Routing routing = file.to_routing(fs);
  std::vector<int> missing;
  for (int id = 1; id <= fs.size(); ++id)
    if (routing.middle_of(id) == 0) missing.push_back(id);
  if (!missing.empty()) {
    std::string list;
    for (int id : missing)
      list += (list.empty() ? "" : ",") + std::to_string(id);
    throw Violation("routing leaves flows unassigned: " + list);
  }

  CongestionReport report = congestion(fs, routing);
  bool disjoint = is_link_disjoint(fs, routing);
  std::cout << "instance " << digest << "\n";
  std::cout << "congestion " << report.max_congestion().str() << "\n";
  std::cout << "link-disjoint " << (disjoint ? "yes" : "no") << "\n";
  print_link_table(fs, report);

  for (const auto& [name, value] : file.expectations) {
    std::string actual;
    if (name == "congestion")
      actual = report.max_congestion().str();
    else if (name == "link-disjoint")
      actual = disjoint ? "1" : "0";
    else {
      std::cout << "expectation " << name << ": unknown, skipped\n";
      continue;
    }
    if (actual == value) {
      std::cout << "expectation " << name << " " << value << " confirmed\n";
    } else {
      problems.push_back("expectation " + name + ": expected " + value +
                         ", recomputed " + actual);
    }
  }

  emit_record({{"cmd", "verify"},
               {"digest", digest},
               {"congestion", report.max_congestion().str()},
               {"link_disjoint", disjoint},
               {"problems", problems}});
  for (const std::string& p : problems) std::cout << "MISMATCH " << p << "\n";
  return problems.empty() ? kOk : kViolation;
}

// --- adversary -----------------------------------------------------------------

int cmd_adversary(const std::string& router_name, int n,
                  const std::string& mode, int s,
                  std::optional<std::uint64_t> seed, int trials) {
  if (router_name == "ecmp" && !seed)
    throw UsageError("--seed is required for the ecmp router");
  std::uint64_t seed_value = seed.value_or(0);

  if (mode == "xy") {
    auto router = make_router(router_name, seed_value);
    AdversaryOutcome outcome = adversary_xy(*router, n);
    std::cout << "router " << router_name << "\n";
    std::cout << "chosen sequence " << outcome.chosen_name << "\n";
    for (const Flow& f : outcome.chosen_sequence.flows.flows())
      std::cout << "  flow " << f.id << " I" << f.in_switch << "->O"
                << f.out_switch << " dem " << f.demand.str() << " -> M"
                << outcome.routing.middle_of(f.id) << "\n";
    std::cout << "final congestion " << outcome.final_congestion.str() << "\n";
    std::cout << "witness congestion " << outcome.opt_witness_congestion.str()
              << "\n";
    emit_record({{"cmd", "adversary"},
                 {"mode", "xy"},
                 {"router", router_name},
                 {"n", n},
                 {"chosen", outcome.chosen_name},
                 {"congestion", outcome.final_congestion.str()},
                 {"witness", outcome.opt_witness_congestion.str()}});
    return kOk;
  }
  if (mode == "super") {
    auto factory = [&](std::uint64_t router_seed) {
      return make_router(router_name,
                         router_name == "ecmp" ? router_seed : seed_value);
    };
    ExperimentResult result =
        randomized_experiment(factory, n, s, trials, seed_value);
    std::cout << "router " << router_name << ", 2^" << s
              << " sequence family, runs " << result.runs << "\n";
    std::cout << "mean congestion " << result.mean_congestion.str() << "\n";
    std::cout << "link-disjoint runs " << result.link_disjoint_count << "\n";
    json runs = json::array();
    for (std::size_t i = 0; i < result.congestions.size(); ++i)
      runs.push_back({{"sequence", result.sequence_indices[i]},
                      {"congestion", result.congestions[i].str()}});
    emit_record({{"cmd", "adversary"},
                 {"mode", "super"},
                 {"router", router_name},
                 {"n", n},
                 {"s", s},
                 {"mean", result.mean_congestion.str()},
                 {"link_disjoint", result.link_disjoint_count},
                 {"runs", runs}});
    return kOk;
  }
  throw UsageError("unknown mode '" + mode + "' (use xy or super)");
}

// --- bench -------------------------------------------------------------------

int cmd_bench(int count, std::uint64_t seed, int n_max, int r_max,
              int flows_max, int max_den, const std::string& algorithms_flag) {
  std::vector<std::string> algorithms;
  {
    std::string token;
    std::istringstream in(algorithms_flag);
    while (std::getline(in, token, ','))
      if (!token.empty()) algorithms.push_back(token);
  }

  struct Row {
    Rational max_congestion;
    Rational sum_congestion;
    Rational max_ratio;
    int runs = 0;
  };
  std::map<std::string, Row> rows;
  int skipped = 0;

  for (int i = 0; i < count; ++i) {
    ClosDims dims{i % n_max + 1, (i / n_max) % r_max + 1};
    FlowSet fs = random_hose_instance(dims, i % flows_max + 1, max_den,
                                      seed + static_cast<std::uint64_t>(i));
    OracleOutcome outcome = exact_opt(fs, oracle_budget_from_env());
    if (outcome.budget_exceeded()) {
      ++skipped;
      continue;
    }
    const Rational& opt = outcome.result->opt;
    for (const std::string& name : algorithms) {
      Routing routing;
      if (name == "two-phase")
        routing = route_two_phase(fs);
      else if (name == "sorted-greedy")
        routing = sorted_greedy(fs);
      else if (name == "unsorted-greedy") {
        std::vector<int> order(fs.size());
        std::iota(order.begin(), order.end(), 1);
        routing = unsorted_greedy(fs, order);
      } else if (name == "ecmp")
        routing = ecmp(fs, seed + static_cast<std::uint64_t>(i));
      else if (name == "melen-turner")
        routing = melen_turner(fs);
      else
        throw UsageError("unknown algorithm '" + name + "'");

      Rational cong = congestion(fs, routing).max_congestion();
      Row& row = rows[name];
      row.max_congestion = max(row.max_congestion, cong);
      row.sum_congestion += cong;
      if (!opt.is_zero()) row.max_ratio = max(row.max_ratio, cong / opt);
      ++row.runs;
    }
  }

  std::cout << "instances " << count << ", oracle-skipped " << skipped << "\n";
  json table = json::array();
  for (const std::string& name : algorithms) {
    const Row& row = rows[name];
    Rational mean =
        row.runs == 0 ? Rational(0) : row.sum_congestion / Rational(row.runs);
    std::cout << name << ": max congestion " << row.max_congestion.str()
              << ", mean " << mean.str() << ", max ratio "
              << row.max_ratio.str() << "\n";
    table.push_back({{"algorithm", name},
                     {"max_congestion", row.max_congestion.str()},
                     {"mean_congestion", mean.str()},
                     {"max_ratio", row.max_ratio.str()},
                     {"runs", row.runs}});
  }
  emit_record({{"cmd", "bench"},
               {"count", count},
               {"seed", seed},
               {"skipped", skipped},
               {"table", table}});
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"minimum-congestion routing workbench for Clos networks"};
  app.require_subcommand(1);

  GenOptions gen;
  auto* gen_cmd = app.add_subcommand("gen", "generate an instance family");
  gen_cmd->add_option("--family", gen.family,
                      "cross-gadget | theorem6 | mt-worstcase | reduction | "
                      "online-xy | supersequences | random")
      ->required();
  gen_cmd->add_option("--out", gen.out, "output path prefix")->required();
  gen_cmd->add_option("--n", gen.n, "middle switches");
  gen_cmd->add_option("--r", gen.r, "ToR switch pairs (random family)");
  gen_cmd->add_option("--s", gen.s, "blocks (supersequences)");
  gen_cmd->add_option("--eps", gen.eps, "demand of the small flows");
  gen_cmd->add_option("--flows", gen.flows, "target flow count (random)");
  gen_cmd->add_option("--max-den", gen.max_den,
                      "largest demand denominator (random)");
  std::uint64_t gen_seed = 0;
  auto* gen_seed_opt = gen_cmd->add_option("--seed", gen_seed, "RNG seed");
  gen_cmd->add_option("--graph", gen.graph,
                      "built-in graph for the reduction family");
  gen_cmd->add_option("--graph-file", gen.graph_file,
                      "edge-list file: 'V E' then one 'u v' line per edge");

  std::string route_instance, route_algorithm, route_out, route_p = "9/5";
  int route_q = 3;
  std::uint64_t route_seed = 0;
  bool route_with_opt = false;
  auto* route_cmd = app.add_subcommand("route", "run a routing algorithm");
  route_cmd->add_option("--instance", route_instance)->required();
  route_cmd
      ->add_option("--algorithm", route_algorithm,
                   "two-phase | sorted-greedy | unsorted-greedy | ecmp | "
                   "melen-turner")
      ->required();
  route_cmd->add_option("--out", route_out, "routing file to write");
  route_cmd->add_option("--p", route_p, "two-phase budget factor");
  route_cmd->add_option("--q", route_q, "two-phase copy threshold");
  auto* route_seed_opt = route_cmd->add_option("--seed", route_seed);
  route_cmd->add_flag("--with-opt", route_with_opt,
                      "also solve exactly and report the ratio");

  std::string opt_instance, opt_out;
  std::uint64_t opt_budget = oracle_budget_from_env();
  auto* opt_cmd = app.add_subcommand("opt", "solve exactly (desk scale)");
  opt_cmd->add_option("--instance", opt_instance)->required();
  opt_cmd->add_option("--budget", opt_budget, "search node budget");
  opt_cmd->add_option("--out", opt_out, "witness routing file to write");

  std::string verify_instance, verify_routing;
  auto* verify_cmd =
      app.add_subcommand("verify", "recompute congestion of a routing file");
  verify_cmd->add_option("--instance", verify_instance)->required();
  verify_cmd->add_option("--routing", verify_routing)->required();

  std::string adv_router = "unsorted-greedy", adv_mode = "xy";
  int adv_n = 4, adv_s = 2, adv_trials = 0;
  std::uint64_t adv_seed = 0;
  auto* adv_cmd =
      app.add_subcommand("adversary", "online lower-bound experiments");
  adv_cmd->add_option("--router", adv_router,
                      "unsorted-greedy | sorted-greedy | round-robin | ecmp");
  adv_cmd->add_option("--n", adv_n, "middle switches (even)");
  adv_cmd->add_option("--mode", adv_mode, "xy | super");
  adv_cmd->add_option("--s", adv_s, "blocks for super mode");
  adv_cmd->add_option("--trials", adv_trials,
                      "sampled runs (0 = exhaustive over the family)");
  auto* adv_seed_opt = adv_cmd->add_option("--seed", adv_seed);

  int bench_count = 1000, bench_nmax = 3, bench_rmax = 3, bench_fmax = 9,
      bench_den = 6;
  std::uint64_t bench_seed = 0;
  std::string bench_algorithms =
      "two-phase,sorted-greedy,unsorted-greedy,ecmp,melen-turner";
  auto* bench_cmd =
      app.add_subcommand("bench", "ratio table over a random corpus");
  bench_cmd->add_option("--count", bench_count);
  bench_cmd->add_option("--seed", bench_seed)->required();
  bench_cmd->add_option("--n-max", bench_nmax);
  bench_cmd->add_option("--r-max", bench_rmax);
  bench_cmd->add_option("--flows-max", bench_fmax);
  bench_cmd->add_option("--max-den", bench_den);
  bench_cmd->add_option("--algorithms", bench_algorithms, "comma-separated");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (gen_cmd->parsed()) {
      if (*gen_seed_opt) gen.seed = gen_seed;
      return cmd_gen(gen);
    }
    if (route_cmd->parsed()) {
      std::optional<std::uint64_t> seed;
      if (*route_seed_opt) seed = route_seed;
      return cmd_route(route_instance, route_algorithm, route_out, route_p,
                       route_q, seed, route_with_opt);
    }
    if (opt_cmd->parsed()) return cmd_opt(opt_instance, opt_budget, opt_out);
    if (verify_cmd->parsed())
      return cmd_verify(verify_instance, verify_routing);
    if (adv_cmd->parsed()) {
      std::optional<std::uint64_t> seed;
      if (*adv_seed_opt) seed = adv_seed;
      return cmd_adversary(adv_router, adv_n, adv_mode, adv_s, seed,
                           adv_trials);
    }
    if (bench_cmd->parsed())
      return cmd_bench(bench_count, bench_seed, bench_nmax, bench_rmax,
                       bench_fmax, bench_den, bench_algorithms);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const Violation& e) {
    std::cerr << "violation: " << e.what() << "\n";
    return kViolation;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
