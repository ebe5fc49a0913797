// End-to-end checks of the command-line tool. Takes the binary path as
// argv[1], works inside a scratch directory, and verifies exit codes plus
// the determinism and round-trip guarantees of the file formats.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

std::string g_binary;
int g_failures = 0;

void expect(bool ok, const std::string& what) {
  if (ok) {
    std::cout << "ok: " << what << "\n";
  } else {
    std::cout << "FAILED: " << what << "\n";
    ++g_failures;
  }
}

int run(const std::string& args, std::string* output = nullptr) {
  std::string command = g_binary + " " + args + " > cli_out.txt 2>&1";
  int status = std::system(command.c_str());
  if (output) {
    std::ifstream in("cli_out.txt");
    std::stringstream buffer;
    buffer << in.rdbuf();
    *output = buffer.str();
  }
  if (status < 0) return -1;
  return WEXITSTATUS(status);
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: cli_test <path-to-binary>\n";
    return 2;
  }
  g_binary = std::filesystem::absolute(argv[1]).string();

  auto scratch = std::filesystem::temp_directory_path() / "clos_cli_test";
  std::filesystem::remove_all(scratch);
  std::filesystem::create_directories(scratch);
  std::filesystem::current_path(scratch);

  std::string out;

  expect(run("gen --family random --seed 7 --n 3 --r 3 --flows 6 --out a") == 0,
         "random generation succeeds");
  expect(run("gen --family random --seed 7 --n 3 --r 3 --flows 6 --out b") == 0,
         "second generation succeeds");
  expect(slurp("a.instance") == slurp("b.instance"),
         "same seed gives byte-identical instances");
  expect(run("gen --family random --out c") == 2,
         "random generation without a seed is a usage error");

  expect(run("gen --family theorem6 --n 3 --out t6") == 0,
         "lower-bound family generation succeeds");
  expect(contains(slurp("t6.instance"), "clos 3 4"), "instance header");
  expect(run("verify --instance t6.instance --routing t6.optimal.routing",
             &out) == 0,
         "optimal witness verifies clean");
  expect(contains(out, "congestion 3/2"), "witness congestion is 3/2");

  {
    // stack two unit gadget flows: expectation must be flagged, exit code 1
    std::string routing = slurp("t6.optimal.routing");
    auto pos = routing.find("assign 1 1\n");
    expect(pos != std::string::npos, "witness assigns flow 1 to middle 1");
    routing.replace(pos, 11, "assign 1 2\n");
    std::ofstream("t6.tampered.routing") << routing;
    expect(run("verify --instance t6.instance --routing t6.tampered.routing",
               &out) == 1,
           "tampered witness fails verification");
    expect(contains(out, "MISMATCH"), "mismatch is flagged");
  }

  expect(run("gen --family cross-gadget --n 1 --out bad") == 2,
         "gadget of size one is rejected");
  expect(run("gen --family nonsense --out bad") == 2,
         "unknown family is a usage error");

  expect(run("route --instance t6.instance --algorithm ecmp") == 2,
         "ecmp without seed is a usage error");
  expect(run("route --instance t6.instance --algorithm ecmp --seed 5 "
             "--out e1.routing") == 0,
         "seeded ecmp runs");
  expect(run("route --instance t6.instance --algorithm ecmp --seed 5 "
             "--out e2.routing") == 0,
         "seeded ecmp runs again");
  expect(slurp("e1.routing") == slurp("e2.routing"),
         "ecmp is reproducible per seed");

  expect(run("route --instance t6.instance --algorithm two-phase "
             "--out tp.routing", &out) == 0,
         "two-phase routes the instance");
  expect(contains(out, "congestion 3/2"), "two-phase congestion reported");
  expect(run("verify --instance t6.instance --routing tp.routing") == 0,
         "routed file verifies");

  expect(run("opt --instance t6.instance", &out) == 0, "exact solve runs");
  expect(contains(out, "opt 3/2"), "exact optimum is 3/2");
  expect(run("opt --instance t6.instance --budget 5", &out) == 1,
         "a tiny node budget is reported as exceeded");
  expect(contains(out, "budget exceeded"), "budget exhaustion is explicit");
  {
    std::string command = "CLOS_ORACLE_BUDGET=5 " + g_binary +
                          " opt --instance t6.instance > cli_out.txt 2>&1";
    int status = std::system(command.c_str());
    expect(WEXITSTATUS(status) == 1, "the budget env var is honored");
  }

  {
    std::ofstream bad("invalid.instance");
    bad << "clos 2 2\nflow 1 1 1 1 1 1/1\nflow 2 1 1 2 1 1/2\n";
  }
  expect(run("route --instance invalid.instance --algorithm two-phase") == 1,
         "hose violations are rejected with exit 1");
  {
    std::ofstream bad("broken.instance");
    bad << "clos 2 2\nflow 1 1 1 1\n";
  }
  expect(run("route --instance broken.instance --algorithm two-phase",
             &out) == 2,
         "parse errors are usage errors");
  expect(contains(out, "line 2"), "parse errors carry line numbers");

  expect(run("gen --family mt-worstcase --n 4 --eps 1/5 --out mt") == 0,
         "copy-expansion worst case generates");
  expect(run("verify --instance mt.instance --routing "
             "mt.mt-adversarial.routing", &out) == 0,
         "adversarial witness verifies");
  expect(contains(out, "congestion 8/5"), "adversarial congestion is 8/5");

  expect(run("gen --family online-xy --n 4 --out oxy") == 0,
         "online pair generates");
  expect(run("verify --instance oxy.x.instance --routing "
             "oxy.x.witness.routing", &out) == 0,
         "sequence witness verifies");
  expect(contains(out, "link-disjoint yes"), "sequence witness link-disjoint");

  expect(run("adversary --router round-robin --n 4 --mode xy", &out) == 0,
         "adversary runs");
  expect(contains(out, "witness congestion 1/1"), "adversary witness is 1/1");

  expect(run("adversary --router unsorted-greedy --n 4 --mode super --s 2",
             &out) == 0,
         "supersequence experiment runs");
  expect(contains(out, "mean congestion 7/4"),
         "exhaustive mean congestion is 7/4");

  expect(run("bench --count 60 --seed 11 --algorithms two-phase,ecmp",
             &out) == 0,
         "bench runs");
  expect(contains(out, "two-phase:"), "bench prints the two-phase row");

  std::cout << (g_failures == 0 ? "cli tests passed\n" : "cli tests FAILED\n");
  return g_failures == 0 ? 0 : 1;
}
