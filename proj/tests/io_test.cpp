#include "clos/io.hpp"

#include "clos/instances.hpp"
#include "doctest.h"

using namespace clos;

TEST_CASE("instance files round-trip bit-exactly") {
  NamedInstance inst = three_halves_lower_bound(3);
  std::string text = write_instance(inst.flowset);
  FlowSet parsed = parse_instance(text);
  CHECK(parsed == inst.flowset);
  CHECK(write_instance(parsed) == text);
}

TEST_CASE("comments and blank lines are ignored") {
  std::string text =
      "# a comment\n"
      "\n"
      "clos 2 2\n"
      "  \n"
      "flow 1 1 1 2 2 1/2\n"
      "# trailing\n";
  FlowSet fs = parse_instance(text);
  CHECK(fs.size() == 1);
  CHECK(fs.flow(1).demand == Rational(1, 2));
}

TEST_CASE("parse errors carry line numbers") {
  try {
    parse_instance("clos 2 2\nflow 1 1 1 2 2 1/0\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line == 2);
  }
  CHECK_THROWS_AS(parse_instance("flow 1 1 1 1 1 1/2\n"), ParseError);
  CHECK_THROWS_AS(parse_instance("clos 2\n"), ParseError);
  CHECK_THROWS_AS(parse_instance("clos 2 2\nflow 1 9 1 1 1 1/2\n"),
                  ParseError);
}

TEST_CASE("routing files round-trip with expectations") {
  NamedInstance inst = cross_gadget(3);
  const Routing& witness = inst.witness_routings.at("elemental");
  std::string text = write_routing(witness, instance_digest(inst.flowset),
                                   {{"congestion", Rational(1).str()}});
  RoutingFile parsed = parse_routing(text);
  CHECK(parsed.instance_ref == instance_digest(inst.flowset));
  REQUIRE(parsed.expectations.size() == 1);
  CHECK(parsed.expectations[0].first == "congestion");
  CHECK(parsed.expectations[0].second == "1/1");
  CHECK(parsed.to_routing(inst.flowset) == witness);
  CHECK(write_routing(parsed.to_routing(inst.flowset), parsed.instance_ref,
                      parsed.expectations) == text);
}

TEST_CASE("routing parser rejects duplicates and garbage") {
  CHECK_THROWS_AS(parse_routing("routing -\nassign 1 1\nassign 1 2\n"),
                  ParseError);
  CHECK_THROWS_AS(parse_routing("assign 1 1\n"), ParseError);
  CHECK_THROWS_AS(parse_routing("routing -\nassign x 1\n"), ParseError);
}

TEST_CASE("digests are stable and content-sensitive") {
  NamedInstance a = cross_gadget(3);
  NamedInstance b = cross_gadget(3);
  CHECK(instance_digest(a.flowset) == instance_digest(b.flowset));
  CHECK(instance_digest(a.flowset) !=
        instance_digest(cross_gadget(4).flowset));
  CHECK(instance_digest(a.flowset).size() == 16);
}
