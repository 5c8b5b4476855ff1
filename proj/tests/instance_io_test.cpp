#include <gtest/gtest.h>

#include "fairhouse/instance_io.hpp"
#include "support/fixtures.hpp"
#include "support/reference.hpp"

namespace fairhouse {
namespace {

TEST(InstanceIoTest, ParsesMixedNumberFormats) {
  const Instance inst = parse_instance(
      "agents: 2\n"
      "houses: 3\n"
      "values:\n"
      "  - [1, 0, 1/2]\n"
      "  - [0.25, 3, 0]\n"
      "agent_labels: [alice, bob]\n");
  EXPECT_EQ(inst.agent_count(), 2);
  EXPECT_EQ(inst.house_count(), 3);
  EXPECT_EQ(inst.value(0, 2), Rational(1, 2));
  EXPECT_EQ(inst.value(1, 0), Rational(1, 4));
  EXPECT_EQ(inst.agent_name(1), "bob");
  EXPECT_EQ(inst.house_name(0), "h1");
}

TEST(InstanceIoTest, WriteThenParseRoundTrips) {
  const Instance inst = parse_instance(
      "agents: 2\nhouses: 2\nvalues: [[1/3, 2], [0, 0.5]]\nhouse_labels: [x, y]\n");
  const Instance again = parse_instance(write_instance(inst));
  EXPECT_EQ(ref::flat(again), ref::flat(inst));
  EXPECT_EQ(again.house_labels, inst.house_labels);
}

TEST(InstanceIoTest, FixturesLoad) {
  EXPECT_EQ(fixtures::load("popular_pair").house_count(), 5);
  EXPECT_EQ(fixtures::load("chain").agent_count(), 4);
  EXPECT_EQ(fixtures::load("shared_middle").house_count(), 2);
  EXPECT_EQ(fixtures::load("dominant_house").value(0, 0), Rational(100));
}

TEST(InstanceIoTest, SyntaxErrorsCarryPositions) {
  try {
    parse_instance("agents: 1\nhouses: 2\nvalues:\n  - [1, banana]\n");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 4);
    EXPECT_GT(e.column(), 0);
  }
}

TEST(InstanceIoTest, RejectsStructuralProblems) {
  EXPECT_THROW(parse_instance("agents: 1\nhouses: 2\nvalues: [[1, 2, 3]]\n"), ParseError);
  EXPECT_THROW(parse_instance("agents: 2\nhouses: 1\nvalues: [[1]]\n"), ParseError);
  EXPECT_THROW(parse_instance("agents: 1\nhouses: 1\nvalues: [[1]]\ncolour: red\n"), ParseError);
  EXPECT_THROW(parse_instance("houses: 1\nvalues: [[1]]\n"), ParseError);
  EXPECT_THROW(parse_instance("agents: [1\n"), ParseError);
  EXPECT_THROW(parse_instance("agents: 1\nhouses: 1\nvalues: [[-1]]\n"), ValidationError);
  EXPECT_THROW(parse_instance("agents: 0\nhouses: 1\nvalues: []\n"), ValidationError);
}

TEST(AllocationIoTest, ParsesArrowsCommentsAndDashes) {
  const Allocation a = parse_allocation("# header\n0 -> 2\n\n2 -> -\n1->0\n", 3);
  EXPECT_EQ(a.house(0), 2);
  EXPECT_EQ(a.house(1), 0);
  EXPECT_FALSE(a.is_assigned(2));
}

TEST(AllocationIoTest, RoundTrips) {
  const Allocation a({3, -1, 0});
  EXPECT_EQ(parse_allocation(write_allocation(a), 3), a);
}

TEST(AllocationIoTest, RejectsMalformedLines) {
  EXPECT_THROW(parse_allocation("0 2\n", 1), ParseError);
  EXPECT_THROW(parse_allocation("0 -> x\n", 1), ParseError);
  EXPECT_THROW(parse_allocation("0 -> 1\n0 -> 2\n", 1), ParseError);
  EXPECT_THROW(parse_allocation("5 -> 1\n", 2), InvalidAllocation);
}

TEST(ReportTest, ListsEnviousAgentsByName) {
  const Instance inst = fixtures::load("popular_pair");
  const std::string text = format_report(inst, evaluate(inst, Allocation({0, 1, -1, -1})));
  EXPECT_NE(text.find("num_envious: 2"), std::string::npos);
  EXPECT_NE(text.find("envious_agents: a3 a4"), std::string::npos);
}

}  // namespace
}  // namespace fairhouse
