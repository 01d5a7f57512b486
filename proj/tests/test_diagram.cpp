#include <gtest/gtest.h>

#include "skeinlab/diagram.hpp"
#include "skeinlab/errors.hpp"
#include "support.hpp"

using namespace skeinlab;
using skeinlab::testing::fixture;
using skeinlab::testing::fixtures;

TEST(Diagram, ParsesTrefoil) {
  auto d = parse_pd("X 1 4 2 5 / X 3 6 4 1 / X 5 2 6 3");
  EXPECT_EQ(d.crossing_count(), 3);
  EXPECT_EQ(d.arc_count(), 6);
  EXPECT_EQ(d.component_count(), 1);
  EXPECT_EQ(std::abs(d.writhe()), 3);
  EXPECT_EQ(parse_pd(to_pd_string(d)).crossings(), d.crossings());
  EXPECT_EQ(parse_pd_json(to_pd_json(d)).crossings(), d.crossings());
}

TEST(Diagram, SeparatorsAndLoops) {
  auto a = parse_pd("X 1 4 2 5; X 3 6 4 1\nX 5 2 6 3");
  EXPECT_EQ(a.crossing_count(), 3);
  auto u = parse_pd("O");
  EXPECT_EQ(u.crossing_count(), 0);
  EXPECT_EQ(u.free_loops(), 1);
  EXPECT_TRUE(parse_pd("").empty());
  EXPECT_TRUE(parse_pd("   ").empty());
}

TEST(Diagram, MalformedInputIsRejected) {
  for (const char* bad : {"X 1 2 3", "X 1 2 3 4 5", "Y 1 2 3 4", "X 1 2 a 4", "X 1 4 2 5 / X 3 6 4 1", "X 1 2 1 2 / X 1 2 3 4",
                          "X 0 1 1 0"})
    EXPECT_THROW(parse_pd(bad), InputError) << bad;
  EXPECT_THROW(parse_pd_json(nlohmann::json{{"pd", "nope"}}), InputError);
}

TEST(Diagram, TwoComponentLinks) {
  EXPECT_EQ(fixture("L2a1").component_count(), 2);
  EXPECT_EQ(fixture("L5a1").component_count(), 2);
  EXPECT_EQ(std::abs(fixture("L2a1").writhe()), 2);
  std::size_t arcs = 0;
  for (const auto& c : fixture("L5a1").components()) arcs += c.size();
  EXPECT_EQ(static_cast<int>(arcs), fixture("L5a1").arc_count());
}

TEST(Diagram, StateCircleCounts) {
  const auto& t = fixture("3_1");
  EXPECT_EQ(apply_state(t, all_A_state(t)).circles, 2);
  EXPECT_EQ(apply_state(t, all_B_state(t)).circles, 3);
  const auto& f = fixture("4_1");
  EXPECT_EQ(apply_state(f, all_A_state(f)).circles, 3);
  EXPECT_EQ(apply_state(f, all_B_state(f)).circles, 3);
}

TEST(Diagram, Adequacy) {
  for (const auto& f : fixtures().fixtures) {
    EXPECT_TRUE(is_adequate(f.diagram)) << f.name;
    EXPECT_TRUE(is_alternating(f.diagram)) << f.name;
  }
  auto kink = parse_pd("X 1 1 2 2");
  EXPECT_FALSE(is_adequate(kink));
  EXPECT_TRUE(is_adequate(LinkDiagram{}));
}

TEST(Diagram, NonAlternatingDiagram) {
  // trefoil with one crossing changed
  auto d = parse_pd("X 4 2 5 1 / X 3 6 4 1 / X 5 2 6 3");
  EXPECT_FALSE(is_alternating(d));
}

TEST(Diagram, MirrorFlipsWritheAndSwapsStates) {
  for (const auto& f : fixtures().fixtures) {
    auto m = mirror(f.diagram);
    EXPECT_EQ(m.writhe(), -f.diagram.writhe()) << f.name;
    EXPECT_EQ(apply_state(m, all_A_state(m)).circles, apply_state(f.diagram, all_B_state(f.diagram)).circles) << f.name;
    EXPECT_EQ(mirror(m).crossings(), f.diagram.crossings()) << f.name;
  }
}

TEST(Diagram, CableSizes) {
  const auto& t = fixture("3_1");
  for (int m = 1; m <= 3; ++m) {
    auto c = cable(t, m);
    EXPECT_EQ(c.crossing_count(), 3 * m * m);
    EXPECT_EQ(c.component_count(), m);
    EXPECT_EQ(c.writhe(), m * m * t.writhe());
  }
  EXPECT_EQ(cable(fixture("L2a1"), 2).component_count(), 4);
}
