#include <gtest/gtest.h>

#include "pullback/error.hpp"
#include "pullback/render.hpp"
#include "support.hpp"

using namespace pullback;
using pullback::testing::fixture;
using pullback::testing::golden;

TEST(Render, DotGolden) { EXPECT_EQ(to_dot(fixture("b2")), golden("b2.dot")); }

TEST(Render, DotListsEveryEdge) {
  const auto doc = fixture("t1");
  const auto dot = to_dot(doc);
  for (int e = 0; e < doc.map.edge_count(); ++e) {
    EXPECT_NE(dot.find("label=\"e" + std::to_string(e) + " "), std::string::npos);
  }
  EXPECT_NE(dot.find("genus=1"), std::string::npos);
}

TEST(Render, SvgGolden) { EXPECT_EQ(to_svg(fixture("mirror_12_34")), golden("mirror_12_34.svg")); }

TEST(Render, SvgArcsOnBothSides) {
  const auto svg = to_svg(fixture("mirror_12_34"));
  EXPECT_NE(svg.find(" 0 0 1 "), std::string::npos);
  EXPECT_NE(svg.find(" 0 0 0 "), std::string::npos);
}

TEST(Render, SvgWithoutRealCycle) {
  const auto svg = to_svg(fixture("b2"));
  EXPECT_EQ(svg.rfind("<svg", 0), 0u);
  EXPECT_NE(svg.find("</svg>"), std::string::npos);
}

TEST(Render, SvgNeedsPlanarMap) {
  try {
    to_svg(fixture("t1"));
    FAIL() << "expected UnsupportedFormat";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::UnsupportedFormat);
  }
}
