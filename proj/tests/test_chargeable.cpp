#include <gtest/gtest.h>

#include <cmath>

#include "pullback/chargeable.hpp"
#include "pullback/error.hpp"

using namespace pullback;

TEST(Chargeable, FigureByHand) {
  // Inputs a, M-k-a into y; outputs alpha, M-k-alpha out of x; x-y weight k.
  ChargeableGraph g;
  const int x = g.add_vertex(Side::X, Role::Interior, 10.0);
  const int y = g.add_vertex(Side::Y, Role::Interior, 10.0);
  g.add_edge(x, y);
  g.add_edge(g.add_vertex(Side::X, Role::Input), y);
  g.add_edge(g.add_vertex(Side::X, Role::Input), y);
  g.add_edge(x, g.add_vertex(Side::Y, Role::Output));
  g.add_edge(x, g.add_vertex(Side::Y, Role::Output));
  const auto r = charge_conservation_check(g, {{3.0, 2.5, 4.5, 1.0, 6.0}});
  EXPECT_DOUBLE_EQ(r.in_value, 7.0);
  EXPECT_DOUBLE_EQ(r.out_value, 7.0);
  EXPECT_TRUE(r.equal);
}

TEST(Chargeable, FigureSmallNumbers) {
  ChargeableGraph g;
  const int x = g.add_vertex(Side::X, Role::Interior, 4.0);
  const int y = g.add_vertex(Side::Y, Role::Interior, 4.0);
  g.add_edge(x, y);
  g.add_edge(g.add_vertex(Side::X, Role::Input), y);
  g.add_edge(g.add_vertex(Side::X, Role::Input), y);
  g.add_edge(x, g.add_vertex(Side::Y, Role::Output));
  g.add_edge(x, g.add_vertex(Side::Y, Role::Output));
  const auto r = charge_conservation_check(g, {{1.0, 1.0, 2.0, 2.0, 1.0}});
  EXPECT_EQ(r.in_value, 3.0);
  EXPECT_EQ(r.out_value, 3.0);
}

TEST(Chargeable, InfeasibleWeightings) {
  ChargeableGraph g;
  const int x = g.add_vertex(Side::X, Role::Interior, 1.0);
  const int out = g.add_vertex(Side::Y, Role::Output);
  g.add_edge(x, out);
  const auto kind = [&](const Weighting& w) {
    try {
      charge_conservation_check(g, w);
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::NotVerified;
  };
  EXPECT_EQ(kind({{0.5}}), ErrorKind::InfeasibleWeighting);
  EXPECT_EQ(kind({{-1.0}}), ErrorKind::InfeasibleWeighting);
  EXPECT_EQ(kind({{0.0}}), ErrorKind::InfeasibleWeighting);
  EXPECT_EQ(kind({{1.0, 1.0}}), ErrorKind::InfeasibleWeighting);
  EXPECT_EQ(kind({{1.0}}), ErrorKind::NotVerified);
}

TEST(Chargeable, RandomFamiliesConserveCharge) {
  std::mt19937_64 rng(2024);
  for (auto family : {ChargeFamily::Figure, ChargeFamily::DirectOnly, ChargeFamily::Layered,
                      ChargeFamily::Cycle, ChargeFamily::Complete}) {
    for (double capacity : {1.0, 7.5, 100.0}) {
      for (int trial = 0; trial < 1000; ++trial) {
        const auto inst = random_instance(family, capacity, rng);
        const auto r = charge_conservation_check(inst.graph, inst.weighting);
        ASSERT_LE(std::abs(r.in_value - r.out_value), kChargeTolerance) << to_string(family);
        ASSERT_TRUE(r.equal);
      }
    }
  }
}

TEST(Chargeable, InstancesAreReproducible) {
  std::mt19937_64 a(7), b(7);
  const auto x = random_instance(ChargeFamily::Layered, 3.0, a);
  const auto y = random_instance(ChargeFamily::Layered, 3.0, b);
  EXPECT_EQ(x.graph.edges, y.graph.edges);
  EXPECT_EQ(x.weighting.weight, y.weighting.weight);
}
