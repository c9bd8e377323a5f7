#include "lbk/atlas.hpp"

#include <gtest/gtest.h>

#include <random>

#include "lbk/errors.hpp"
#include "lbk/fixtures.hpp"

using namespace lbk;

namespace {

Lambda Q(Rational q, std::size_t k = 1) { return Lambda::scalar(k, q); }

// Point at distance t along `end` in the tree chart named by `chart`.
BuildingPoint on_ray(const Atlas& tree, const std::string& chart, std::size_t end, Rational t) {
  std::size_t c = *tree.find_chart(chart);
  int sign = static_cast<std::size_t>(chart[0] - '0') == end ? -1 : 1;
  return {c, Point{{Q(t * sign, tree.apartment().lambda_rank())}}};
}

Atlas glued_pair(const ConvexRegion& region) {
  Atlas a(RootSystem::of_type("A1"), 1, 2);
  a.glue(0, 1, region, a.apartment().identity());
  return a;
}

}  // namespace

TEST(AtlasTest, SingleChartIsValid) {
  auto a = single_apartment("A2", 1);
  EXPECT_TRUE(a.validate().valid());
  EXPECT_EQ(a.classify(0, 0).shape, RegionShape::Other);
}

TEST(AtlasTest, HalfApartmentGlueIsValid) {
  auto a = glued_pair(ConvexRegion{{{0, Sense::Ge, Q(0)}}});
  EXPECT_TRUE(a.validate().valid()) << to_string(a.validate());
  EXPECT_EQ(a.classify(0, 1).shape, RegionShape::HalfApartment);
  EXPECT_EQ(a.classify(1, 0).shape, RegionShape::HalfApartment);
}

TEST(AtlasTest, IntersectionShapes) {
  Atlas lone(RootSystem::of_type("A1"), 1, 2);
  EXPECT_EQ(lone.classify(0, 1).shape, RegionShape::Empty);
  auto wall = glued_pair(ConvexRegion{{{0, Sense::Ge, Q(0)}, {0, Sense::Le, Q(0)}}});
  EXPECT_EQ(wall.classify(0, 1).shape, RegionShape::Wall);
}

TEST(AtlasTest, SymmetryViolationIsReported) {
  Atlas a(RootSystem::of_type("A1"), 1, 2);
  a.set_transition(0, 1, {ConvexRegion{{{0, Sense::Ge, Q(0)}}}, a.apartment().identity()});
  a.set_transition(1, 0, {ConvexRegion{{{0, Sense::Ge, Q(2)}}}, a.apartment().identity()});
  auto report = a.validate();
  ASSERT_FALSE(report.valid());
  EXPECT_NE(report.violations.front().find("symmetry"), std::string::npos);
}

TEST(AtlasTest, MissingReverseIsReported) {
  Atlas a(RootSystem::of_type("A1"), 1, 2);
  a.set_transition(0, 1, {ConvexRegion{}, a.apartment().identity()});
  EXPECT_FALSE(a.validate().valid());
  a.complete();
  EXPECT_TRUE(a.validate().valid());
}

TEST(AtlasTest, CocycleViolationIsReported) {
  // 1 -> 2 -> 3 is the identity on v >= 0 but 1 -> 3 reflects.
  Atlas a(RootSystem::of_type("A1"), 1, 3);
  const auto& s = a.apartment();
  ConvexRegion ray{{{0, Sense::Ge, Q(0)}}};
  a.glue(0, 1, ray, s.identity());
  a.glue(1, 2, ray, s.identity());
  a.glue(0, 2, ray, s.linear(s.weyl().generator(0)));
  auto report = a.validate();
  ASSERT_FALSE(report.valid());
  bool cocycle = false;
  for (const auto& v : report.violations) cocycle = cocycle || v.find("cocycle") != std::string::npos;
  EXPECT_TRUE(cocycle);
}

TEST(AtlasTest, EmptyRegionIsReported) {
  auto a = glued_pair(ConvexRegion{{{0, Sense::Ge, Q(1)}, {0, Sense::Le, Q(0)}}});
  EXPECT_FALSE(a.validate().valid());
}

TEST(AtlasTest, AgreementOnRegions) {
  Apartment s(RootSystem::of_type("A1"), 1);
  auto flip = s.linear(s.weyl().generator(0));
  EXPECT_TRUE(agree_on(s, flip, s.identity(), s.wall(0, Q(0))));
  EXPECT_FALSE(agree_on(s, flip, s.identity(), ConvexRegion{{{0, Sense::Ge, Q(0)}}}));
  EXPECT_TRUE(agree_on(s, s.translation(Point{{Q(1)}}), s.identity(), ConvexRegion{{{0, Sense::Ge, Q(1)}, {0, Sense::Le, Q(0)}}}));
}

TEST(AtlasTest, CommonChart) {
  auto tree = lambda_tree(3, 1);
  auto p = on_ray(tree, "12", 1, 3), q = on_ray(tree, "12", 2, 1);
  EXPECT_EQ(tree.common_chart(p, q), tree.find_chart("12"));
  auto y = on_ray(tree, "12", 2, 1), z = on_ray(tree, "13", 3, 2);
  EXPECT_EQ(tree.common_chart(y, z), tree.find_chart("23"));
  Atlas lone(RootSystem::of_type("A1"), 1, 2);
  EXPECT_FALSE(lone.common_chart({0, Point{{Q(1)}}}, {1, Point{{Q(1)}}}));
}

TEST(AtlasTest, GlobalDistance) {
  auto tree = lambda_tree(3, 1);
  auto y = on_ray(tree, "12", 2, 1), z = on_ray(tree, "13", 3, 2);
  EXPECT_EQ(tree.global_distance(y, y), Q(0));
  EXPECT_EQ(tree.global_distance(y, z), Q(6));
  auto a = on_ray(tree, "13", 1, 1), b = on_ray(tree, "13", 3, 4);
  EXPECT_EQ(tree.global_distance(a, b), tree.apartment().metric(a.point, b.point));
  Atlas lone(RootSystem::of_type("A1"), 1, 2);
  EXPECT_THROW(lone.global_distance({0, Point{{Q(1)}}}, {1, Point{{Q(1)}}}), AxiomFailure);
}

TEST(AtlasTest, ChartLookup) {
  auto tree = lambda_tree(4, 1);
  EXPECT_EQ(tree.find_chart("34"), 5u);
  EXPECT_EQ(tree.find_chart("1"), 0u);  // no such name: read as a 1-based index
  Atlas plain(RootSystem::of_type("A1"), 1, 3);
  EXPECT_EQ(plain.find_chart("3"), 2u);
  EXPECT_FALSE(plain.find_chart("4"));
  EXPECT_FALSE(plain.find_chart("x"));
}

TEST(AtlasPropertyTest, DistanceIsChartIndependentAndTransportInvariant) {
  for (std::size_t k : {1u, 2u}) {
    auto tree = lambda_tree(5, k);
    std::mt19937_64 rng(11 + k);
    for (int it = 0; it < 200; ++it) {
      BuildingPoint y{rng() % tree.size(), tree.apartment().random_point(rng)};
      BuildingPoint z{rng() % tree.size(), tree.apartment().random_point(rng)};
      Lambda d = tree.global_distance(y, z);  // throws when charts disagree
      for (std::size_t c = 0; c < tree.size(); ++c) {
        auto y2 = tree.transport(y, c), z2 = tree.transport(z, c);
        if (y2 && z2) EXPECT_EQ(tree.apartment().metric(*y2, *z2), d);
        if (y2) EXPECT_TRUE(tree.same_point(y, {c, *y2}));
      }
    }
  }
}

TEST(InfinityTest, SingleApartments) {
  for (auto [type, count] : {std::pair{"A2", 6u}, {"A1", 2u}, {"G2", 12u}, {"B2", 8u}}) {
    auto a = single_apartment(type, 1);
    InfinityComplex inf(a);
    auto r = inf.report();
    EXPECT_EQ(r.chambers, count) << type;
    EXPECT_EQ(r.apartments, 1u);
    EXPECT_TRUE(r.thin && r.full_apartments && r.injective && r.connected) << to_string(r);
  }
}

TEST(InfinityTest, TreesHaveOneChamberPerEnd) {
  for (std::size_t n = 2; n <= 6; ++n) {
    auto tree = lambda_tree(n, 2);
    auto r = InfinityComplex(tree).report();
    EXPECT_EQ(r.chambers, n);
    EXPECT_EQ(r.apartments, n * (n - 1) / 2);
    EXPECT_TRUE(r.thin && r.full_apartments && r.injective && r.connected) << to_string(r);
  }
}

TEST(InfinityTest, FanChambersAndAdjacency) {
  auto f = fan(3);
  InfinityComplex inf(f);
  auto r = inf.report();
  // Each leaf holds 3 chambers of A2.
  EXPECT_EQ(r.chambers, 9u);
  EXPECT_EQ(r.apartments, 3u);
  EXPECT_TRUE(r.thin && r.injective && r.connected) << to_string(r);
  const auto& W = f.apartment().weyl();
  auto e = W.identity(), s1 = W.generator(0);
  std::size_t c = inf.chamber(0, e);
  EXPECT_TRUE(inf.adjacent(c, inf.chamber(0, e * s1), 0));
  EXPECT_FALSE(inf.adjacent(c, inf.chamber(0, e * s1), 1));
  EXPECT_EQ(inf.distance(c, inf.chamber(0, W.longest())), W.longest());
}

TEST(InfinityTest, BrokenPairIsNotABuildingAtInfinity) {
  auto r = InfinityComplex(broken_pair()).report();
  EXPECT_EQ(r.chambers, 3u);
  EXPECT_FALSE(r.connected);
}
