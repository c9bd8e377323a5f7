#include "lbk/apartment.hpp"

#include <gtest/gtest.h>

#include <random>

#include "lbk/errors.hpp"

using namespace lbk;

namespace {

Lambda Q(Rational q) { return Lambda(std::vector<Rational>{q}); }

Point P1(Rational a) { return Point{{Q(a)}}; }
Point P2(Rational a, Rational b) { return Point{{Q(a), Q(b)}}; }

struct Fixture {
  explicit Fixture(const char* type, std::size_t k = 1) : sigma(RootSystem::of_type(type), k) {}
  Apartment sigma;
  const WeylGroup& W() const { return sigma.weyl(); }
};

}  // namespace

TEST(ApartmentTest, Pairing) {
  Fixture a2("A2");
  EXPECT_EQ(a2.sigma.pairing(RootVector{1, 0}, P2(1, 0)), Q(2));
  EXPECT_EQ(a2.sigma.pairing(RootVector{0, 1}, P2(1, 0)), Q(-1));
  EXPECT_EQ(a2.sigma.pairing(RootVector{1, 1}, a2.sigma.origin()), Q(0));
  EXPECT_THROW(a2.sigma.pairing(RootVector{2, 1}, P2(1, 0)), MalformedInput);
}

TEST(ApartmentTest, Metric) {
  Fixture a1("A1"), a2("A2");
  EXPECT_EQ(a2.sigma.metric(P2(3, -1), P2(3, -1)), Q(0));
  EXPECT_EQ(a1.sigma.metric(a1.sigma.origin(), P1(3)), Q(6));
  EXPECT_EQ(a2.sigma.metric(a2.sigma.origin(), P2(1, 0)), Q(4));
}

TEST(ApartmentTest, Coordinates) {
  Fixture a1("A1"), a2("A2");
  EXPECT_EQ(a2.sigma.coordinate(a2.sigma.origin(), 1, a2.W().identity()), Q(0));
  EXPECT_EQ(a1.sigma.coordinate(P1(3), 0, a1.W().identity()), Q(3));
  EXPECT_EQ(a2.sigma.coordinate(P2(1, 0), 1, a2.W().identity()), Q(Rational(-1, 2)));
}

TEST(ApartmentTest, ApplyIsometries) {
  Fixture a1("A1");
  auto& s = a1.sigma;
  EXPECT_EQ(s.apply(s.identity(), P1(5)), P1(5));
  EXPECT_EQ(s.apply(s.linear(a1.W().generator(0)), P1(Rational(7, 3))), P1(Rational(-7, 3)));
  EXPECT_EQ(s.apply(s.translation(P1(1)), s.origin()), P1(1));
}

TEST(ApartmentTest, ReflectionFixesItsWall) {
  Fixture a2("A2");
  auto& s = a2.sigma;
  auto g = s.reflection(2, Q(3));  // alpha1 + alpha2
  std::mt19937_64 rng(1);
  for (int it = 0; it < 50; ++it) {
    Point p = s.random_point(rng);
    EXPECT_EQ(s.apply(g, s.apply(g, p)), p);
    EXPECT_EQ(s.pairing(2, s.apply(g, p)), Q(6) - s.pairing(2, p));
  }
}

TEST(ApartmentTest, ConvexHull) {
  Fixture a1("A1"), a2("A2");
  Point p = P2(1, Rational(-1, 2));
  std::vector<Point> pts{p};
  auto hull = a2.sigma.convex_hull(pts, {});
  EXPECT_TRUE(a2.sigma.contains(hull, p));
  auto other = a2.sigma.witness(hull);
  ASSERT_TRUE(other);
  EXPECT_EQ(*other, p);

  std::vector<Point> seg{a1.sigma.origin(), P1(2)};
  ConvexRegion expected{{{0, Sense::Ge, Q(0)}, {0, Sense::Le, Q(4)}}};
  EXPECT_TRUE(a1.sigma.equal(a1.sigma.convex_hull(seg, {}), expected));
  EXPECT_THROW(a1.sigma.convex_hull({}, {}), MalformedInput);
}

TEST(ApartmentTest, HullOfSubsectorAndBaseIsTheSector) {
  Fixture a2("A2");
  auto& s = a2.sigma;
  Sector big{P2(1, 2), a2.W().generator(1)};
  auto sub = s.subsector_in(big, ConvexRegion{{{0, Sense::Ge, Q(10)}}});
  ASSERT_TRUE(sub);
  std::vector<Point> base{big.base};
  std::vector<Sector> secs{*sub};
  EXPECT_TRUE(s.equal(s.convex_hull(base, secs), s.region(big)));
}

TEST(ApartmentTest, GermContainment) {
  Fixture a1("A1"), a2("A2");
  SectorGerm g{{a1.sigma.origin(), a1.W().identity()}};
  EXPECT_TRUE(a1.sigma.contains_germ(ConvexRegion{}, g));
  EXPECT_TRUE(a1.sigma.contains_germ(ConvexRegion{{{0, Sense::Ge, Q(0)}}}, g));
  EXPECT_FALSE(a1.sigma.contains_germ(ConvexRegion{{{0, Sense::Le, Q(0)}}}, g));
  // A2: a sector contains its own germ even though alpha_1 points outside it.
  Sector fundamental{a2.sigma.origin(), a2.W().identity()};
  EXPECT_TRUE(a2.sigma.contains_germ(a2.sigma.region(fundamental), SectorGerm{fundamental}));
  Sector flipped{a2.sigma.origin(), a2.W().generator(0)};
  EXPECT_FALSE(a2.sigma.contains_germ(a2.sigma.region(fundamental), SectorGerm{flipped}));
  // Germ at a point strictly inside a half-apartment, in lex Q^2.
  Apartment lex(RootSystem::of_type("A1"), 2);
  Point inner{{Lambda{0, 1}}};
  SectorGerm away{{inner, lex.weyl().generator(0)}};
  EXPECT_TRUE(lex.contains_germ(ConvexRegion{{{0, Sense::Ge, Lambda{0, 0}}}}, away));
}

TEST(ApartmentTest, Parallelism) {
  Fixture a1("A1");
  auto& s = a1.sigma;
  Sector hat{s.origin(), a1.W().identity()};
  EXPECT_TRUE(s.parallel(hat, hat));
  EXPECT_TRUE(s.parallel(hat, Sector{P1(1), a1.W().identity()}));
  EXPECT_FALSE(s.parallel(hat, Sector{s.origin(), a1.W().generator(0)}));
}

TEST(ApartmentTest, SubsectorInRegion) {
  Fixture a1("A1");
  auto& s = a1.sigma;
  Sector hat{s.origin(), a1.W().identity()};
  auto same = s.subsector_in(hat, ConvexRegion{{{0, Sense::Ge, Q(-3)}}});
  ASSERT_TRUE(same);
  EXPECT_EQ(*same, hat);
  auto shifted = s.subsector_in(hat, ConvexRegion{{{0, Sense::Ge, Q(4)}}});
  ASSERT_TRUE(shifted);
  EXPECT_EQ(shifted->base, P1(2));
  EXPECT_FALSE(s.subsector_in(hat, ConvexRegion{{{0, Sense::Le, Q(0)}}}));
}

TEST(ApartmentTest, GermDistanceAndGallery) {
  Fixture a2("A2");
  auto& s = a2.sigma;
  auto o = s.origin();
  SectorGerm hat{{o, a2.W().identity()}};
  SectorGerm one{{o, a2.W().generator(0)}};
  SectorGerm opp{{o, a2.W().longest()}};
  EXPECT_TRUE(s.germ_distance(hat, hat).is_identity());
  EXPECT_EQ(s.germ_distance(hat, one), a2.W().generator(0));
  EXPECT_EQ(s.germ_distance(hat, opp), a2.W().longest());
  EXPECT_EQ(s.germ_distance(hat, opp).length(), 3);
  EXPECT_TRUE(s.gallery(hat, hat).empty());
  EXPECT_EQ(s.gallery(hat, one), std::vector<int>{0});
  EXPECT_EQ(s.gallery(hat, opp).size(), 3u);
  SectorGerm elsewhere{{P2(1, 0), a2.W().identity()}};
  EXPECT_THROW(s.germ_distance(hat, elsewhere), MalformedInput);
}

TEST(ApartmentTest, GalleryStepsShareAPanel) {
  // Consecutive chambers of the returned gallery are adjacent: they share
  // the panel of the stated type.
  Fixture g2("G2");
  auto& s = g2.sigma;
  SectorGerm start{{s.origin(), g2.W().element(3)}};
  SectorGerm end{{s.origin(), g2.W().element(10)}};
  auto type = s.gallery(start, end);
  WeylElement cur = start.direction();
  for (int j : type) {
    WeylElement next = cur * g2.W().generator(j);
    EXPECT_TRUE(s.equal(s.panel_region(Sector{s.origin(), cur}, j),
                        s.panel_region(Sector{s.origin(), next}, j)));
    cur = next;
  }
  EXPECT_EQ(cur, end.direction());
}

TEST(ApartmentTest, ClassifyShapes) {
  Fixture a2("A2");
  auto& s = a2.sigma;
  EXPECT_EQ(s.classify(ConvexRegion{}).shape, RegionShape::Other);
  EXPECT_EQ(s.classify(ConvexRegion{{{0, Sense::Ge, Q(0)}}}).shape, RegionShape::HalfApartment);
  // Redundant description of a half-apartment.
  EXPECT_EQ(s.classify(ConvexRegion{{{0, Sense::Ge, Q(0)}, {0, Sense::Ge, Q(-1)}}}).shape,
            RegionShape::HalfApartment);
  EXPECT_EQ(s.classify(s.wall(1, Q(2))).shape, RegionShape::Wall);
  EXPECT_EQ(s.classify(ConvexRegion{{{0, Sense::Ge, Q(1)}, {0, Sense::Le, Q(0)}}}).shape,
            RegionShape::Empty);
  Sector sec{P2(1, 1), a2.W().generator(1)};
  auto info = s.classify(s.panel_region(sec, 0));
  EXPECT_EQ(info.shape, RegionShape::SectorPanel);
  EXPECT_TRUE(s.equal(s.panel_region(*info.sector, info.panel_type), s.panel_region(sec, 0)));
  EXPECT_EQ(s.classify(s.region(sec)).shape, RegionShape::Other);
}

TEST(ApartmentPropertyTest, MetricAxiomsAndInvariance) {
  for (auto type : {"A1", "A2", "B2", "G2"}) {
    for (std::size_t k : {1u, 2u}) {
      Apartment s(RootSystem::of_type(type), k);
      std::mt19937_64 rng(17 + k);
      for (int it = 0; it < 100; ++it) {
        Point a = s.random_point(rng), b = s.random_point(rng), c = s.random_point(rng);
        EXPECT_EQ(s.metric(a, b), s.metric(b, a));
        EXPECT_EQ(s.metric(a, a), Lambda(k));
        EXPECT_LE(s.metric(a, c), s.metric(a, b) + s.metric(b, c));
        auto g = s.random_isometry(rng);
        EXPECT_EQ(s.metric(s.apply(g, a), s.apply(g, b)), s.metric(a, b));
        auto h = s.random_isometry(rng);
        EXPECT_EQ(s.apply(s.compose(g, h), a), s.apply(g, s.apply(h, a)));
        EXPECT_EQ(s.apply(s.inverse(g), s.apply(g, a)), a);
      }
    }
  }
}

TEST(ApartmentPropertyTest, CoordinatesDeterminePoint) {
  for (auto type : {"A2", "B2", "G2"}) {
    Apartment s(RootSystem::of_type(type), 2);
    std::mt19937_64 rng(3);
    for (int it = 0; it < 50; ++it) {
      Point p = s.random_point(rng);
      std::vector<Lambda> vi;
      for (std::size_t i = 0; i < s.dimension(); ++i) vi.push_back(s.coordinate(p, i, s.weyl().identity()));
      EXPECT_EQ(s.from_coordinates(vi), p);
      // v^{w(alpha_i)} is the i-th coordinate of w^-1 v.
      auto w = s.weyl().element(it % s.weyl().size());
      EXPECT_EQ(s.coordinate(p, 0, w), s.coordinate(s.apply(w.inverse(), p), 0, s.weyl().identity()));
    }
  }
}

TEST(ApartmentPropertyTest, TransportMatchesPointImages) {
  Apartment s(RootSystem::of_type("G2"), 2);
  std::mt19937_64 rng(8);
  for (int it = 0; it < 100; ++it) {
    auto g = s.random_isometry(rng);
    HalfApartment h{static_cast<std::size_t>(it % 6), it % 2 ? Sense::Ge : Sense::Le, random_lambda(rng, 2)};
    Point p = s.random_point(rng);
    EXPECT_EQ(s.contains(h, p), s.contains(s.transport(h, g), s.apply(g, p)));
  }
}

TEST(ApartmentPropertyTest, SectorGermDistanceTriangle) {
  Apartment s(RootSystem::of_type("B2"), 1);
  const auto& W = s.weyl();
  for (const auto& a : W.elements())
    for (const auto& b : W.elements())
      for (const auto& c : W.elements()) {
        SectorGerm g1{{s.origin(), a}}, g2{{s.origin(), b}}, g3{{s.origin(), c}};
        EXPECT_LE(s.germ_distance(g1, g3).length(), s.germ_distance(g1, g2).length() + s.germ_distance(g2, g3).length());
      }
}

TEST(ApartmentPropertyTest, SectorsAtAPointCoverAndParallelismIsEquivalence) {
  Apartment s(RootSystem::of_type("A2"), 1);
  std::mt19937_64 rng(4);
  for (int it = 0; it < 50; ++it) {
    Point x = s.random_point(rng), y = s.random_point(rng);
    auto w = s.sector_through(x, y);
    EXPECT_TRUE(s.in_sector(Sector{x, w}, y));
    Sector a{x, w}, b{y, w}, c{s.random_point(rng), w};
    EXPECT_TRUE(s.parallel(a, b) && s.parallel(b, c) && s.parallel(a, c));
    // Parallel sectors share a subsector.
    auto sub = s.subsector_in(a, s.region(b));
    ASSERT_TRUE(sub);
    EXPECT_TRUE(s.contains(s.region(b), s.region(*sub)));
    EXPECT_TRUE(s.contains(s.region(a), s.region(*sub)));
  }
}
