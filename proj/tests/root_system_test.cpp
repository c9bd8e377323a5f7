#include "lbk/root_system.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "lbk/errors.hpp"

using namespace lbk;

namespace {

// Independent length: number of positive roots sent to negative roots.
int inversion_count(const RootSystem& rs, const WeylElement& w) {
  int count = 0;
  for (const auto& r : rs.positive_roots()) {
    auto img = w.apply(r);
    if (std::any_of(img.begin(), img.end(), [](int c) { return c < 0; })) ++count;
  }
  return count;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b, std::size_t n) {
  IntMatrix out(n * n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t j = 0; j < n; ++j) out[i * n + j] += a[i * n + k] * b[k * n + j];
  return out;
}

}  // namespace

TEST(RootSystemTest, RankOne) {
  auto rs = RootSystem::of_type("A1");
  EXPECT_EQ(rs->positive_roots(), (std::vector<RootVector>{{1}}));
  EXPECT_EQ(rs->symmetrizer(), std::vector<Rational>{1});
}

TEST(RootSystemTest, A2PositiveRoots) {
  auto rs = RootSystem::of_type("A2");
  std::set<RootVector> got(rs->positive_roots().begin(), rs->positive_roots().end());
  EXPECT_EQ(got, (std::set<RootVector>{{1, 0}, {0, 1}, {1, 1}}));
}

TEST(RootSystemTest, PositiveRootCounts) {
  EXPECT_EQ(RootSystem::of_type("B2")->positive_roots().size(), 4u);
  EXPECT_EQ(RootSystem::of_type("C3")->positive_roots().size(), 9u);
  EXPECT_EQ(RootSystem::of_type("G2")->positive_roots().size(), 6u);
  EXPECT_EQ(RootSystem::of_type("A3")->positive_roots().size(), 6u);
}

TEST(RootSystemTest, SymmetrizerMakesPairingSymmetric) {
  for (auto type : {"A2", "B2", "B3", "C3", "G2"}) {
    auto rs = RootSystem::of_type(type);
    for (std::size_t i = 0; i < rs->rank(); ++i)
      for (std::size_t j = 0; j < rs->rank(); ++j) EXPECT_EQ(rs->pairing(i, j), rs->pairing(j, i)) << type;
    auto lo = *std::min_element(rs->symmetrizer().begin(), rs->symmetrizer().end());
    EXPECT_EQ(lo, 1);
  }
  EXPECT_EQ(RootSystem::of_type("G2")->symmetrizer(), (std::vector<Rational>{1, 3}));
}

TEST(RootSystemTest, ExplicitCartanMatchesNamedType) {
  auto rs = RootSystem::from_cartan({{2, -1}, {-1, 2}});
  EXPECT_EQ(rs->positive_roots(), RootSystem::of_type("A2")->positive_roots());
}

TEST(RootSystemTest, RejectsBadCartanData) {
  EXPECT_THROW(RootSystem::from_cartan({{2, -2}, {-2, 2}}), MalformedInput);  // affine
  EXPECT_THROW(RootSystem::from_cartan({{2, -3}, {-3, 2}}), MalformedInput);  // hyperbolic
  EXPECT_THROW(RootSystem::from_cartan({{2, 1}, {1, 2}}), MalformedInput);
  EXPECT_THROW(RootSystem::from_cartan({{2, -1}, {0, 2}}), MalformedInput);
  EXPECT_THROW(RootSystem::from_cartan({{3, -1}, {-1, 2}}), MalformedInput);
  // Not symmetrizable: the products around the triangle disagree.
  EXPECT_THROW(RootSystem::from_cartan({{2, -1, -1}, {-2, 2, -1}, {-1, -1, 2}}), MalformedInput);
  EXPECT_THROW(RootSystem::of_type("E8"), MalformedInput);
  EXPECT_THROW(RootSystem::of_type("A7"), MalformedInput);  // 40320 elements > cap
  EXPECT_NO_THROW(RootSystem::of_type("A7", 50000));
}

TEST(WeylGroupTest, SimpleReflections) {
  auto rs = RootSystem::of_type("A2");
  auto r1 = rs->weyl().generator(0);
  EXPECT_EQ(r1.apply({1, 0}), (RootVector{-1, 0}));
  EXPECT_EQ(r1.apply({0, 1}), (RootVector{1, 1}));
  EXPECT_EQ(rs->reflect(0, {0, 1}), (RootVector{1, 1}));
  for (auto type : {"A1", "A2", "B2", "G2", "C3"}) {
    auto g = RootSystem::of_type(type);
    for (std::size_t i = 0; i < g->rank(); ++i) {
      auto r = g->weyl().generator(i);
      EXPECT_TRUE((r * r).is_identity());
    }
  }
  EXPECT_THROW(rs->weyl().generator(2), MalformedInput);
}

TEST(WeylGroupTest, GroupLaws) {
  auto rs = RootSystem::of_type("A2");
  const auto& W = rs->weyl();
  auto r1 = W.generator(0), r2 = W.generator(1);
  EXPECT_EQ(r1 * r2 * r1, r2 * r1 * r2);
  for (const auto& w : W.elements()) {
    EXPECT_EQ(W.identity() * w, w);
    EXPECT_TRUE((w * w.inverse()).is_identity());
  }
  auto other = RootSystem::of_type("A2");
  EXPECT_THROW(r1 * other->weyl().generator(0), MalformedInput);
}

TEST(WeylGroupTest, SizesAndLongestElements) {
  struct Case { const char* type; std::size_t order; int longest; };
  for (auto c : {Case{"A1", 2, 1}, Case{"A2", 6, 3}, Case{"B2", 8, 4}, Case{"G2", 12, 6}, Case{"A3", 24, 6}}) {
    auto rs = RootSystem::of_type(c.type);
    EXPECT_EQ(rs->weyl().size(), c.order) << c.type;
    EXPECT_EQ(rs->weyl().longest().length(), c.longest) << c.type;
    EXPECT_EQ(rs->positive_roots().size(), static_cast<std::size_t>(c.longest)) << c.type;
  }
  auto a1 = RootSystem::of_type("A1");
  EXPECT_EQ(a1->weyl().longest(), a1->weyl().generator(0));
}

TEST(WeylGroupTest, WordsAreReducedAndLeast) {
  for (auto type : {"A2", "B2", "G2", "A3", "B3"}) {
    auto rs = RootSystem::of_type(type);
    const std::size_t n = rs->rank();
    for (const auto& w : rs->weyl().elements()) {
      IntMatrix m(n * n, 0);
      for (std::size_t k = 0; k < n; ++k) m[k * n + k] = 1;
      for (int g : w.word()) m = multiply(m, rs->weyl().generator(g).matrix(), n);
      EXPECT_EQ(m, w.matrix());
      EXPECT_EQ(w.length(), inversion_count(*rs, w));
    }
  }
  auto a2 = RootSystem::of_type("A2");
  EXPECT_EQ(a2->weyl().longest().word(), (std::vector<int>{0, 1, 0}));
  EXPECT_EQ(word_string(a2->weyl().longest()), "s1 s2 s1");
}

TEST(WeylPropertyTest, DeletionAndLongestElement) {
  for (auto type : {"A1", "A2", "B2", "G2", "C3"}) {
    auto rs = RootSystem::of_type(type);
    const auto& W = rs->weyl();
    auto w0 = W.longest();
    EXPECT_TRUE((w0 * w0).is_identity()) << type;
    for (const auto& w : W.elements()) {
      for (std::size_t i = 0; i < rs->rank(); ++i) {
        EXPECT_EQ(std::abs((w * W.generator(i)).length() - w.length()), 1);
      }
      EXPECT_EQ((w0 * w).length(), w0.length() - w.length());
    }
  }
}

TEST(WeylPropertyTest, SimpleReflectionPermutesOtherPositiveRoots) {
  for (auto type : {"A2", "B2", "G2", "A3", "C3"}) {
    auto rs = RootSystem::of_type(type);
    std::set<RootVector> pos(rs->positive_roots().begin(), rs->positive_roots().end());
    for (std::size_t i = 0; i < rs->rank(); ++i) {
      std::set<RootVector> rest = pos, image;
      rest.erase(rs->simple_root(i));
      for (const auto& r : rest) image.insert(rs->reflect(i, r));
      EXPECT_EQ(image, rest) << type << " r" << i + 1;
    }
  }
}
