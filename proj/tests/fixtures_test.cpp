#include "lbk/fixtures.hpp"

#include <gtest/gtest.h>

#include "lbk/errors.hpp"
#include "lbk/model_io.hpp"

using namespace lbk;

TEST(FixturesTest, ChartCounts) {
  EXPECT_EQ(lambda_tree(2, 1).size(), 1u);
  EXPECT_EQ(lambda_tree(3, 1).size(), 3u);
  EXPECT_EQ(lambda_tree(5, 2).size(), 10u);
  EXPECT_EQ(fan(2).size(), 1u);
  EXPECT_EQ(fan(3).size(), 3u);
  EXPECT_EQ(fan(4).size(), 6u);
  EXPECT_EQ(single_apartment("A2", 1).size(), 1u);
  EXPECT_EQ(lambda_tree(3, 1).name(2), "23");
  EXPECT_EQ(lambda_tree(11, 1).name(0), "1_2");
}

TEST(FixturesTest, RejectsBadParameters) {
  EXPECT_THROW(lambda_tree(1, 1), MalformedInput);
  EXPECT_THROW(fan(1), MalformedInput);
  EXPECT_THROW(fan(3, "A3"), MalformedInput);
}

TEST(FixturesTest, AllFixturesValidate) {
  std::vector<Atlas> atlases;
  for (std::size_t n = 2; n <= 6; ++n) atlases.push_back(lambda_tree(n, 2));
  for (std::size_t m = 2; m <= 4; ++m) {
    for (auto type : {"A2", "B2", "G2"}) atlases.push_back(fan(m, type, 1));
  }
  atlases.push_back(broken_pair());
  atlases.push_back(shifted_rays(2));
  atlases.push_back(pruned_fan());
  for (const auto& a : atlases) EXPECT_TRUE(a.validate().valid()) << to_string(a.validate()) << format_model(a);
}

TEST(FixturesTest, GeneratorsAreDeterministic) {
  EXPECT_EQ(format_model(lambda_tree(4, 2)), format_model(lambda_tree(4, 2)));
  EXPECT_EQ(format_model(fan(4)), format_model(fan(4)));
}

TEST(FixturesTest, TreeGluing) {
  auto tree = lambda_tree(3, 1);
  // Charts 12 and 13 share ray 1, which is the negative side of both.
  EXPECT_EQ(tree.classify(0, 1).shape, RegionShape::HalfApartment);
  EXPECT_EQ(tree.classify(0, 1).half->sense, Sense::Le);
  // Charts 12 and 23 share ray 2: positive in 12, negative in 23.
  EXPECT_EQ(tree.transition(0, 2)->map.linear, tree.apartment().weyl().generator(0));
  auto four = lambda_tree(4, 1);
  EXPECT_EQ(four.classify(*four.find_chart("12"), *four.find_chart("34")).shape, RegionShape::Wall);
}
