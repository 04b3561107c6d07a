#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "twinv/perm.hpp"

namespace {

using twinv::Perm;
using twinv::parse_perm;

Perm P(std::initializer_list<int> images) { return Perm::from_images(images); }

TEST(Perm, ParsesAndPrintsOneLineNotation) {
  const Perm p = parse_perm("3 4 1 2");
  EXPECT_EQ(p.window(), 4);
  EXPECT_EQ(p(1), 3);
  EXPECT_EQ(p.to_string(), "3 4 1 2");
  EXPECT_EQ(p.compact(), "3412");
  EXPECT_EQ(parse_perm("  2 1 "), P({2, 1}));
}

TEST(Perm, ParserRejectsNonBijections) {
  EXPECT_THROW(parse_perm("1 1 2"), std::invalid_argument);
  EXPECT_THROW(parse_perm("0 1"), std::invalid_argument);
  EXPECT_THROW(parse_perm("1 2 4"), std::invalid_argument);
  EXPECT_THROW(parse_perm("1 x"), std::invalid_argument);
  EXPECT_THROW(parse_perm("1 2a"), std::invalid_argument);
  EXPECT_THROW(parse_perm(""), std::invalid_argument);
  EXPECT_THROW(parse_perm("1 2 3", 4), std::invalid_argument);
  EXPECT_THROW(Perm::identity(0), std::invalid_argument);
  EXPECT_THROW(Perm::identity(twinv::kMaxWindow + 1), std::invalid_argument);
}

TEST(Perm, ComposeAppliesRightFactorFirst) {
  const Perm e = Perm::identity(4);
  const Perm x = P({2, 4, 1, 3});
  EXPECT_EQ(compose(e, x), x);
  EXPECT_EQ(compose(P({4, 3, 2, 1}), P({2, 1, 4, 3})), P({3, 4, 1, 2}));
  EXPECT_EQ(compose(P({2, 1, 4, 3}), P({2, 1, 4, 3})), e);
  EXPECT_THROW(compose(e, Perm::identity(3)), std::invalid_argument);
}

TEST(Perm, Inverse) {
  EXPECT_EQ(inverse(Perm::identity(4)), Perm::identity(4));
  EXPECT_EQ(inverse(P({3, 4, 1, 2})), P({3, 4, 1, 2}));
  EXPECT_EQ(inverse(P({2, 3, 1, 4})), P({3, 1, 2, 4}));
}

TEST(Perm, SwapsArePositionAndValueMultiplications) {
  const Perm w = P({3, 1, 4, 2});
  EXPECT_EQ(swap_positions(w, 1, 2), compose(w, Perm::transposition(4, 1, 2)));
  EXPECT_EQ(swap_values(w, 1, 2), compose(Perm::transposition(4, 1, 2), w));
}

TEST(Perm, LengthAndDescents) {
  EXPECT_EQ(length(Perm::identity(4)), 0);
  EXPECT_EQ(length(P({4, 3, 2, 1})), 6);
  EXPECT_EQ(length(P({3, 4, 1, 2})), 4);
  EXPECT_TRUE(right_descents(Perm::identity(4)).empty());
  EXPECT_EQ(right_descents(P({3, 4, 1, 2})), std::vector<int>{2});
  EXPECT_EQ(right_descents(P({2, 1, 4, 3})), (std::vector<int>{1, 3}));
}

TEST(Perm, LengthDropsByOneAtEachDescent) {
  std::vector<int> img(5);
  std::iota(img.begin(), img.end(), 1);
  do {
    const Perm w = Perm::from_images(img);
    for (int i = 1; i < 5; ++i) {
      const int delta = length(swap_positions(w, i, i + 1)) - length(w);
      EXPECT_EQ(delta, is_right_descent(w, i) ? -1 : 1);
    }
  } while (std::next_permutation(img.begin(), img.end()));
}

TEST(Perm, LongestElementAndTheta) {
  EXPECT_EQ(twinv::longest_element(2), P({2, 1}));
  EXPECT_EQ(twinv::longest_element(4), P({4, 3, 2, 1}));
  EXPECT_EQ(twinv::longest_element(6), P({6, 5, 4, 3, 2, 1}));
  EXPECT_EQ(theta(Perm::generator(4, 1)), Perm::generator(4, 3));
  EXPECT_EQ(theta(P({1, 2, 4, 3})), P({2, 1, 3, 4}));
  EXPECT_EQ(theta(Perm::identity(4)), Perm::identity(4));
  EXPECT_EQ(theta(P({2, 1, 3, 4})), P({1, 2, 4, 3}));
  for (int i = 1; i < 6; ++i) EXPECT_EQ(theta(Perm::generator(6, i)), Perm::generator(6, 6 - i));
}

TEST(Perm, DotCount) {
  EXPECT_EQ(dot_count(Perm::identity(4), 1, 4), 4);
  EXPECT_EQ(dot_count(P({3, 4, 1, 2}), 2, 3), 2);
  EXPECT_EQ(dot_count(P({4, 3, 2, 1}), 1, 1), 1);
  EXPECT_THROW(dot_count(Perm::identity(4), 0, 1), std::invalid_argument);
  EXPECT_THROW(dot_count(Perm::identity(4), 1, 5), std::invalid_argument);
}

TEST(Perm, GeneratorRange) {
  EXPECT_THROW(Perm::generator(4, 0), std::invalid_argument);
  EXPECT_THROW(Perm::generator(4, 4), std::invalid_argument);
  EXPECT_THROW(Perm::transposition(4, 1, 5), std::invalid_argument);
}

TEST(Perm, OrderingIsWindowThenLexicographic) {
  EXPECT_LT(P({1, 2, 3}), P({1, 3, 2}));
  EXPECT_LT(P({2, 1}), P({1, 2, 3}));
  EXPECT_EQ(std::hash<Perm>{}(P({2, 1})), std::hash<Perm>{}(P({2, 1})));
}

}  // namespace
