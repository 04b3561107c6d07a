#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "twinv/bruhat.hpp"

namespace {

using twinv::Perm;

Perm P(std::initializer_list<int> images) { return Perm::from_images(images); }

std::vector<Perm> all_perms(int n) {
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 1);
  std::vector<Perm> out;
  do {
    out.push_back(Perm::from_images(img));
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

// Literal subword enumeration over all 2^l(y) subsets of a reduced word;
// independent of the incremental version in the library.
bool brute_subword(const Perm& x, const Perm& y) {
  const auto word = twinv::reduced_word(y);
  const int l = static_cast<int>(word.size());
  for (long mask = 0; mask < (1L << l); ++mask) {
    Perm p = Perm::identity(y.window());
    for (int k = 0; k < l; ++k)
      if (mask >> k & 1) p = swap_positions(p, word[k], word[k] + 1);
    if (p == x) return true;
  }
  return false;
}

TEST(Bruhat, Examples) {
  const Perm e = Perm::identity(4);
  for (const Perm& w : all_perms(4)) {
    EXPECT_TRUE(twinv::leq_dots(e, w));
    EXPECT_TRUE(twinv::leq_tableau(w, w));
    EXPECT_TRUE(twinv::subword_oracle(e, w));
  }
  EXPECT_TRUE(twinv::leq_dots(P({2, 1, 4, 3}), P({3, 4, 1, 2})));
  EXPECT_FALSE(twinv::leq_dots(P({4, 2, 3, 1}), P({3, 4, 2, 1})));
  EXPECT_TRUE(twinv::leq_tableau(P({2, 1, 4, 3}), P({3, 4, 1, 2})));
  EXPECT_FALSE(twinv::leq_tableau(P({3, 4, 1, 2}), P({2, 1, 4, 3})));
  EXPECT_TRUE(twinv::subword_oracle(P({2, 1, 4, 3}), P({3, 4, 1, 2})));
  EXPECT_FALSE(twinv::subword_oracle(P({4, 3, 2, 1}), P({3, 4, 1, 2})));
}

TEST(Bruhat, Covers) {
  const Perm e = Perm::identity(4);
  EXPECT_TRUE(twinv::is_cover_W(e, Perm::generator(4, 1)));
  EXPECT_FALSE(twinv::is_cover_W(e, P({3, 4, 1, 2})));
  EXPECT_TRUE(twinv::is_cover_W(P({2, 1, 4, 3}), P({2, 4, 1, 3})));
  EXPECT_FALSE(twinv::is_cover_W(P({2, 4, 1, 3}), P({2, 1, 4, 3})));
}

TEST(Bruhat, ReducedWordComposesBack) {
  for (const Perm& w : all_perms(5)) {
    const auto word = twinv::reduced_word(w);
    EXPECT_EQ(static_cast<int>(word.size()), length(w));
    Perm p = Perm::identity(5);
    for (int s : word) p = swap_positions(p, s, s + 1);
    EXPECT_EQ(p, w);
  }
}

TEST(Bruhat, CriteriaAgreeWithLiteralSubwordsOnS4) {
  const auto perms = all_perms(4);
  for (const Perm& x : perms)
    for (const Perm& y : perms) {
      const bool truth = brute_subword(x, y);
      EXPECT_EQ(twinv::leq_dots(x, y), truth) << x.to_string() << " / " << y.to_string();
      EXPECT_EQ(twinv::leq_tableau(x, y), truth) << x.to_string() << " / " << y.to_string();
      EXPECT_EQ(twinv::subword_oracle(x, y), truth);
    }
}

TEST(Bruhat, OrderIsAPartialOrderGradedByLength) {
  const auto perms = all_perms(5);
  for (const Perm& x : perms)
    for (const Perm& y : perms) {
      if (x == y || !twinv::leq(x, y)) continue;
      EXPECT_LT(length(x), length(y));
      EXPECT_FALSE(twinv::leq(y, x));
    }
}

TEST(Bruhat, MethodSelectorAndGuards) {
  const Perm a = P({2, 1, 4, 3});
  const Perm b = P({3, 4, 1, 2});
  EXPECT_TRUE(twinv::leq(a, b, twinv::OrderMethod::tableau_criterion));
  EXPECT_TRUE(twinv::leq(a, b, twinv::OrderMethod::dot_count_criterion));
  EXPECT_THROW(twinv::leq_dots(a, Perm::identity(3)), std::invalid_argument);
  EXPECT_THROW(twinv::subword_oracle(Perm::identity(10), Perm::identity(10)),
               std::invalid_argument);
}

}  // namespace
