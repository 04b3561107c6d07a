#include <gtest/gtest.h>

#include <algorithm>
#include <functional>
#include <sstream>

#include "twinv/poset.hpp"

namespace {

using twinv::Ground;
using twinv::IntervalPoset;
using twinv::Perm;

Perm P(std::initializer_list<int> images) { return Perm::from_images(images); }

TEST(Poset, ChainAtWindowFour) {
  const IntervalPoset I = twinv::build_interval(Perm::identity(4), P({3, 4, 1, 2}), Ground::iota);
  ASSERT_EQ(I.size(), 3);
  EXPECT_EQ(I.elements(), (std::vector<Perm>{P({1, 2, 3, 4}), P({2, 1, 4, 3}), P({3, 4, 1, 2})}));
  EXPECT_TRUE(I.covers(0, 1));
  EXPECT_TRUE(I.covers(1, 2));
  EXPECT_FALSE(I.covers(0, 2));
  EXPECT_TRUE(I.less(0, 2));
  EXPECT_EQ(I.ranks(), (std::vector<int>{0, 1, 2}));
  EXPECT_EQ(I.cover_count(), 2);
  EXPECT_EQ(I.index_of(P({2, 1, 4, 3})), 1);
  EXPECT_EQ(I.index_of(P({1, 3, 2, 4})), -1);
}

TEST(Poset, SingletonAndWholePoset) {
  const IntervalPoset one = twinv::lower_interval(Perm::identity(6));
  EXPECT_EQ(one.size(), 1);
  EXPECT_EQ(one.bottom(), one.top());
  EXPECT_EQ(twinv::lower_interval(twinv::iota_max(8)).size(), 105);
  const IntervalPoset mid = twinv::build_interval(P({2, 1, 4, 3}), P({3, 4, 1, 2}), Ground::iota);
  EXPECT_EQ(mid.rank(mid.bottom()), 0);
  EXPECT_EQ(mid.absolute_rank(mid.bottom()), 1);
}

TEST(Poset, BadEndpoints) {
  const Perm e = Perm::identity(4);
  EXPECT_THROW(twinv::build_interval(e, P({1, 3, 2, 4}), Ground::iota), std::invalid_argument);
  EXPECT_THROW(twinv::build_interval(P({3, 4, 1, 2}), e, Ground::iota), std::invalid_argument);
  EXPECT_THROW(twinv::build_interval(e, P({2, 1, 3, 4}), Ground::twisted), std::invalid_argument);
  EXPECT_NO_THROW(twinv::build_interval(e, P({1, 3, 2, 4}), Ground::twisted));
}

TEST(Poset, Covers) {
  EXPECT_EQ(twinv::covers_in_iota(Perm::identity(4), twinv::iota_max(4)),
            std::vector<Perm>{P({2, 1, 4, 3})});
  const auto atoms = twinv::covers_in_iota(Perm::identity(6), twinv::iota_max(6));
  const Perm s5s1 = compose(Perm::generator(6, 5), Perm::generator(6, 1));
  const Perm s4s2 = compose(Perm::generator(6, 4), Perm::generator(6, 2));
  EXPECT_EQ(atoms.size(), 2u);
  EXPECT_NE(std::find(atoms.begin(), atoms.end(), s5s1), atoms.end());
  EXPECT_NE(std::find(atoms.begin(), atoms.end(), s4s2), atoms.end());
  EXPECT_TRUE(twinv::covers_in_iota(twinv::iota_max(4), twinv::iota_max(4)).empty());
  EXPECT_THROW(twinv::covers_in_iota(P({1, 3, 2, 4}), twinv::iota_max(4)), std::invalid_argument);
}

TEST(Poset, RankTwoProfiles) {
  EXPECT_EQ(twinv::rank2_interval_profile(twinv::lower_interval(twinv::iota_max(4))),
            (std::map<int, int>{{3, 1}}));
  for (int window : {4, 6}) {
    const auto profile = twinv::rank2_interval_profile(
        twinv::lower_interval(twinv::longest_element(window), Ground::twisted));
    ASSERT_EQ(profile.size(), 1u);
    EXPECT_EQ(profile.begin()->first, 4);
  }
}

// Brute force: every bijection preserving rank layers, kept if it is an
// order isomorphism.
long brute_isomorphism_count(const IntervalPoset& A, const IntervalPoset& B) {
  if (A.size() != B.size() || A.max_rank() != B.max_rank()) return 0;
  const auto la = A.layers();
  const auto lb = B.layers();
  for (std::size_t r = 0; r < la.size(); ++r)
    if (la[r].size() != lb[r].size()) return 0;
  std::vector<std::vector<int>> perms = lb;
  for (auto& p : perms) std::sort(p.begin(), p.end());
  long count = 0;
  std::function<void(std::size_t)> rec = [&](std::size_t r) {
    if (r == la.size()) {
      std::vector<int> f(A.size());
      for (std::size_t k = 0; k < la.size(); ++k)
        for (std::size_t i = 0; i < la[k].size(); ++i) f[la[k][i]] = perms[k][i];
      count += twinv::is_order_isomorphism(A, B, f);
      return;
    }
    do {
      rec(r + 1);
    } while (std::next_permutation(perms[r].begin(), perms[r].end()));
  };
  rec(0);
  return count;
}

TEST(Poset, IsomorphismSearchIsSoundAndComplete) {
  std::vector<IntervalPoset> intervals;
  for (int window : {4, 6})
    for (const Perm& w : twinv::iota_elements(window)) intervals.push_back(twinv::lower_interval(w));
  for (const auto& A : intervals)
    for (const auto& B : intervals) {
      long found = twinv::for_each_isomorphism(A, B, [&](const std::vector<int>& f) {
        EXPECT_TRUE(twinv::is_order_isomorphism(A, B, f));
        return true;
      });
      EXPECT_EQ(found, brute_isomorphism_count(A, B));
    }
}

TEST(Poset, IsomorphismExamples) {
  const IntervalPoset chain3 = twinv::lower_interval(P({3, 4, 1, 2}));
  const auto self = twinv::find_isomorphism(chain3, chain3);
  ASSERT_TRUE(self);
  EXPECT_EQ(*self, (std::vector<int>{0, 1, 2}));
  const IntervalPoset chain2a = twinv::lower_interval(P({2, 1, 4, 3}));
  const IntervalPoset chain2b = twinv::lower_interval(P({2, 1, 3, 4, 6, 5}));
  EXPECT_EQ(twinv::for_each_isomorphism(chain2a, chain2b, [](const auto&) { return true; }), 1);
  // Rank-2 intervals of I(θ) are diamonds.
  const IntervalPoset diamond = twinv::lower_interval(P({3, 4, 1, 2}), Ground::twisted);
  EXPECT_EQ(diamond.size(), 4);
  EXPECT_FALSE(twinv::find_isomorphism(chain3, diamond));
  EXPECT_FALSE(twinv::is_order_isomorphism(chain3, chain3, {0, 2, 1}));
  EXPECT_FALSE(twinv::is_order_isomorphism(chain3, chain3, {0, 0, 1}));
}

TEST(Poset, DotExport) {
  std::ostringstream os;
  twinv::write_dot(os, twinv::lower_interval(P({3, 4, 1, 2})));
  const std::string dot = os.str();
  EXPECT_EQ(std::count(dot.begin(), dot.end(), '\n'), 9);
  EXPECT_NE(dot.find("n0 [label=\"1 2 3 4\\nrho 0\"];"), std::string::npos);
  EXPECT_NE(dot.find("n0 -> n1;"), std::string::npos);
  EXPECT_NE(dot.find("n1 -> n2;"), std::string::npos);
}

TEST(Poset, JsonExport) {
  const auto j = twinv::to_json(twinv::lower_interval(twinv::iota_max(6)));
  EXPECT_EQ(j["ground"], "iota");
  EXPECT_EQ(j["elements"].size(), 15u);
  EXPECT_EQ(j["rank"].size(), 15u);
  EXPECT_EQ(j["covers"].size(), 26u);
  EXPECT_EQ(j["elements"][0], "1 2 3 4 5 6");
}

}  // namespace
