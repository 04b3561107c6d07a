#include <gtest/gtest.h>

#include <limits>

#include "twinv/polynomial.hpp"

namespace {

using twinv::IntPoly;
using twinv::LaurentPoly;

const IntPoly q = IntPoly::q();
const IntPoly qm1{-1, 1};

TEST(Polynomial, Arithmetic) {
  EXPECT_EQ(qm1 * qm1, (IntPoly{1, -2, 1}));
  EXPECT_EQ(qm1 + IntPoly{}, qm1);
  EXPECT_EQ(qm1 * IntPoly::one() + q * IntPoly{}, qm1);
  EXPECT_EQ(qm1 - qm1, IntPoly{});
  EXPECT_TRUE((IntPoly{0, 0}).is_zero());
  EXPECT_EQ(IntPoly{}.degree(), -1);
  EXPECT_EQ((IntPoly{3, 0, 2}).degree(), 2);
  EXPECT_EQ((IntPoly{3, 0, 2}).leading(), 2);
}

TEST(Polynomial, TextForm) {
  EXPECT_EQ((IntPoly{0, -1, 1}).to_string(), "q^2 - q");
  EXPECT_EQ(IntPoly::one().to_string(), "1");
  EXPECT_EQ(IntPoly{}.to_string(), "0");
  EXPECT_EQ((IntPoly{1, -1}).to_string(), "-q + 1");
  EXPECT_EQ((IntPoly{1, 1}).to_string(), "q + 1");
  EXPECT_EQ((IntPoly{0, 0, -3}).to_string(), "-3q^2");
  EXPECT_EQ(LaurentPoly(-2, {1, 0, -1}).to_string(), "-1 + q^-2");
}

TEST(Polynomial, ReverseScaled) {
  EXPECT_EQ(reverse_scaled(qm1, 1), LaurentPoly(IntPoly{1, -1}));
  EXPECT_EQ(reverse_scaled(IntPoly::one(), 0), LaurentPoly(IntPoly::one()));
  EXPECT_EQ(reverse_scaled(IntPoly{0, -1, 1}, 2), LaurentPoly(IntPoly{1, -1}));
  EXPECT_FALSE(reverse_scaled(IntPoly{0, 0, 1}, 1).is_polynomial());
}

TEST(Polynomial, Truncate) {
  EXPECT_EQ(truncate_to_degree(IntPoly{-1, 0, 1}, 0), IntPoly{-1});
  const IntPoly p{2, 0, -5, 1};
  EXPECT_EQ(truncate_to_degree(p, p.degree()), p);
  EXPECT_EQ(truncate_to_degree(qm1, -1), IntPoly{});
  EXPECT_THROW(truncate_to_degree(qm1, -2), std::invalid_argument);
}

TEST(Polynomial, EvalAtOne) {
  EXPECT_EQ(eval_at_one(qm1), 0);
  EXPECT_EQ(eval_at_one(IntPoly{0, -1, 1}), 0);
  EXPECT_EQ(eval_at_one(IntPoly{1, 1}), 2);
  EXPECT_EQ(eval_at_one(LaurentPoly(-3, {2, 0, 1})), 3);
}

TEST(Polynomial, LaurentOperations) {
  const LaurentPoly a(-1, {1, 2});  // q^-1 + 2
  EXPECT_EQ(a.low_degree(), -1);
  EXPECT_EQ(a.high_degree(), 0);
  EXPECT_EQ(a.invert_variable(), LaurentPoly(0, {2, 1}));
  EXPECT_EQ(a * a, LaurentPoly(-2, {1, 4, 4}));
  EXPECT_EQ(a - a, LaurentPoly{});
  EXPECT_EQ(a.shifted(1).to_poly(), (IntPoly{1, 2}));
  EXPECT_THROW(a.to_poly(), std::domain_error);
  EXPECT_EQ(LaurentPoly(5, {0, 0}), LaurentPoly{});
  EXPECT_EQ(LaurentPoly(1, {0, 3}), LaurentPoly::monomial(3, 2));
}

TEST(Polynomial, OverflowIsDetected) {
  const auto big = std::numeric_limits<twinv::Coeff>::max();
  EXPECT_THROW(IntPoly{big} + IntPoly::one(), std::overflow_error);
  EXPECT_THROW(IntPoly{big} * IntPoly{2}, std::overflow_error);
  EXPECT_THROW(-IntPoly{std::numeric_limits<twinv::Coeff>::min()}, std::overflow_error);
}

}  // namespace
