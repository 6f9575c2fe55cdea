#include <gtest/gtest.h>

#include "jv/error.hpp"
#include "jv/parse.hpp"
#include "jv/rational_function.hpp"
#include "support.hpp"

using namespace jv;
using jv::testing::Rng;

namespace {

Poly L(std::size_t i) { return Poly::lambda(i); }
Poly P(const char* s) { return parse_poly(s); }

}  // namespace

TEST(Rat, CanonicalForm) {
  const Rat r(6, -8);
  EXPECT_EQ(r.numerator(), -3);
  EXPECT_EQ(r.denominator(), 4);
  EXPECT_EQ(r.str(), "-3/4");
  EXPECT_EQ(Rat::parse("10/4"), Rat(5, 2));
  EXPECT_EQ(Rat::parse("-7"), Rat(-7));
  EXPECT_THROW(Rat(1) / Rat(0), DomainError);
  EXPECT_THROW(Rat::parse("1/0"), Error);
  EXPECT_THROW(Rat::parse("x"), ParseError);
}

TEST(Rat, BignumsDoNotOverflow) {
  Rat r(1);
  for (int k = 0; k < 40; ++k) r *= Rat(1000003, 7);
  Rat back = r;
  for (int k = 0; k < 40; ++k) back /= Rat(1000003, 7);
  EXPECT_EQ(back, Rat(1));
}

TEST(Poly, EvaluatesToZeroAtRoot) {
  const Poly p = L(1) - Rat(3, 4);
  const std::vector<Rat> pt{Rat(3, 4)};
  EXPECT_TRUE(p.eval(pt).is_zero());
}

TEST(Poly, ExpansionMatchesDescendingRendering) {
  const Poly p = (L(2) - L(1)) * (2 * L(2) - 2 * L(1) - 1);
  EXPECT_EQ(p.str(), "2*L2^2 - 4*L1*L2 + 2*L1^2 - L2 + L1");
  // Oracle: both sides agree at random points.
  Rng rng(11);
  for (int k = 0; k < 5; ++k) {
    const auto pt = jv::testing::random_point(rng, 2);
    const Rat lhs = (pt[1] - pt[0]) * (Rat(2) * pt[1] - Rat(2) * pt[0] - Rat(1));
    EXPECT_EQ(p.eval(pt), lhs);
  }
}

TEST(Poly, DegreeOfConstant) {
  EXPECT_EQ(Poly(7).total_degree(), 0);
  EXPECT_EQ(Poly().total_degree(), -1);
  EXPECT_EQ((L(1) * L(2) * L(2)).total_degree(), 3);
}

TEST(Poly, Gcd) {
  EXPECT_EQ(gcd(L(1) * L(1) - L(2) * L(2), L(1) - L(2)), content_free(L(1) - L(2)));
  EXPECT_EQ(gcd(L(1) * L(1) - L(2) * L(2), L(1) - L(2)).str(), "L2 - L1");
  EXPECT_EQ(gcd(Poly(6), Poly(4)), Poly(1));
  EXPECT_EQ(gcd(Poly(), L(1) * 3), L(1));
  EXPECT_THROW(gcd(Poly(), Poly()), DomainError);
}

TEST(Poly, ContentFreeIsMonic) {
  EXPECT_EQ(content_free(-4 * L(2) + 1).str(), "L2 - 1/4");
  EXPECT_EQ(content_free(Poly()), Poly());
}

TEST(Poly, SquarefreePart) {
  const Poly d = L(1) - L(2);
  EXPECT_EQ(squarefree_part(d * d), content_free(d));
  const Poly q = (L(1) - Rat(1, 2)) * (L(2) - 3) * (L(2) - 3) * (L(1) + L(2));
  EXPECT_EQ(squarefree_part(q), content_free((L(1) - Rat(1, 2)) * (L(2) - 3) * (L(1) + L(2))));
}

TEST(Poly, SplitLinearFactors) {
  const Poly p = (L(2) - Rat(3, 4)) * (L(2) - Rat(5, 4)) * (L(1) * L(1) + 1);
  const LinearSplit s = split_linear_factors(p);
  ASSERT_EQ(s.linear.size(), 2u);
  Poly prod = s.rest;
  for (const auto& f : s.linear) {
    EXPECT_TRUE(is_affine(f));
    prod *= f;
  }
  EXPECT_EQ(prod, content_free(p));
  EXPECT_EQ(s.rest, L(1) * L(1) + 1);
}

TEST(Poly, RationalRoots) {
  const auto roots = rational_roots((2 * L(1) - 3) * (4 * L(1) + 1) * (L(1) * L(1) + 2), 1);
  ASSERT_EQ(roots.size(), 2u);
  EXPECT_EQ(roots[0], Rat(-1, 4));
  EXPECT_EQ(roots[1], Rat(3, 2));
}

TEST(Poly, SubstituteAndPartialEval) {
  const Poly p = L(1) * L(2) + L(2);
  EXPECT_EQ(p.substitute(2, L(1) + 1), L(1) * L(1) + 2 * L(1) + 1);
  EXPECT_EQ(p.eval(std::map<std::size_t, Rat>{{1, Rat(2)}}), 3 * L(2));
  EXPECT_THROW(p.eval(std::vector<Rat>{Rat(1)}), DomainError);
}

TEST(Poly, ParseRenderRoundTrip) {
  for (const char* s : {"2*L2^2 - 4*L1*L2 + 2*L1^2 - L2 + L1", "L2 - 1/4", "0", "-3/7", "L1^3*L2 - L3"}) {
    EXPECT_EQ(P(s).str(), s);
  }
  EXPECT_EQ(P("(L1 + 1)^2"), L(1) * L(1) + 2 * L(1) + 1);
  EXPECT_EQ(P("2 L1 / 4"), L(1) * Rat(1, 2));
  EXPECT_THROW(P("L1 +"), ParseError);
  EXPECT_THROW(P("a+1"), ParseError);
  EXPECT_THROW(P("1/L1"), ParseError);
}

TEST(RatFunc, ReducedAndMonicDenominator) {
  const RatFunc f((L(1) - 1) * (L(2) + 2), 3 * (L(1) - 1));
  EXPECT_TRUE(f.is_polynomial());
  EXPECT_EQ(f.num(), (L(2) + 2) * Rat(1, 3));
  const RatFunc g(L(1), -2 * L(2));
  EXPECT_EQ(g.den(), L(2));
  EXPECT_EQ(g.num(), L(1) * Rat(-1, 2));
  EXPECT_THROW(RatFunc(L(1), Poly()), DomainError);
  EXPECT_THROW(RatFunc(Poly()).inverse(), DomainError);
}

// Property tests on random polynomials in three variables.

class RingProperty : public ::testing::TestWithParam<int> {};

TEST_P(RingProperty, Axioms) {
  Rng rng(1000 + GetParam());
  const Poly a = jv::testing::random_poly(rng, 3, 4, 3);
  const Poly b = jv::testing::random_poly(rng, 3, 4, 3);
  const Poly c = jv::testing::random_poly(rng, 3, 3, 2);
  EXPECT_EQ((a * b) * c, a * (b * c));
  EXPECT_EQ(a * (b + c), a * b + a * c);
  EXPECT_EQ(a * b, b * a);
  EXPECT_EQ(a + b - b, a);
  EXPECT_TRUE((a - a).is_zero());
}

TEST_P(RingProperty, EvalIsHomomorphism) {
  Rng rng(2000 + GetParam());
  const Poly a = jv::testing::random_poly(rng, 3, 4, 3);
  const Poly b = jv::testing::random_poly(rng, 3, 4, 3);
  const auto pt = jv::testing::random_point(rng, 3);
  EXPECT_EQ((a * b).eval(pt), a.eval(pt) * b.eval(pt));
  EXPECT_EQ((a + b).eval(pt), a.eval(pt) + b.eval(pt));
}

TEST_P(RingProperty, GcdDividesBoth) {
  Rng rng(3000 + GetParam());
  const Poly common = jv::testing::random_poly(rng, 2, 2, 2);
  const Poly a = common * jv::testing::random_poly(rng, 2, 3, 2);
  const Poly b = common * jv::testing::random_poly(rng, 2, 3, 2);
  if (a.is_zero() && b.is_zero()) GTEST_SKIP();
  const Poly g = gcd(a, b);
  ASSERT_FALSE(g.is_zero());
  EXPECT_TRUE(divide_exact(a, g).has_value());
  EXPECT_TRUE(divide_exact(b, g).has_value());
  if (!common.is_zero()) EXPECT_TRUE(divide_exact(g, common).has_value());
}

TEST_P(RingProperty, RatFuncField) {
  Rng rng(4000 + GetParam());
  const Poly p = jv::testing::random_poly(rng, 2, 3, 2);
  const Poly q = jv::testing::random_poly(rng, 2, 3, 2);
  if (p.is_zero() || q.is_zero()) GTEST_SKIP();
  const RatFunc f(p, q);
  EXPECT_EQ(f * f.inverse(), RatFunc(1));
  EXPECT_EQ(f + RatFunc(q, p) - RatFunc(q, p), f);
  EXPECT_EQ(RatFunc(p * q, q * q), RatFunc(p, q));
}

INSTANTIATE_TEST_SUITE_P(Seeds, RingProperty, ::testing::Range(0, 25));
