#include <gtest/gtest.h>

#include <random>

#include "ffsmooth/poly.hpp"

using namespace ffsmooth;

namespace {

Poly P(const gf::FieldPtr& F, const char* s) { return parse_poly(F, s); }

Poly random_poly(const gf::FieldPtr& F, std::mt19937_64& rng, int max_deg) {
  const int d = static_cast<int>(rng() % static_cast<u64>(max_deg + 2)) - 1;
  Coeffs c(static_cast<std::size_t>(d + 1));
  for (auto& x : c) x = static_cast<gf::Elem>(rng() % F->q());
  return Poly(F, c);
}

}  // namespace

TEST(Poly, ZeroAndDegree) {
  auto F = gf::make_field(2, 1);
  Poly z(F);
  EXPECT_TRUE(z.is_zero());
  EXPECT_EQ(z.degree(), kDegreeOfZero);
  EXPECT_EQ(P(F, "X^3 + X").degree(), 3);
  EXPECT_EQ(P(F, "X^2 + X^2").degree(), kDegreeOfZero);
}

TEST(Poly, GcdOverF2) {
  auto F = gf::make_field(2, 1);
  EXPECT_EQ(gcd(P(F, "X^2+X"), P(F, "X+1")), P(F, "X+1"));
  EXPECT_TRUE(gcd(Poly(F), Poly(F)).is_zero());
}

TEST(Poly, GcdIsMonic) {
  auto F = gf::make_field(7, 1);
  const Poly g = gcd(P(F, "3*X^2 + 3*X"), P(F, "5*X"));
  EXPECT_EQ(g, P(F, "X"));
}

TEST(Poly, DerivativeOfPthPowerVanishes) {
  for (u64 p : {2, 3, 5, 7}) {
    auto F = gf::make_field(p, 1);
    EXPECT_TRUE(derivative(Poly::monomial(F, 1, static_cast<unsigned>(p))).is_zero());
  }
  auto F = gf::make_field(5, 1);
  EXPECT_EQ(derivative(P(F, "X^3 + 2*X")), P(F, "3*X^2 + 2"));
}

TEST(Poly, LongDivision) {
  auto F = gf::make_field(2, 1);
  auto [q, r] = divmod(P(F, "X^3+1"), P(F, "X+1"));
  EXPECT_EQ(q, P(F, "X^2+X+1"));
  EXPECT_TRUE(r.is_zero());
  EXPECT_THROW(divmod(P(F, "X"), Poly(F)), std::domain_error);
}

TEST(Poly, EuclideanContractRandom) {
  std::mt19937_64 rng(7);
  for (u64 q : {2, 3, 4, 7, 9}) {
    auto F = gf::make_field_of_order(q);
    for (int i = 0; i < 300; ++i) {
      Poly a = random_poly(F, rng, 9), b = random_poly(F, rng, 5);
      if (b.is_zero()) continue;
      auto [qq, r] = divmod(a, b);
      EXPECT_EQ(qq * b + r, a);
      EXPECT_LT(r.degree(), b.degree());
      if (!a.is_zero()) EXPECT_EQ((a * b).degree(), a.degree() + b.degree());
    }
  }
}

TEST(Poly, IndexExamples) {
  auto F7 = gf::make_field(7, 1);
  EXPECT_EQ(P(F7, "3*X + 2").index(), 23);
  auto F2 = gf::make_field(2, 1);
  EXPECT_EQ(P(F2, "X^2+X+1").index(), 7);
  EXPECT_EQ(Poly(F2).index(), 0);
}

TEST(Poly, IndexRoundTripRandom) {
  std::mt19937_64 rng(11);
  for (u64 q : {2, 5, 8, 49}) {
    auto F = gf::make_field_of_order(q);
    for (int i = 0; i < 2500; ++i) {
      Poly f = random_poly(F, rng, 12);
      EXPECT_EQ(Poly::from_index(F, f.index()), f);
      Poly g = random_poly(F, rng, 12);
      EXPECT_EQ(order_less(f, g), f.index() < g.index());
    }
  }
}
