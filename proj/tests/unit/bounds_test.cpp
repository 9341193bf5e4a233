#include <gtest/gtest.h>

#include <set>

#include "ffsmooth/bounds.hpp"
#include "ffsmooth/counts.hpp"

using namespace ffsmooth;

namespace {

using Pairs = std::vector<std::pair<u64, unsigned>>;

// The 36-pair roster as printed.
const Pairs kPrintedOmega1{{7, 2},  {7, 3},  {7, 4},  {7, 5},  {8, 2},  {8, 3},  {8, 4},  {8, 5},  {9, 2},
                           {9, 3},  {9, 4},  {11, 2}, {11, 3}, {11, 4}, {13, 2}, {13, 3}, {16, 2}, {16, 3},
                           {17, 2}, {17, 3}, {19, 2}, {19, 3}, {23, 2}, {25, 2}, {27, 2}, {29, 2}, {31, 2},
                           {32, 2}, {37, 2}, {41, 2}, {43, 2}, {47, 2}, {49, 2}, {53, 2}, {59, 2}, {61, 2}};

// Independent route for inequalities whose terms are integer multiples of
// q^(h/2): collect into A + B sqrt(q) and decide by squaring.
int sign_a_plus_b_sqrt_q(const BigInt& A, const BigInt& B, u64 q) {
  auto sgn = [](const BigInt& x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); };
  if (B == 0) return sgn(A);
  if (A == 0) return sgn(B);
  if (sgn(A) == sgn(B)) return sgn(A);
  const BigInt a2 = A * A, b2 = B * B * q;
  if (a2 == b2) return 0;
  return a2 > b2 ? sgn(A) : sgn(B);
}

bool coset_by_halves(u64 q, unsigned r) {
  BigInt A = big_pow(q, r - 1), B = 0;
  for (unsigned k = 0; k <= (r - 2) / 2; ++k)
    for (unsigned t = 1; t + 2 * k + 1 <= r; ++t) {
      const BigInt C = binomial(r - 1, t);
      BigInt coef;
      unsigned h;
      if (big_pow(q, t) <= C * C) {
        coef = 1;
        h = 2 * (k + t);
      } else {
        coef = C;
        h = 2 * k + t;
      }
      coef *= r - 1;
      if (h % 2 == 0)
        A -= coef * big_pow(q, h / 2);
      else
        B -= coef * big_pow(q, h / 2);
    }
  return sign_a_plus_b_sqrt_q(A, B, q) > 0;
}

bool simple_coset_by_halves(u64 q, unsigned r) {
  // 2 q^(r-1) > (r-1) r q^((r-1)/2) (2^(r-1) - 1)
  const BigInt coef = BigInt(r - 1) * r * ((BigInt(1) << (r - 1)) - 1);
  BigInt A = 2 * big_pow(q, r - 1), B = 0;
  if ((r - 1) % 2 == 0)
    A -= coef * big_pow(q, (r - 1) / 2);
  else
    B -= coef * big_pow(q, (r - 1) / 2);
  return sign_a_plus_b_sqrt_q(A, B, q) > 0;
}

// r S - q^r - r(q-1)r^3 - 3r > 2r q^(r/2 + 11/20), raised to the 20th power.
bool irred_count_by_powers(u64 q, unsigned r) {
  const BigInt T = count_irreducible_below(q, r) * r - big_pow(q, r) - BigInt(q - 1) * r * r * r * r - 3 * r;
  if (T <= 0) return false;
  return boost::multiprecision::pow(T, 20) > boost::multiprecision::pow(BigInt(2 * r), 20) * big_pow(q, 10 * r + 11);
}

int float_sign(const ExactComparison& c) {
  const Float200 d = c.lhs_approx() - c.rhs_approx();
  const Float200 scale = abs(c.lhs_approx()) + abs(c.rhs_approx());
  if (abs(d) <= scale * Float200(1e-50)) return 0;  // tie, or too close to call
  return d > 0 ? 1 : -1;
}

}  // namespace

TEST(Omega, Examples) {
  auto c = omega_classify(7, 6);
  EXPECT_EQ(c.region, OmegaRegion::Omega0);
  EXPECT_TRUE(c.omega0_prime);
  EXPECT_TRUE(c.omega0_double_prime);
  EXPECT_EQ(omega_classify(7, 5).region, OmegaRegion::Omega1);
  EXPECT_EQ(omega_classify(64, 2).region, OmegaRegion::Omega0);
  EXPECT_EQ(omega_classify(5, 9).region, OmegaRegion::OutOfDomain);
  EXPECT_EQ(omega_classify(7, 1).region, OmegaRegion::OutOfDomain);
  EXPECT_THROW(omega_classify(6, 3), std::invalid_argument);
}

TEST(Omega, RosterMatchesPrintedList) { EXPECT_EQ(omega1_pairs(), kPrintedOmega1); }

TEST(Omega, SubsetSizes) {
  EXPECT_EQ(omega0_prime_pairs_below_64().size(), 22u);
  EXPECT_EQ(omega0_double_prime_pairs().size(), 31u);
  for (auto [q, r] : omega0_double_prime_pairs()) EXPECT_EQ(omega_classify(q, r).region, OmegaRegion::Omega0);
}

TEST(Omega, PartitionOfDomain) {
  const std::set<std::pair<u64, unsigned>> roster(kPrintedOmega1.begin(), kPrintedOmega1.end());
  for (u64 q : prime_powers_in(2, 300))
    for (unsigned r = 1; r <= 30; ++r) {
      auto c = omega_classify(q, r);
      if (q < 7 || r < 2) {
        EXPECT_EQ(c.region, OmegaRegion::OutOfDomain);
        continue;
      }
      EXPECT_EQ(c.region == OmegaRegion::Omega1, roster.count({q, r}) == 1) << q << "," << r;
    }
}

TEST(Exact, TieIsExact) { EXPECT_EQ(ineq_coset(4, 3).sign(), 0); }

TEST(Exact, RadicalSums) {
  ExactComparison c(4);  // q^(10/20) = 2
  c.add_lhs(1, 10);
  c.add_rhs(2, 0);
  EXPECT_EQ(c.sign(), 0);
  ExactComparison d(2);  // 2^(1/2) vs 1.41421356
  d.add_lhs(1, 10);
  d.add_rhs(BigRational(141421356, 100000000), 0);
  EXPECT_EQ(d.sign(), 1);
  ExactComparison e(2);  // 2^(1/2) - 1.41421357
  e.add_lhs(1, 10);
  e.add_rhs(BigRational(141421357, 100000000), 0);
  EXPECT_EQ(e.sign(), -1);
  ExactComparison f(8);  // 8^(1/3) is not representable; 8^(20/20) = 8
  f.add_lhs(1, 20);
  f.add_rhs(8, 0);
  EXPECT_EQ(f.sign(), 0);
  EXPECT_THROW(ExactComparison(6), std::invalid_argument);
}

TEST(Exact, OrderOfTermsIrrelevant) {
  for (unsigned r = 2; r < 30; ++r) {
    auto c = ineq_coset(7, r);
    ExactComparison rev(7);
    for (auto it = c.lhs().rbegin(); it != c.lhs().rend(); ++it) rev.add_lhs(it->c, it->a);
    for (auto it = c.rhs().rbegin(); it != c.rhs().rend(); ++it) rev.add_rhs(it->c, it->a);
    EXPECT_EQ(c.sign(), rev.sign());
  }
}

TEST(Inequalities, IndependentRoutesAgree) {
  for (u64 q : prime_powers_in(2, 128))
    for (unsigned r = 2; r <= 64; ++r) {
      EXPECT_EQ(ineq_coset(q, r).holds(), coset_by_halves(q, r)) << q << "," << r;
      EXPECT_EQ(ineq_simple_coset(q, r).holds(), simple_coset_by_halves(q, r)) << q << "," << r;
      EXPECT_EQ(ineq_irred_count(q, r).holds(), irred_count_by_powers(q, r)) << q << "," << r;
    }
}

TEST(Inequalities, FloatSanityOracle) {
  for (u64 q : prime_powers_in(2, 128))
    for (unsigned r = 2; r <= 64; r += (q < 8 ? 1 : 3))
      for (Inequality w : kAllInequalities) {
        auto c = inequality(w, q, r);
        EXPECT_EQ(c.sign(), float_sign(c)) << inequality_id(w) << " " << q << "," << r;
      }
}

TEST(Inequalities, SharperBoundImpliedBySimpler) {
  for (u64 q : prime_powers_in(2, 128))
    for (unsigned r = 2; r <= 64; ++r)
      if (ineq_simple_coset(q, r).holds()) EXPECT_TRUE(ineq_coset(q, r).holds()) << q << "," << r;
}

TEST(Inequalities, BaseCasesAndDomainClaims) {
  for (auto [q, r] : omega0_prime_pairs_below_64()) EXPECT_TRUE(ineq_irred_count(q, r).holds()) << q << "," << r;
  EXPECT_TRUE(ineq_irred_count(64, 2).holds());
  for (auto [q, r] : omega0_double_prime_pairs()) EXPECT_TRUE(ineq_coset(q, r).holds()) << q << "," << r;
  for (u64 q : prime_powers_in(7, 128))
    for (unsigned r = omega0_min_r(q); r <= 64; ++r) {
      EXPECT_TRUE(ineq_enough_reps(q, r).holds()) << q << "," << r;
      if (!omega_classify(q, r).omega0_double_prime) EXPECT_TRUE(ineq_simple_coset(q, r).holds()) << q << "," << r;
    }
}

TEST(Inequalities, IrredCountAtRankTwo) {
  // q^2 - q - q^2/2 - 2 q^(31/20) - 8(q-1) - 3 is about -8.6 at q = 53 and
  // positive from the next prime power on.
  EXPECT_FALSE(ineq_irred_count(53, 2).holds());
  for (u64 q : prime_powers_in(59, 400)) EXPECT_TRUE(ineq_irred_count(q, 2).holds()) << q;
}

TEST(Thresholds, SmallFields) {
  auto first = [](const std::vector<ThresholdRow>& rows, const std::string& id) {
    for (const auto& row : rows)
      if (row.id == id) return row.first_true_r;
    return std::optional<unsigned>{};
  };
  auto t5 = scan_thresholds(5, 80);
  EXPECT_EQ(first(t5, "irred_count"), 8u);
  EXPECT_EQ(first(t5, "enough_reps"), 8u);
  EXPECT_EQ(first(t5, "coset"), 13u);
  EXPECT_EQ(first(t5, "simple_coset"), 72u);
  EXPECT_EQ(first(t5, "combined"), 13u);
  for (unsigned r = 13; r <= 71; ++r) EXPECT_TRUE(ineq_coset(5, r).holds());
  EXPECT_FALSE(ineq_coset(5, 12).holds());
  auto t4 = scan_thresholds(4, 60);
  EXPECT_EQ(first(t4, "coset"), 22u);
  EXPECT_EQ(first(t4, "irred_count"), 9u);
  auto t3 = scan_thresholds(3, 80);
  EXPECT_EQ(first(t3, "irred_count"), 12u);
  EXPECT_EQ(first(t3, "enough_reps"), 12u);
  EXPECT_EQ(first(t3, "coset"), 49u);
}

TEST(Thresholds, BinaryFieldCosetBoundEventuallyHolds) {
  // Below 206 neither coset bound holds; from there on the sharper one does.
  EXPECT_FALSE(ineq_coset(2, 205).holds());
  for (unsigned r = 206; r <= 230; ++r) EXPECT_TRUE(ineq_coset(2, r).holds()) << r;
  // r = 2 is the trivial 2 > sqrt(2); false from 3 on.
  EXPECT_TRUE(ineq_simple_coset(2, 2).holds());
  for (unsigned r = 3; r <= 512; ++r) EXPECT_FALSE(ineq_simple_coset(2, r).holds()) << r;
}

TEST(Sandwich, IrreducibleCountBounds) {
  for (u64 q : prime_powers_in(2, 64))
    for (unsigned k = 1; k <= 12; ++k) {
      auto s = irreducible_count_sandwich(q, k);
      EXPECT_TRUE(s.lower && s.upper) << q << "," << k;
    }
}

TEST(Thresholds, CsvShape) {
  std::ostringstream os;
  write_threshold_csv(os, scan_thresholds(2, 20));
  const std::string out = os.str();
  EXPECT_EQ(out.substr(0, out.find('\n')), "q,ineq_id,first_true_r,never_true_up_to");
  EXPECT_NE(out.find("2,simple_coset,,20"), std::string::npos);
}
