#include <gtest/gtest.h>

#include <set>

#include "ffsmooth/factor.hpp"
#include "ffsmooth/residue.hpp"

using namespace ffsmooth;

namespace {

Poly P(const gf::FieldPtr& F, const char* s) { return parse_poly(F, s); }

u64 brute_order(const ResidueRing& R, const Poly& a) {
  Poly x = R.reduce(a);
  const Poly one = Poly::constant(R.base(), 1);
  u64 k = 1;
  while (!(x == one)) {
    x = R.mul(x, a);
    ++k;
  }
  return k;
}

// Rings used across tests: small enough for exhaustive checks.
std::vector<RingPtr> small_rings() {
  std::vector<RingPtr> out;
  for (u64 q : {2, 3, 4, 5, 7, 8, 9}) {
    auto F = gf::make_field_of_order(q);
    for (int r = 2; r <= 4; ++r) {
      if (checked_pow(q, static_cast<unsigned>(r)) > 5000) break;
      out.push_back(make_ring(enumerate_irreducible_monic(F, r).front()));
      out.push_back(make_ring(enumerate_irreducible_monic(F, r).back()));
    }
  }
  return out;
}

}  // namespace

TEST(Residue, SmallExamples) {
  auto F2 = gf::make_field(2, 1);
  auto R = make_ring(P(F2, "X^3 + X + 1"));
  EXPECT_EQ(R->group_order(), 7u);
  EXPECT_EQ(R->reduce(P(F2, "X^3")), P(F2, "X + 1"));
  EXPECT_EQ(R->generator(), P(F2, "X"));
  EXPECT_EQ(R->dlog(P(F2, "X + 1")), 3u);
  auto F7 = gf::make_field(7, 1);
  EXPECT_EQ(make_ring(P(F7, "X^2 + 1"))->group_order(), 48u);
}

TEST(Residue, RejectsReducibleModulus) {
  auto F = gf::make_field(2, 1);
  EXPECT_THROW(make_ring(P(F, "X^2 + 1")), std::invalid_argument);
  EXPECT_THROW(make_ring(P(F, "1")), std::invalid_argument);
}

TEST(Residue, NonMonicModulusIsNormalized) {
  auto F = gf::make_field(7, 1);
  auto R = make_ring(P(F, "3*X^2 + 3"));
  EXPECT_TRUE(R->was_normalized());
  EXPECT_EQ(R->modulus(), P(F, "X^2 + 1"));
}

TEST(Residue, GeneratorHasFullOrderAndIsFirst) {
  for (const auto& R : small_rings()) {
    const Poly& g = R->generator();
    EXPECT_EQ(brute_order(*R, g), R->group_order()) << R->describe();
    for (u64 i = 1; i < R->index_of(g.coeffs()); ++i)
      EXPECT_LT(brute_order(*R, R->residue(i)), R->group_order());
  }
}

TEST(Residue, DlogIsInverseOfExponentiation) {
  for (const auto& R : small_rings()) {
    Poly x = Poly::constant(R->base(), 1);
    std::set<u64> seen;
    for (u64 k = 0; k < R->group_order(); ++k) {
      EXPECT_EQ(R->dlog(x), k);
      seen.insert(R->index_of(x.coeffs()));
      x = R->mul(x, R->generator());
    }
    EXPECT_EQ(seen.size(), R->group_order());
    EXPECT_THROW(R->dlog(Poly(R->base())), std::domain_error);
  }
}

TEST(Residue, IndexArithmeticMatchesPolynomials) {
  for (const auto& R : small_rings()) {
    const u64 n = std::min<u64>(R->size(), 60);
    for (u64 a = 0; a < n; ++a)
      for (u64 b = 0; b < n; ++b) {
        const Poly pa = R->residue(a), pb = R->residue(b);
        EXPECT_EQ(R->residue(R->mul_index(a, b)), (pa * pb) % R->modulus());
        EXPECT_EQ(R->residue(R->add_index(a, b)), pa + pb);
      }
  }
}

TEST(Residue, BabyStepGiantStepBeyondTables) {
  auto F = gf::make_field(2, 1);
  // Degree 23 gives 2^23 residues, above the table limit.
  Poly Fm = enumerate_irreducible_monic(F, 2).front();
  Poly m = P(F, "X^23 + X^5 + 1");
  ASSERT_TRUE(is_irreducible(m));
  auto R = make_ring(m);
  const Poly a = P(F, "X^7 + X^3 + 1");
  const u64 k = R->dlog(a);
  EXPECT_EQ(R->pow(R->generator(), BigInt(k)), a);
  (void)Fm;
}

TEST(Residue, InverseMultiplies) {
  for (const auto& R : small_rings())
    for (u64 a = 1; a < std::min<u64>(R->size(), 200); ++a)
      EXPECT_EQ(R->mul(R->residue(a), R->inv(R->residue(a))), Poly::constant(R->base(), 1));
}

TEST(Characters, MonicHistogramMatchesEnumeration) {
  for (const auto& R : small_rings())
    for (int t = 0; t <= 4; ++t) {
      if (checked_pow(R->q(), static_cast<unsigned>(t)) > 3000) break;
      EXPECT_EQ(monic_residue_histogram(*R, t), monic_residue_histogram_enumerated(*R, t)) << R->describe() << t;
    }
}

TEST(Characters, OrthogonalityOverWholeGroup) {
  for (const auto& R : small_rings()) {
    const u64 n = R->group_order();
    std::vector<u64> hist(R->size(), 1);
    hist[0] = 0;
    for (u64 d = 2; d <= 12; ++d) {
      if (n % d) continue;
      for (u64 power = 1; power < d; ++power) {
        auto S = char_sum_from_histogram(make_character(R, d, power), hist);
        EXPECT_TRUE(S.vanishes_exactly()) << R->describe() << " d=" << d;
      }
    }
  }
}

TEST(Characters, MonicSumsObeyBound) {
  for (const auto& R : small_rings()) {
    const u64 n = R->group_order();
    for (u64 d : {2, 3, 4, 5, 7, 8}) {
      if (n % d) continue;
      for (u64 power = 1; power < d; ++power) {
        auto chi = make_character(R, d, power);
        for (int t = 1; t < R->degree() + 2; ++t) {
          auto rep = char_sum_monic(chi, t);
          EXPECT_TRUE(rep.within_bounds) << R->describe() << " d=" << d << " t=" << t << " |S|=" << rep.abs;
          // t >= r: the sum runs over whole residue classes equally, so it vanishes.
          if (t >= R->degree()) EXPECT_TRUE(rep.exact.vanishes_exactly());
        }
      }
    }
  }
}

TEST(Characters, SquarefreeSumsObeyBound) {
  for (const auto& R : small_rings()) {
    if (R->size() > 1000) continue;
    const u64 n = R->group_order();
    for (u64 d : {2, 3, 4}) {
      if (n % d) continue;
      auto chi = make_character(R, d);
      for (int m = 2; m <= R->degree(); ++m) {
        auto rep = char_sum_squarefree(chi, m);
        EXPECT_TRUE(rep.within_bounds) << R->describe() << " d=" << d << " m=" << m;
      }
    }
  }
}

TEST(Characters, PrincipalSumCountsTerms) {
  auto F = gf::make_field(3, 1);
  auto R = make_ring(enumerate_irreducible_monic(F, 3).front());
  auto chi = make_character(R, 2, 2);
  EXPECT_TRUE(chi.is_principal());
  for (int t = 1; t <= 2; ++t) {
    // Monic of degree t < r are never divisible by F.
    auto rep = char_sum_monic(chi, t);
    EXPECT_EQ(rep.exact.integer_value(), static_cast<long long>(checked_pow(3, static_cast<unsigned>(t))));
  }
}

TEST(Cosets, RepresentativesLieInTheirCosets) {
  for (const auto& R : small_rings()) {
    const u64 n = R->group_order();
    for (u64 d : {2, 3, 4, 6}) {
      if (n % d) continue;
      auto cs = find_coset_reps(*R, d, R->degree());
      for (u64 c = 0; c < d; ++c) {
        if (!cs.reps[c]) continue;
        EXPECT_EQ(R->dlog(*cs.reps[c]) % d, c);
        EXPECT_TRUE(is_squarefree(*cs.reps[c]));
        EXPECT_LT(cs.reps[c]->degree(), R->degree());
        // Membership agrees with the dlog congruence.
        EXPECT_EQ(subgroup_contains(*R, d, *cs.reps[c]), c == 0);
      }
    }
  }
}

TEST(Twist, SumWithinBound) {
  for (const auto& R : small_rings()) {
    if (R->q() % 2 == 0) continue;
    for (u64 i = 1; i < std::min<u64>(R->size(), 30); ++i) {
      auto ts = twist_sum(*R, R->residue(i));
      EXPECT_TRUE(ts.within_bound) << R->describe() << " N=" << i << " sum=" << ts.sum;
    }
  }
}
