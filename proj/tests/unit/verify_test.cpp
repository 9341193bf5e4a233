#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <random>

#include "ffsmooth/factor.hpp"
#include "ffsmooth/verify.hpp"

using namespace ffsmooth;

namespace {

Poly P(const gf::FieldPtr& F, const char* s) { return parse_poly(F, s); }

bool suitable_by_factoring(const Poly& h, int r) {
  if (h.degree() < 1) return false;
  auto fz = factor(h);
  return fz.all_simple() && fz.max_degree() <= r - 1;
}

// Smallest degree of a suitable h = a (mod F), by enumerating every
// polynomial of each degree; -1 if none up to max_degree.
int brute_min_degree(const ResidueRing& R, const Poly& a, int max_degree) {
  const auto& F = R.base();
  for (int D = 1; D <= max_degree; ++D)
    for (const Poly& m : enumerate_monic(F, D))
      for (gf::Elem c = 1; c < F->q(); ++c) {
        const Poly h = m.scaled(c);
        if (((h - a) % R.modulus()).is_zero() && suitable_by_factoring(h, R.degree())) return D;
      }
  return -1;
}

// Up to per_pair evenly spaced moduli for every (q, r), r >= 2, q^r <= size_limit.
std::vector<RingPtr> rings_up_to(u64 size_limit, std::size_t per_pair) {
  std::vector<RingPtr> out;
  for (u64 q : prime_powers_in(2, std::min<u64>(size_limit, 128))) {
    auto F = gf::make_field_of_order(q);
    for (unsigned r = 2; big_pow(q, r) <= size_limit; ++r) {
      auto irr = enumerate_irreducible_monic(F, static_cast<int>(r));
      const std::size_t take = std::min(per_pair, irr.size());
      for (std::size_t i = 0; i < take; ++i) out.push_back(make_ring(irr[i * (irr.size() / take)]));
    }
  }
  return out;
}

}  // namespace

TEST(Scan, KnownNonexistence) {
  auto F2 = gf::make_field(2, 1);
  for (const char* m : {"X^3+X+1", "X^3+X^2+1"}) {
    auto R = make_ring(P(F2, m));
    EXPECT_FALSE(suitable_rep_scan(*R, P(F2, "1")).rep) << m;
  }
}

TEST(Scan, IrreducibleLinearIsItsOwnRepresentative) {
  for (u64 q : {2, 3, 7, 8}) {
    auto F = gf::make_field_of_order(q);
    auto R = make_ring(enumerate_irreducible_monic(F, 3).front());
    EXPECT_EQ(suitable_rep_scan(*R, Poly::x(F)).rep, Poly::x(F));
  }
}

TEST(Scan, WithinCap) {
  auto F7 = gf::make_field(7, 1);
  auto R = make_ring(P(F7, "X^2+1"));
  auto out = suitable_rep_scan(*R, P(F7, "X+3"));
  ASSERT_TRUE(out.rep);
  EXPECT_LE(out.rep->degree(), static_cast<int>(scan_degree_cap(7, 2)));
  EXPECT_TRUE(is_suitable_representative(*R, P(F7, "X+3"), *out.rep));
}

TEST(Scan, RejectsBadClass) {
  auto F2 = gf::make_field(2, 1);
  auto R = make_ring(P(F2, "X^3+X+1"));
  EXPECT_THROW(suitable_rep_scan(*R, P(F2, "X^3")), std::invalid_argument);
  EXPECT_THROW(suitable_rep_scan(*R, Poly(F2)), std::invalid_argument);
  auto F3 = gf::make_field(3, 1);
  EXPECT_THROW(suitable_rep_scan(*R, P(F3, "2*X")), std::invalid_argument);
}

TEST(Scan, CapValues) {
  EXPECT_EQ(scan_degree_cap(2, 3), 4u);  // X, X+1, X^2+X+1
  EXPECT_EQ(scan_degree_cap(7, 2), 7u);
}

TEST(Reach, SmallQuadratic) {
  auto F2 = gf::make_field(2, 1);
  auto R = make_ring(P(F2, "X^2+X+1"));
  auto rep = reachability_verify(R);
  EXPECT_TRUE(rep.failures.empty());
  EXPECT_EQ(rep.classes_checked, 3u);
  // X (X+1) = X^2 + X = 1 mod X^2 + X + 1.
  ReachabilitySet set(R, true);
  EXPECT_EQ(set.witness(P(F2, "1")), P(F2, "X^2+X"));
}

TEST(Reach, CubicFailuresOverF2) {
  auto F2 = gf::make_field(2, 1);
  for (const char* m : {"X^3+X+1", "X^3+X^2+1"}) {
    auto rep = reachability_verify(make_ring(P(F2, m)));
    ASSERT_EQ(rep.failures.size(), 1u) << m;
    EXPECT_EQ(rep.failures[0], P(F2, "1"));
    EXPECT_EQ(rep.classes_checked, 7u);
  }
}

TEST(Reach, WitnessesAreDistinctIrreducibleProducts) {
  auto F3 = gf::make_field(3, 1);
  auto R = make_ring(enumerate_irreducible_monic(F3, 4).front());
  ReachabilitySet set(R, true);
  for (int t = 0; t < 4; ++t)
    for (const Poly& f : enumerate_monic(F3, t)) {
      auto w = set.witness(f);
      ASSERT_TRUE(w);
      EXPECT_TRUE(is_suitable_representative(*R, f, *w)) << f.to_string();
    }
}

TEST(Verify, ScanAndReachAgree) {
  std::mt19937_64 rng(5);
  std::size_t n = 0;
  for (const auto& R : rings_up_to(1 << 14, 2)) {
    if (R->size() > 4096 && rng() % 4) continue;
    auto rep = verify_theorem(R, VerifyOptions{Algorithm::Both, 1, true});
    EXPECT_TRUE(rep.algorithms_agree) << R->describe();
    ++n;
  }
  EXPECT_GE(n, 50u);
}

TEST(Verify, ScanDegreesAreMinimal) {
  for (const auto& R : rings_up_to(1 << 9, 1)) {
    auto rep = verify_theorem(R, VerifyOptions{Algorithm::Scan, 1, true});
    for (const auto& rec : rep.classes) {
      const int found = rec.rep ? rec.rep->degree() : -1;
      const int limit = rec.rep ? found : std::min<int>(static_cast<int>(scan_degree_cap(R->q(), static_cast<unsigned>(R->degree()))), 7);
      const int brute = brute_min_degree(*R, rec.cls, limit);
      if (rec.rep)
        EXPECT_EQ(brute, found) << R->describe() << " class " << rec.cls.to_string();
      else
        EXPECT_EQ(brute, -1) << R->describe() << " class " << rec.cls.to_string();
    }
  }
}

TEST(Verify, UnitInvariance) {
  for (const auto& R : rings_up_to(125, 1)) {
    const int cap = static_cast<int>(scan_degree_cap(R->q(), static_cast<unsigned>(R->degree())));
    if (cap > 9) continue;
    for (u64 i = 1; i < R->size(); ++i) {
      const Poly a = R->residue(i);
      const bool base = brute_min_degree(*R, a, cap) >= 0;
      for (gf::Elem c = 2; c < R->q(); ++c)
        EXPECT_EQ(brute_min_degree(*R, a.scaled(c), cap) >= 0, base) << R->describe() << " " << a.to_string();
    }
  }
}

TEST(Verify, MBoundedByCap) {
  for (u64 q : {2, 3, 4, 5}) {
    auto F = gf::make_field_of_order(q);
    for (int r = 2; r <= 4; ++r)
      for (const Poly& m : enumerate_irreducible_monic(F, r)) {
        auto rep = verify_theorem(make_ring(m), VerifyOptions{Algorithm::Scan, 1, false});
        if (!rep.failures.empty()) continue;
        ASSERT_TRUE(rep.M);
        EXPECT_LE(*rep.M, static_cast<int>(scan_degree_cap(q, static_cast<unsigned>(r))));
      }
  }
}

TEST(Verify, SpotCheckLargeField) {
  auto F = gf::make_field_of_order(64);
  auto R = make_ring(enumerate_irreducible_monic(F, 2).front());
  auto rep = reachability_verify(R, false);
  EXPECT_TRUE(rep.failures.empty());
  EXPECT_EQ(rep.classes_checked, 65u);
}

TEST(Sweep, SmallFieldsAndResume) {
  const auto dir = std::filesystem::temp_directory_path() / "ffsmooth_sweep_test";
  std::filesystem::remove_all(dir);
  const std::vector<std::pair<u64, unsigned>> pairs{{2, 2}, {2, 3}, {2, 4}, {3, 2}, {3, 3}};
  SweepOptions opt;
  opt.cache_dir = dir;
  auto first = sweep(pairs, opt);
  EXPECT_EQ(first.cache_hits, 0u);
  ASSERT_EQ(first.failures().size(), 2u);
  // Drop some entries and corrupt one.
  std::size_t k = 0;
  for (const auto& e : std::filesystem::directory_iterator(dir)) {
    if (k % 2 == 0) std::filesystem::remove(e.path());
    ++k;
  }
  for (const auto& e : std::filesystem::directory_iterator(dir)) {
    std::ofstream(e.path()) << "{not json";
    break;
  }
  auto second = sweep(pairs, opt);
  EXPECT_GT(second.cache_hits, 0u);
  EXPECT_LT(second.cache_hits, second.rings);
  ASSERT_EQ(first.entries.size(), second.entries.size());
  for (std::size_t i = 0; i < first.entries.size(); ++i) {
    EXPECT_EQ(first.entries[i].F, second.entries[i].F);
    EXPECT_EQ(first.entries[i].failures, second.entries[i].failures);
  }
  std::filesystem::remove_all(dir);
}

TEST(Sweep, Presets) {
  EXPECT_EQ(sweep_preset("omega1").size(), 36u);
  EXPECT_EQ(sweep_preset("q5r5").size(), 16u);
  EXPECT_THROW(sweep_preset("nope"), std::invalid_argument);
}
