// The residue field F_q[X]/(F) = F_{q^r}: arithmetic, discrete logarithms,
// multiplicative characters, index-d subgroups and character sums.
//
// Residues are polynomials of degree < r.  Hot paths address them by their
// I-order index (coefficients read base q), an integer in [0, q^r).
#pragma once

#include <complex>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "ffsmooth/poly.hpp"

namespace ffsmooth {

/// Full discrete-log tables are used up to this many residues; beyond it
/// dlog() falls back to baby-step giant-step.
inline constexpr u64 kDlogTableLimit = u64{1} << 20;
/// Hard cap for explicitly requested tables (reachability verifier).
inline constexpr u64 kDlogTableHardLimit = u64{1} << 28;
inline constexpr u32 kNoLog = UINT32_MAX;

class ResidueRing {
 public:
  /// Use make_ring.
  ResidueRing(Poly modulus, bool normalized);

  const gf::FieldPtr& base() const noexcept { return modulus_.field_ptr(); }
  const gf::Field& field() const noexcept { return modulus_.field(); }
  const Poly& modulus() const noexcept { return modulus_; }
  int degree() const noexcept { return r_; }
  u64 q() const noexcept { return field().q(); }
  /// q^r
  u64 size() const noexcept { return size_; }
  /// q^r - 1
  u64 group_order() const noexcept { return size_ - 1; }
  const IntFactorization& group_order_factors() const noexcept { return order_factors_; }
  /// True when make_ring had to rescale a non-monic modulus.
  bool was_normalized() const noexcept { return normalized_; }

  Poly reduce(const Poly& a) const;
  Poly mul(const Poly& a, const Poly& b) const;
  Poly inv(const Poly& a) const;
  Poly pow(const Poly& a, const BigInt& e) const;

  u64 index_of(const Coeffs& reduced) const noexcept;
  Coeffs coeffs_of(u64 index) const;
  Poly residue(u64 index) const { return Poly(base(), coeffs_of(index)); }
  u64 reduce_index(const Poly& a) const { return index_of(dense::rem(field(), a.coeffs(), modulus_.coeffs())); }
  u64 mul_index(u64 a, u64 b) const;
  u64 add_index(u64 a, u64 b) const noexcept;

  /// Canonically-first residue of multiplicative order q^r - 1.
  const Poly& generator() const;
  u64 generator_index() const { return index_of(generator().coeffs()); }

  /// g^k = a for the canonical generator g; a nonzero.
  u64 dlog(const Poly& a) const;
  u64 dlog_index(u64 a) const;
  /// dlog table by residue index (kNoLog at index 0), and its inverse.
  const std::vector<u32>& dlog_table() const;
  const std::vector<u32>& exp_table() const;

  /// Short textual tag "q=..;F=..".
  std::string describe() const;

 private:
  void build_tables() const;
  u64 bsgs(u64 a) const;

  Poly modulus_;
  int r_;
  u64 size_;
  IntFactorization order_factors_;
  bool normalized_;

  mutable std::once_flag gen_once_;
  mutable std::optional<Poly> generator_;
  mutable std::once_flag table_once_;
  mutable std::vector<u32> dlog_;
  mutable std::vector<u32> exp_;
};

using RingPtr = std::shared_ptr<const ResidueRing>;

/// Validates irreducibility; a non-monic F is rescaled to monic (a warning is
/// written to stderr and was_normalized() is set).
RingPtr make_ring(const Poly& F);

/// Canonically-first generator, same as ring.generator().
Poly find_ring_generator(const ResidueRing& ring);

/// chi(g^k) = zeta_d^(power * k) for the ring's canonical generator g.
/// The order of chi is d / gcd(d, power); power = 1 gives order exactly d.
struct Character {
  RingPtr ring;
  u64 d = 1;
  u64 power = 1;

  /// Exponent of zeta_d, or nullopt when F divides f.
  std::optional<u64> exponent(const Poly& f) const;
  std::optional<u64> exponent_index(u64 residue_index) const;
  std::complex<double> eval(const Poly& f) const;
  bool is_principal() const noexcept { return (power % d) == 0; }
};

Character make_character(RingPtr ring, u64 d, u64 power = 1);

/// Exact character sum: counts[k] terms take the value zeta_d^k.
struct ExactCharSum {
  u64 d = 1;
  std::vector<u64> counts;

  std::complex<double> value() const;
  /// Decided exactly: Phi_d divides sum_k counts[k] X^k.
  bool vanishes_exactly() const;
  /// Exact integer value for d <= 2.
  long long integer_value() const;
};

struct CharSumReport {
  u64 d = 1;
  int length = 0;  // t for monic sums, m for square-free sums
  ExactCharSum exact;
  std::complex<double> sum;
  double abs = 0;
  double bound_lemma = 0;  // monic: q^(t/2) C(r-1,t); square-free: the corollary bound
  double bound_eq21 = 0;   // square-free only: the min-form bound
  bool within_bounds = false;
  bool principal = false;
};

inline constexpr double kMagnitudeSlack = 1e-9;

/// Histogram over residue indices of f mod F for f in A_t (monic, degree t).
std::vector<u64> monic_residue_histogram(const ResidueRing& ring, int t);
/// Same, by explicit enumeration of A_t (oracle; q^t must be small).
std::vector<u64> monic_residue_histogram_enumerated(const ResidueRing& ring, int t);
/// Histogram of f mod F over square-free f with 1 <= deg f < m, all leading coefficients.
std::vector<u64> squarefree_residue_histogram(const ResidueRing& ring, int m);

ExactCharSum char_sum_from_histogram(const Character& chi, const std::vector<u64>& hist);

double monic_sum_bound(u64 q, int r, int t);
double squarefree_sum_bound_corollary(u64 q, int r, int m);
double squarefree_sum_bound_min(u64 q, int r, int m);

CharSumReport char_sum_monic(const Character& chi, int t);
CharSumReport char_sum_squarefree(const Character& chi, int m);
CharSumReport char_sum_monic(const Character& chi, int t, const std::vector<u64>& hist);
CharSumReport char_sum_squarefree(const Character& chi, int m, const std::vector<u64>& hist);

/// h in H_{d,F}, i.e. h^((q^r-1)/d) = 1.
bool subgroup_contains(const ResidueRing& ring, u64 d, const Poly& h);

/// For each coset c (dlog mod d) of H_{d,F}: the I-order-first square-free f
/// with 1 <= deg f < degree_bound in that coset, or nullopt.
struct CosetSearch {
  u64 d = 1;
  int degree_bound = 0;
  std::vector<std::optional<Poly>> reps;

  bool complete() const;
  std::size_t found() const;
};

CosetSearch find_coset_reps(const ResidueRing& ring, u64 d, int degree_bound);

struct TwistSum {
  long long sum = 0;
  /// sum^2 <= 4 q^r
  bool within_bound = false;
};

/// Sum over nonzero y of chi_2(y (y^2 + N)), chi_2 the quadratic character.
TwistSum twist_sum(const ResidueRing& ring, const Poly& N);

}  // namespace ffsmooth
