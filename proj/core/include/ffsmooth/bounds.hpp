// Classification of (q, r) pairs and exact evaluation of the inequalities
// that drive the existence proof, individually and over grids.
#pragma once

#include <array>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "ffsmooth/exact.hpp"

namespace ffsmooth {

enum class OmegaRegion { Omega0, Omega1, OutOfDomain };

struct OmegaClass {
  OmegaRegion region = OmegaRegion::OutOfDomain;
  bool omega0_prime = false;         // base cases of the irreducible-count induction
  bool omega0_double_prime = false;  // pairs handled by the sharper coset inequality
  /// "Omega0", "Omega0'", "Omega0''", "Omega0',Omega0''", "Omega1" or "OutOfDomain".
  std::string label() const;
};

/// Smallest r with (q, r) in Omega0, q >= 7.
unsigned omega0_min_r(u64 q);

/// Throws std::invalid_argument when q is not a prime power.
OmegaClass omega_classify(u64 q, unsigned r);

/// Omega1 computed from the definition, sorted by (q, r).
std::vector<std::pair<u64, unsigned>> omega1_pairs();
/// Omega0' with q < 64 (the remaining members are (q, 2), q >= 64).
std::vector<std::pair<u64, unsigned>> omega0_prime_pairs_below_64();
std::vector<std::pair<u64, unsigned>> omega0_double_prime_pairs();

enum class Inequality { IrredCount, Coset, SimpleCoset, EnoughReps };
inline constexpr std::array<Inequality, 4> kAllInequalities{Inequality::IrredCount, Inequality::Coset, Inequality::SimpleCoset,
                                                            Inequality::EnoughReps};
/// "irred_count", "coset", "simple_coset", "enough_reps".
std::string inequality_id(Inequality which);
std::optional<Inequality> parse_inequality_id(std::string_view id);

/// sum_{k<r} pi_q(k) > q^r/r + 2 q^(r/2 + 11/20) + (q-1) r^3 + 3
ExactComparison ineq_irred_count(u64 q, unsigned r);
/// q^(r-1) > (r-1) sum_{k<=(r-2)/2} q^k sum_{t=1}^{r-2k-1} q^(t/2) min(q^(t/2), C(r-1,t))
ExactComparison ineq_coset(u64 q, unsigned r);
/// q^(r-1) > (r-1)(r/2) q^((r-1)/2) (2^(r-1) - 1)
ExactComparison ineq_simple_coset(u64 q, unsigned r);
/// q^(-r/2 + 11/20) (q^r/r + 2 q^(r/2 + 11/20) + 3) - 4r(q-1) - 1 > 0
ExactComparison ineq_enough_reps(u64 q, unsigned r);
ExactComparison inequality(Inequality which, u64 q, unsigned r);

/// (q^k - 2 q^(k/2))/k <= pi_q(k)/(q-1) <= q^k/k, each side decided exactly.
struct Sandwich {
  bool lower = false;
  bool upper = false;
};
Sandwich irreducible_count_sandwich(u64 q, unsigned k);
/// Same test applied to a supplied count (unit multiples included).
Sandwich irreducible_count_sandwich(u64 q, unsigned k, const BigInt& count);

/// Irred-count and enough-reps, and coset or simple-coset.
bool combined_criterion(u64 q, unsigned r);

struct ThresholdRow {
  u64 q = 0;
  std::string id;            // an inequality id or "combined"
  unsigned r_min = 2;
  std::vector<bool> truth;   // truth[i] is the verdict at r = r_min + i
  /// Start of the final all-true run, if the last verdict is true.
  std::optional<unsigned> first_true_r;
  unsigned never_true_up_to = 0;  // r_max when first_true_r is empty, else 0
};

/// One row per inequality plus "combined", r in [2, r_max].
std::vector<ThresholdRow> scan_thresholds(u64 q, unsigned r_max);

/// q,ineq_id,first_true_r,never_true_up_to
void write_threshold_csv(std::ostream& out, const std::vector<ThresholdRow>& rows);

}  // namespace ffsmooth
