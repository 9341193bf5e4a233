// Small-scale construction of the objects used in the existence proof for
// large pairs: square-free coset representatives, the irreducibles S_F they
// use, the remaining count K, pair statistics w(s), the set A of
// well-represented residues, and k-fold product closures of A.
//
// Irreducible counts include every unit multiple: a monic irreducible
// contributes q - 1 polynomials to S_F or to K.
#pragma once

#include <optional>
#include <vector>

#include "ffsmooth/residue.hpp"

namespace ffsmooth {

/// Largest q^r the apparatus accepts.
inline constexpr u64 kApparatusLimit = u64{1} << 14;

struct ApparatusState {
  RingPtr ring;
  /// Coset representatives for every d | q^r - 1 with d < r.
  std::vector<CosetSearch> cosets;
  /// Every required coset has a representative.
  bool reps_complete = false;
  /// Monic irreducibles dividing some representative, I-order.
  std::vector<Poly> S_F_monic;
  /// #S_F with unit multiples: (q - 1) * S_F_monic.size().
  u64 S_F_size = 0;
  /// Irreducibles of degree < r, unit multiples included.
  u64 irreducible_total = 0;
  /// irreducible_total - S_F_size
  u64 K = 0;
  /// S_F_size < (q - 1) r^3
  bool S_F_bound_ok = false;
};

ApparatusState build_apparatus(const RingPtr& ring);

enum class PairConvention {
  /// Unordered pairs of distinct polynomials (associates allowed).
  Distinct,
  /// Unordered pairs, u = v allowed.
  WithRepeats,
};

struct PairStatistics {
  PairConvention convention = PairConvention::Distinct;
  /// w[k] for the residue g^k, k in [0, q^r - 1).
  std::vector<u64> w;
  u64 total = 0;
  u64 max = 0;
};

/// Pairs u, v of irreducibles of degree < r outside S_F with uv = s mod F.
PairStatistics w_statistics(const ApparatusState& state, PairConvention convention = PairConvention::Distinct);

struct ASet {
  /// Least integer W with W > K q^(-r/2 + 11/20), i.e. W^20 q^(10r) > K^20 q^11.
  u64 threshold = 0;
  /// Logs k with w[k] >= threshold.
  std::vector<u64> logs;
  u64 size() const noexcept { return logs.size(); }
  /// r A > q^r - 1 + 2r
  bool bound_ok = false;
  /// Membership under a double-precision threshold agrees.
  bool float_agrees = false;
};

ASet build_A_set(const ApparatusState& state, const PairStatistics& stats);

/// A^k as a set of logs (bitset over q^r - 1), k >= 1.
std::vector<bool> kfold_closure(const ApparatusState& state, const ASet& A, unsigned k);

struct ClosureHit {
  u64 d = 0;
  bool reps_found = false;
  /// Least k <= 2r + 1 with H_d contained in A^k.
  std::optional<unsigned> k;
};

/// For each d | q^r - 1, d < r.
std::vector<ClosureHit> closure_hits(const ApparatusState& state, const ASet& A);

}  // namespace ffsmooth
