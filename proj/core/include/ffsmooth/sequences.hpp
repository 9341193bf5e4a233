// Recursive generators of irreducible polynomials: the plus-1 sequence
// (next term is the least new monic irreducible dividing h + 1 for a divisor
// h of the running product N) and the h + N/h generator with its branching
// exploration.
#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ffsmooth/factor.hpp"

namespace ffsmooth {

/// I-order index and its inverse.
inline BigInt poly_index(const Poly& f) { return f.index(); }
inline Poly index_to_poly(const gf::FieldPtr& field, const BigInt& i) { return Poly::from_index(field, i); }

struct Plus1Step {
  Poly term;
  Poly h;         // divisor of N (up to a unit) with term | h + 1
  Poly h_plus_1;  // never zero
};

struct Plus1Sequence {
  gf::FieldPtr field;
  std::vector<Poly> terms;
  /// steps[i] produced terms[i + 1].
  std::vector<Plus1Step> steps;
  /// Terms whose successor came earlier in I-order.
  std::vector<std::size_t> out_of_order;
};

/// Default ceiling on candidate degree for plus1_next.
inline constexpr int kPlus1DegreeCeiling = 12;

/// Least monic irreducible g (I-order) with g not dividing N and g | h + 1,
/// h + 1 != 0, for some h = c * m, m a monic divisor of N.  N is the
/// product of `terms` (distinct monic irreducibles).  nullopt when no g of
/// degree <= max_degree qualifies.
std::optional<Plus1Step> plus1_next(const gf::FieldPtr& field, const std::vector<Poly>& terms,
                                    int max_degree = kPlus1DegreeCeiling);

/// Terms starting from [X]; `count` terms in total.  Throws when a step
/// finds no candidate below the ceiling.
Plus1Sequence plus1_sequence(const gf::FieldPtr& field, std::size_t count, int max_degree = kPlus1DegreeCeiling);

struct EuclidCandidate {
  Poly g;      // monic irreducible
  Poly h;      // witnessing divisor of N
  Poly value;  // h + N/h, divisible by g
};

enum class DivisorUnits {
  /// h = c m for every unit c and monic m | N.
  All,
  /// h monic.
  MonicOnly,
};

/// Largest number of divisors h euclid_candidates will try.
inline constexpr u64 kEuclidDivisorLimit = u64{1} << 22;

/// Monic irreducibles dividing h + N/h for some divisor h of
/// N = n_unit * product of `terms` (a multiset of monic irreducibles), one
/// witness each, I-order.
std::vector<EuclidCandidate> euclid_candidates(const gf::FieldPtr& field, const std::vector<Poly>& terms,
                                               DivisorUnits units = DivisorUnits::All, gf::Elem n_unit = 1);

/// Every step appends the I-order-least candidate not already a term.
enum class ChoicePolicy {
  /// Record only the appended candidate.
  Min,
  /// Record every new candidate of the step.
  All,
};

struct EuclidStep {
  Poly appended;
  std::vector<EuclidCandidate> candidates;
};

struct EuclidSequence {
  gf::FieldPtr field;
  std::vector<Poly> terms;
  std::vector<EuclidStep> steps;
};

/// "deg1": all monic linear polynomials; "x": [X].
std::vector<Poly> euclid_seed(const gf::FieldPtr& field, std::string_view name);
EuclidSequence euclid_sequence(const gf::FieldPtr& field, std::vector<Poly> seed, std::size_t steps, ChoicePolicy policy);

struct ExploreOptions {
  /// Terms are irreducibles with any leading coefficient: each candidate is
  /// appended as each of its q - 1 associates and N keeps the product of
  /// the leading coefficients.  Off: terms are monic.
  bool associates = true;
  /// A candidate already among the terms may be appended again.
  bool allow_repeats = true;
  /// The seed counts toward depth (depth = total sequence length).
  bool depth_includes_seed = true;
  DivisorUnits units = DivisorUnits::All;
  /// Visit candidates in reverse I-order.
  bool reverse_order = false;
  /// gzip branch log, one line "id: t1,t2,..." per complete sequence.
  std::optional<std::filesystem::path> branch_log;
};

struct ExploreResult {
  BigInt sequences = 0;
  unsigned max_degree_one = 0;
  /// sequences by number of degree-1 terms
  std::map<unsigned, BigInt> degree_one_histogram;
  u64 distinct_states = 0;
  /// Some candidate was already a term (only possible with allow_repeats).
  bool repeat_seen = false;
};

/// Counts every sequence of the requested length extending the seed, where
/// each step appends any candidate.
ExploreResult explore(const gf::FieldPtr& field, const std::vector<Poly>& seed, unsigned depth,
                      const ExploreOptions& options);

inline constexpr unsigned kExploreDepthLimit = 9;

/// Starting from every monic linear polynomial, tries to make the degree-2
/// irreducible F a candidate: directly, or after appending one candidate P
/// with chi(P) = -1 for the quadratic character mod F.  Returns the appended
/// terms (possibly empty), or nullopt.
std::optional<std::vector<Poly>> guided_reach(const gf::FieldPtr& field, const Poly& F);

}  // namespace ffsmooth
