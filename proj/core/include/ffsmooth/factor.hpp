// Irreducibility, square-freeness, smoothness and complete factorization in
// F_q[X].
#pragma once

#include <utility>
#include <vector>

#include "ffsmooth/poly.hpp"

namespace ffsmooth {

/// unit * prod(factor^multiplicity); factors monic irreducible, pairwise
/// distinct, sorted in I-order.
struct Factorization {
  gf::FFElement unit;
  std::vector<std::pair<Poly, unsigned>> factors;

  Poly expand() const;
  int max_degree() const;
  bool all_simple() const;
};

/// Rabin's test.  Degree-0 polynomials are units, not irreducible.
bool is_irreducible(const Poly& f);
/// Trial division by every monic polynomial of degree <= deg f / 2.
bool is_irreducible_trial(const Poly& f);

bool is_squarefree(const Poly& f);
int mobius_q(const Poly& f);

/// Square-free decomposition, distinct-degree split, then Cantor-Zassenhaus
/// equal-degree split with a fixed seed.
Factorization factor(const Poly& f);
/// Repeated division by the I-order-first nontrivial monic divisor.
Factorization factor_trial(const Poly& f);

/// No irreducible factor of degree above k.  Constants are k-smooth.
bool is_smooth(const Poly& f, int k);

/// Square-free and k-smooth in one pass; the verifier's candidate test.
bool is_squarefree_smooth(const gf::Field& F, const Coeffs& f, int k);
inline bool is_squarefree_smooth(const Poly& f, int k) { return is_squarefree_smooth(f.field(), f.coeffs(), k); }

/// Monic irreducibles of degree exactly k in I-order.
std::vector<Poly> enumerate_irreducible_monic(const gf::FieldPtr& field, int k);

/// Monic irreducibles of degree 1 .. k_max, by degree then I-order.
std::vector<Poly> irreducibles_up_to(const gf::FieldPtr& field, int k_max);

namespace dense {
/// (factor, degree) pairs of a monic square-free input; degrees ascending.
std::vector<std::pair<Coeffs, int>> distinct_degree(const gf::Field& F, Coeffs f);
/// Splits a monic square-free product of degree-d irreducibles.
std::vector<Coeffs> equal_degree(const gf::Field& F, const Coeffs& f, int d);
/// (part, multiplicity) of a monic input; parts square-free and coprime.
std::vector<std::pair<Coeffs, unsigned>> squarefree_decomposition(const gf::Field& F, const Coeffs& f);
}  // namespace dense

}  // namespace ffsmooth
