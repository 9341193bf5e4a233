// Closed-form counts in F_q[X].  Every count includes all q - 1 unit
// multiples (non-monic polynomials are counted).
#pragma once

#include "ffsmooth/arith.hpp"

namespace ffsmooth {

/// Irreducible polynomials of degree exactly k: (q-1)/k * sum_{d|k} mu(d) q^(k/d).
BigInt count_irreducible(u64 q, unsigned k);

/// Square-free polynomials of degree exactly m >= 2: (q-1)(q^m - q^(m-1)).
BigInt count_squarefree_exact(u64 q, unsigned m);

/// Square-free polynomials with 1 <= degree < m, m >= 2: (q-1) q^(m-1).
BigInt count_squarefree_below(u64 q, unsigned m);

/// Sum of count_irreducible(q, k) over 1 <= k < r.
BigInt count_irreducible_below(u64 q, unsigned r);

}  // namespace ffsmooth
