#include "ffsmooth/counts.hpp"

#include <stdexcept>

namespace ffsmooth {

BigInt count_irreducible(u64 q, unsigned k) {
  if (k < 1) throw std::invalid_argument("count_irreducible: k must be >= 1");
  BigInt s = 0;
  for (u64 d : divisors(k)) s += mobius(d) * big_pow(q, static_cast<unsigned>(k / d));
  return (q - 1) * s / k;
}

BigInt count_squarefree_exact(u64 q, unsigned m) {
  if (m < 2) throw std::invalid_argument("count_squarefree_exact: m must be >= 2");
  return (q - 1) * (big_pow(q, m) - big_pow(q, m - 1));
}

BigInt count_squarefree_below(u64 q, unsigned m) {
  if (m < 2) throw std::invalid_argument("count_squarefree_below: m must be >= 2");
  return (q - 1) * big_pow(q, m - 1);
}

BigInt count_irreducible_below(u64 q, unsigned r) {
  BigInt s = 0;
  for (unsigned k = 1; k < r; ++k) s += count_irreducible(q, k);
  return s;
}

}  // namespace ffsmooth
