// Integer helpers: primality, factorization of 64-bit integers, prime powers,
// and the arbitrary-precision integer type used for every cardinality.
#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace ffsmooth {

using BigInt = boost::multiprecision::cpp_int;
using u64 = std::uint64_t;
using u32 = std::uint32_t;

struct PrimePower {
  u64 p;
  unsigned n;
};

/// (prime, exponent) pairs in increasing prime order.
using IntFactorization = std::vector<std::pair<u64, unsigned>>;

u64 mulmod(u64 a, u64 b, u64 m);
u64 powmod(u64 a, u64 e, u64 m);

/// Deterministic Miller-Rabin, exact for all 64-bit inputs.
bool is_prime(u64 n);

/// Trial division followed by Pollard rho for the cofactor.
IntFactorization factor_integer(u64 n);

/// All positive divisors, ascending.
std::vector<u64> divisors(const IntFactorization& f);
std::vector<u64> divisors(u64 n);

/// Classical Moebius function.
int mobius(u64 n);

std::optional<PrimePower> as_prime_power(u64 q);
bool is_prime_power(u64 q);

/// All prime powers in [lo, hi].
std::vector<u64> prime_powers_in(u64 lo, u64 hi);

/// b^e, throwing std::overflow_error when the result leaves 64 bits.
u64 checked_pow(u64 b, unsigned e);

BigInt big_pow(u64 b, unsigned e);

/// floor(n^(1/k)) for n >= 0, k >= 1.
BigInt iroot(const BigInt& n, unsigned k);

BigInt binomial(unsigned n, unsigned k);

}  // namespace ffsmooth
