#include "ffsmooth/arith.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace ffsmooth {

u64 mulmod(u64 a, u64 b, u64 m) {
  return static_cast<u64>(static_cast<unsigned __int128>(a) * b % m);
}

u64 powmod(u64 a, u64 e, u64 m) {
  u64 r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 sp : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % sp == 0) return n == sp;
  }
  u64 d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // These witnesses are sufficient for n < 3.3e24.
  for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

namespace {

u64 pollard_rho(u64 n) {
  if (n % 2 == 0) return 2;
  for (u64 c = 1;; ++c) {
    auto f = [&](u64 x) { return (mulmod(x, x, n) + c) % n; };
    u64 x = 2, y = 2, d = 1;
    while (d == 1) {
      x = f(x);
      y = f(f(y));
      d = std::gcd(x > y ? x - y : y - x, n);
    }
    if (d != n) return d;
  }
}

void split(u64 n, std::vector<u64>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    out.push_back(n);
    return;
  }
  u64 d = pollard_rho(n);
  split(d, out);
  split(n / d, out);
}

}  // namespace

IntFactorization factor_integer(u64 n) {
  if (n == 0) throw std::invalid_argument("factor_integer: zero has no factorization");
  std::vector<u64> primes;
  for (u64 p = 2; p < 1000 && p * p <= n; ++p) {
    while (n % p == 0) {
      primes.push_back(p);
      n /= p;
    }
  }
  split(n, primes);
  std::sort(primes.begin(), primes.end());
  IntFactorization out;
  for (u64 p : primes) {
    if (!out.empty() && out.back().first == p)
      ++out.back().second;
    else
      out.emplace_back(p, 1);
  }
  return out;
}

std::vector<u64> divisors(const IntFactorization& f) {
  std::vector<u64> ds{1};
  for (auto [p, e] : f) {
    const std::size_t base = ds.size();
    u64 pk = 1;
    for (unsigned i = 1; i <= e; ++i) {
      pk *= p;
      for (std::size_t j = 0; j < base; ++j) ds.push_back(ds[j] * pk);
    }
  }
  std::sort(ds.begin(), ds.end());
  return ds;
}

std::vector<u64> divisors(u64 n) { return divisors(factor_integer(n)); }

int mobius(u64 n) {
  if (n == 1) return 1;
  int sign = 1;
  for (auto [p, e] : factor_integer(n)) {
    if (e > 1) return 0;
    sign = -sign;
  }
  return sign;
}

std::optional<PrimePower> as_prime_power(u64 q) {
  if (q < 2) return std::nullopt;
  auto f = factor_integer(q);
  if (f.size() != 1) return std::nullopt;
  return PrimePower{f[0].first, f[0].second};
}

bool is_prime_power(u64 q) { return as_prime_power(q).has_value(); }

std::vector<u64> prime_powers_in(u64 lo, u64 hi) {
  std::vector<u64> out;
  for (u64 q = std::max<u64>(lo, 2); q <= hi; ++q)
    if (is_prime_power(q)) out.push_back(q);
  return out;
}

u64 checked_pow(u64 b, unsigned e) {
  u64 r = 1;
  for (unsigned i = 0; i < e; ++i) {
    if (b != 0 && r > UINT64_MAX / b) throw std::overflow_error("checked_pow: result exceeds 64 bits");
    r *= b;
  }
  return r;
}

BigInt big_pow(u64 b, unsigned e) { return boost::multiprecision::pow(BigInt(b), e); }

BigInt iroot(const BigInt& n, unsigned k) {
  if (n < 0) throw std::domain_error("iroot: negative radicand");
  if (k == 1 || n < 2) return n;
  // Bisection on [0, 2^(bits/k + 1)].
  const unsigned bits = static_cast<unsigned>(boost::multiprecision::msb(n)) + 1;
  BigInt lo = 0;
  BigInt hi = BigInt(1) << (bits / k + 1);
  while (lo < hi) {
    BigInt mid = (lo + hi + 1) >> 1;
    if (boost::multiprecision::pow(mid, k) <= n)
      lo = mid;
    else
      hi = mid - 1;
  }
  return lo;
}

BigInt binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  BigInt r = 1;
  for (unsigned i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

}  // namespace ffsmooth
