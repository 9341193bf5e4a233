#include "ffsmooth/exact.hpp"

#include <stdexcept>

namespace ffsmooth {

namespace {

constexpr long long kDen = 20;

// floor(x / y) for y > 0.
long long floor_div(long long x, long long y) {
  long long d = x / y;
  if (x % y != 0 && x < 0) --d;
  return d;
}

BigRational rational_pow(u64 p, long long k) {
  if (k >= 0) return BigRational(big_pow(p, static_cast<unsigned>(k)));
  return BigRational(BigInt(1), big_pow(p, static_cast<unsigned>(-k)));
}

Float200 approx(const std::vector<PowerTerm>& terms, u64 q) {
  Float200 sum = 0;
  const Float200 lq = boost::multiprecision::log(Float200(q));
  for (const auto& t : terms) {
    const Float200 c = Float200(boost::multiprecision::numerator(t.c)) / Float200(boost::multiprecision::denominator(t.c));
    sum += c * boost::multiprecision::exp(lq * Float200(t.a) / kDen);
  }
  return sum;
}

}  // namespace

ExactComparison::ExactComparison(u64 q) : q_(q) {
  auto pp = as_prime_power(q);
  if (!pp) throw std::invalid_argument("ExactComparison: q must be a prime power");
  p_ = pp->p;
  n_ = pp->n;
}

ExactComparison& ExactComparison::add_lhs(BigRational c, long long a20) {
  if (c != 0) lhs_.push_back({std::move(c), a20});
  return *this;
}

ExactComparison& ExactComparison::add_rhs(BigRational c, long long a20) {
  if (c != 0) rhs_.push_back({std::move(c), a20});
  return *this;
}

int ExactComparison::sign() const {
  std::vector<BigRational> coeff(kDen, 0);
  auto collect = [&](const std::vector<PowerTerm>& terms, int s) {
    for (const auto& t : terms) {
      // q^(a/20) = p^(n a / 20)
      const long long e = static_cast<long long>(n_) * t.a;
      const long long k = floor_div(e, kDen);
      const auto slot = static_cast<std::size_t>(e - k * kDen);
      coeff[slot] += s * t.c * rational_pow(p_, k);
    }
  };
  collect(lhs_, 1);
  collect(rhs_, -1);
  return sign_of_radical_sum(p_, coeff);
}

Float200 ExactComparison::lhs_approx() const { return approx(lhs_, q_); }
Float200 ExactComparison::rhs_approx() const { return approx(rhs_, q_); }

int sign_of_radical_sum(u64 p, const std::vector<BigRational>& coeff) {
  if (coeff.size() != kDen) throw std::invalid_argument("sign_of_radical_sum: expected 20 coefficients");
  bool any_irrational = false;
  for (std::size_t s = 1; s < coeff.size(); ++s) any_irrational |= coeff[s] != 0;
  if (!any_irrational) return coeff[0] > 0 ? 1 : (coeff[0] < 0 ? -1 : 0);
  // beta in [lo, lo + 2^-k], lo = floor(p^(1/20) 2^k) / 2^k.
  for (unsigned k = 64;; k *= 2) {
    const BigInt scale = BigInt(1) << k;
    const BigInt root = iroot(BigInt(p) * boost::multiprecision::pow(scale, kDen), kDen);
    const BigRational lo(root, scale), hi(root + 1, scale);
    BigRational low = coeff[0], high = coeff[0];
    BigRational plo = 1, phi = 1;
    for (std::size_t s = 1; s < coeff.size(); ++s) {
      plo *= lo;
      phi *= hi;
      if (coeff[s] > 0) {
        low += coeff[s] * plo;
        high += coeff[s] * phi;
      } else if (coeff[s] < 0) {
        low += coeff[s] * phi;
        high += coeff[s] * plo;
      }
    }
    if (low > 0) return 1;
    if (high < 0) return -1;
    if (k > (1u << 20)) throw std::runtime_error("sign_of_radical_sum: precision limit reached");
  }
}

}  // namespace ffsmooth
