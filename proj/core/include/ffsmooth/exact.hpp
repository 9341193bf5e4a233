// Exact sign decisions for sums of rational multiples of q^(a/20).
#pragma once

#include <string>
#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include "ffsmooth/arith.hpp"

namespace ffsmooth {

using BigRational = boost::multiprecision::cpp_rational;
using Float200 = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<200>>;

/// c * q^(a/20)
struct PowerTerm {
  BigRational c;
  long long a = 0;
};

/// lhs > rhs where both sides are finite sums of PowerTerms in a fixed
/// prime power q.
///
/// Writing q = p^n, every term is a rational multiple of beta^s with
/// beta = p^(1/20) and 0 <= s < 20.  X^20 - p is Eisenstein, so the
/// difference is zero iff each of the 20 rational coefficients vanishes;
/// otherwise its sign is found by bracketing beta between dyadic
/// rationals of growing precision.
class ExactComparison {
 public:
  ExactComparison() = default;
  explicit ExactComparison(u64 q);

  u64 q() const noexcept { return q_; }

  ExactComparison& add_lhs(BigRational c, long long a20);
  ExactComparison& add_rhs(BigRational c, long long a20);

  const std::vector<PowerTerm>& lhs() const noexcept { return lhs_; }
  const std::vector<PowerTerm>& rhs() const noexcept { return rhs_; }

  /// Sign of lhs - rhs.
  int sign() const;
  /// lhs > rhs
  bool holds() const { return sign() > 0; }

  /// 200-bit floating evaluations; a sanity oracle, never the decider.
  Float200 lhs_approx() const;
  Float200 rhs_approx() const;

 private:
  u64 q_ = 0;
  u64 p_ = 0;
  unsigned n_ = 0;
  std::vector<PowerTerm> lhs_, rhs_;
};

/// Sign of sum_s coeff[s] * p^(s/20) for 20 rational coefficients.
int sign_of_radical_sum(u64 p, const std::vector<BigRational>& coeff);

}  // namespace ffsmooth
