// Dense univariate polynomials over F_q.
#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "ffsmooth/gf.hpp"

namespace ffsmooth {

using Coeffs = std::vector<gf::Elem>;

/// Kernels on raw coefficient vectors (low degree first, trimmed).  The Poly
/// class wraps these; hot loops elsewhere call them directly.
namespace dense {

inline void trim(Coeffs& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}
inline int deg(const Coeffs& a) { return static_cast<int>(a.size()) - 1; }

Coeffs add(const gf::Field& F, const Coeffs& a, const Coeffs& b);
Coeffs sub(const gf::Field& F, const Coeffs& a, const Coeffs& b);
Coeffs mul(const gf::Field& F, const Coeffs& a, const Coeffs& b);
Coeffs scale(const gf::Field& F, const Coeffs& a, gf::Elem c);
/// In place: a <- a mod m.  m nonzero.
void rem_inplace(const gf::Field& F, Coeffs& a, const Coeffs& m);
Coeffs rem(const gf::Field& F, Coeffs a, const Coeffs& m);
/// Quotient and remainder; m nonzero.
void divmod(const gf::Field& F, const Coeffs& a, const Coeffs& m, Coeffs& quo, Coeffs& rem);
Coeffs make_monic(const gf::Field& F, Coeffs a);
/// Monic gcd; gcd(0, 0) = 0.
Coeffs gcd(const gf::Field& F, Coeffs a, Coeffs b);
Coeffs derivative(const gf::Field& F, const Coeffs& a);
Coeffs mulmod(const gf::Field& F, const Coeffs& a, const Coeffs& b, const Coeffs& m);
Coeffs powmod(const gf::Field& F, Coeffs base, u64 e, const Coeffs& m);
Coeffs powmod(const gf::Field& F, Coeffs base, const BigInt& e, const Coeffs& m);
bool is_one(const Coeffs& a);

}  // namespace dense

inline constexpr int kDegreeOfZero = -1;

class Poly {
 public:
  explicit Poly(gf::FieldPtr field);
  Poly(gf::FieldPtr field, Coeffs coeffs);

  static Poly constant(gf::FieldPtr field, gf::Elem c);
  static Poly x(gf::FieldPtr field);
  static Poly monomial(gf::FieldPtr field, gf::Elem c, unsigned degree);
  /// Inverse of index(): coefficient digits of i in base q.
  static Poly from_index(gf::FieldPtr field, const BigInt& i);
  static Poly from_index(gf::FieldPtr field, u64 i);

  const gf::FieldPtr& field_ptr() const noexcept { return field_; }
  const gf::Field& field() const noexcept { return *field_; }
  const Coeffs& coeffs() const noexcept { return c_; }

  /// kDegreeOfZero for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  bool is_constant() const noexcept { return c_.size() <= 1; }
  bool is_monic() const noexcept { return !c_.empty() && c_.back() == 1; }
  gf::Elem lead() const noexcept { return c_.empty() ? gf::Elem(0) : c_.back(); }
  gf::Elem coeff(std::size_t i) const noexcept { return i < c_.size() ? c_[i] : gf::Elem(0); }

  Poly monic() const;
  Poly scaled(gf::Elem c) const;
  gf::Elem eval(gf::Elem x) const;

  /// I-order index: sum of coefficient indices times q^k.
  BigInt index() const;
  /// index() when it fits in 64 bits; throws otherwise.
  u64 index64() const;

  std::string to_string() const;

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly operator-() const;

  bool operator==(const Poly& o) const;

 private:
  void check_same_field(const Poly& o) const;

  gf::FieldPtr field_;
  Coeffs c_;
};

struct DivMod {
  Poly quotient;
  Poly remainder;
};

DivMod divmod(const Poly& a, const Poly& b);
Poly operator%(const Poly& a, const Poly& b);
Poly operator/(const Poly& a, const Poly& b);
Poly gcd(const Poly& a, const Poly& b);
Poly derivative(const Poly& f);
Poly powmod(const Poly& base, const BigInt& e, const Poly& m);

/// Strict total order induced by the I-order index.
bool order_less(const Poly& a, const Poly& b);
struct PolyOrderLess {
  bool operator()(const Poly& a, const Poly& b) const { return order_less(a, b); }
};

/// Textual form "c_d*X^d + ... + c_0"; coefficient 1 is omitted on
/// non-constant terms, extension-field coefficients are "[c_0,...]" lists.
Poly parse_poly(const gf::FieldPtr& field, std::string_view text);

/// All q^t monic polynomials of degree t, in I-order.
std::vector<Poly> enumerate_monic(const gf::FieldPtr& field, int t);
/// The i-th (0-based) monic polynomial of degree t in I-order.
Poly monic_at(const gf::FieldPtr& field, int t, u64 i);

}  // namespace ffsmooth
