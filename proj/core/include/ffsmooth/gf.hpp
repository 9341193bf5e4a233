// Finite fields F_q, q = p^n, with table-driven arithmetic.
//
// An element is stored as its canonical index: the coefficient vector
// (c_0, ..., c_{n-1}) of its residue in F_p[Y]/(modulus) read as the base-p
// integer c_0 + c_1 p + ... + c_{n-1} p^{n-1}.  Index 0 is zero and index 1 is
// one, and ascending index order is the canonical enumeration order that the
// polynomial I-order is built on.
#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ffsmooth/arith.hpp"

namespace ffsmooth::gf {

using Elem = std::uint16_t;

/// Arithmetic tables are q*q entries each; larger fields are rejected.
inline constexpr u64 kMaxFieldOrder = 1024;

class Field {
 public:
  Field(u64 p, unsigned n, std::vector<u32> modulus);

  u64 p() const noexcept { return p_; }
  unsigned n() const noexcept { return n_; }
  u64 q() const noexcept { return q_; }
  /// Monic modulus over F_p, low degree first, length n + 1.  Empty for n = 1.
  const std::vector<u32>& modulus() const noexcept { return modulus_; }

  Elem add(Elem a, Elem b) const noexcept { return add_[idx(a, b)]; }
  Elem sub(Elem a, Elem b) const noexcept { return add_[idx(a, neg_[b])]; }
  Elem mul(Elem a, Elem b) const noexcept { return mul_[idx(a, b)]; }
  Elem neg(Elem a) const noexcept { return neg_[a]; }
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, u64 e) const noexcept;
  Elem pow(Elem a, const BigInt& e) const;
  /// The unique b with b^p = a.
  Elem pth_root(Elem a) const noexcept { return pow(a, q_ / p_); }
  /// Image of an integer under Z -> F_p -> F_q.
  Elem from_int(long long v) const noexcept;

  bool contains(u64 v) const noexcept { return v < q_; }

  std::vector<u32> coeffs(Elem a) const;
  Elem from_coeffs(std::span<const u32> c) const;

  /// "q=p^n;modulus=[m_0,...,m_n]" with an empty list for prime fields.
  std::string describe() const;
  /// Integer for prime fields, "[c_0,...,c_{n-1}]" for extension fields.
  std::string format(Elem a) const;
  Elem parse_element(std::string_view text) const;

  bool same_as(const Field& other) const noexcept {
    return p_ == other.p_ && n_ == other.n_ && modulus_ == other.modulus_;
  }

 private:
  std::size_t idx(Elem a, Elem b) const noexcept { return static_cast<std::size_t>(a) * q_ + b; }

  u64 p_;
  unsigned n_;
  u64 q_;
  std::vector<u32> modulus_;
  std::vector<Elem> add_;
  std::vector<Elem> mul_;
  std::vector<Elem> neg_;
  std::vector<Elem> inv_;
};

using FieldPtr = std::shared_ptr<const Field>;

/// Validated construction.  Without a modulus and n > 1 the first monic
/// irreducible of degree n over F_p in I-order is used.
FieldPtr make_field(u64 p, unsigned n, std::optional<std::vector<u32>> modulus = std::nullopt);

/// Shortcut for make_field with q = p^n and the default modulus.
FieldPtr make_field_of_order(u64 q);

/// Inverse of Field::describe.
FieldPtr parse_field_description(std::string_view text);

/// Irreducibility of a polynomial over a prime field by trial division.
bool is_irreducible_over_prime_field(const std::vector<u32>& f, u64 p);

/// A field element bound to its field; arithmetic rejects mixed-field operands.
class FFElement {
 public:
  FFElement(FieldPtr field, Elem value);

  const FieldPtr& field() const noexcept { return field_; }
  Elem value() const noexcept { return value_; }
  bool is_zero() const noexcept { return value_ == 0; }
  std::vector<u32> coeffs() const { return field_->coeffs(value_); }
  std::string to_string() const { return field_->format(value_); }

  FFElement operator+(const FFElement& o) const;
  FFElement operator-(const FFElement& o) const;
  FFElement operator*(const FFElement& o) const;
  FFElement operator/(const FFElement& o) const;
  FFElement operator-() const { return {field_, field_->neg(value_)}; }
  FFElement inverse() const;
  FFElement pow(const BigInt& e) const;

  bool operator==(const FFElement& o) const;

 private:
  void check_same_field(const FFElement& o) const;

  FieldPtr field_;
  Elem value_;
};

/// All q elements in canonical order.
std::vector<FFElement> enumerate_field(const FieldPtr& field);

/// Canonically-first element of multiplicative order q - 1 (1 for F_2).
FFElement find_generator(const FieldPtr& field);

/// Multiplicative order of a nonzero element.
u64 element_order(const Field& field, Elem a);

}  // namespace ffsmooth::gf
