#include "ffsmooth/poly.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <stdexcept>

namespace ffsmooth {

namespace dense {

Coeffs add(const gf::Field& F, const Coeffs& a, const Coeffs& b) {
  const Coeffs& lo = a.size() < b.size() ? a : b;
  Coeffs r = a.size() < b.size() ? b : a;
  for (std::size_t i = 0; i < lo.size(); ++i) r[i] = F.add(r[i], lo[i]);
  trim(r);
  return r;
}

Coeffs sub(const gf::Field& F, const Coeffs& a, const Coeffs& b) {
  Coeffs r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    const gf::Elem x = i < a.size() ? a[i] : gf::Elem(0);
    const gf::Elem y = i < b.size() ? b[i] : gf::Elem(0);
    r[i] = F.sub(x, y);
  }
  trim(r);
  return r;
}

Coeffs mul(const gf::Field& F, const Coeffs& a, const Coeffs& b) {
  if (a.empty() || b.empty()) return {};
  Coeffs r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
  }
  trim(r);
  return r;
}

Coeffs scale(const gf::Field& F, const Coeffs& a, gf::Elem c) {
  if (c == 0) return {};
  Coeffs r(a);
  for (auto& x : r) x = F.mul(x, c);
  return r;
}

void rem_inplace(const gf::Field& F, Coeffs& a, const Coeffs& m) {
  if (m.empty()) throw std::domain_error("polynomial division by zero");
  const std::size_t dm = m.size() - 1;
  if (a.size() <= dm) return;
  const gf::Elem inv_lead = F.inv(m.back());
  for (std::size_t top = a.size(); top-- > dm;) {
    const gf::Elem c = inv_lead == 1 ? a[top] : F.mul(a[top], inv_lead);
    if (c == 0) continue;
    const std::size_t shift = top - dm;
    for (std::size_t i = 0; i < dm; ++i) a[shift + i] = F.sub(a[shift + i], F.mul(c, m[i]));
    a[top] = 0;
  }
  a.resize(dm);
  trim(a);
}

Coeffs rem(const gf::Field& F, Coeffs a, const Coeffs& m) {
  rem_inplace(F, a, m);
  return a;
}

void divmod(const gf::Field& F, const Coeffs& a, const Coeffs& m, Coeffs& quo, Coeffs& r) {
  if (m.empty()) throw std::domain_error("polynomial division by zero");
  r = a;
  const std::size_t dm = m.size() - 1;
  if (r.size() <= dm) {
    quo.clear();
    return;
  }
  quo.assign(r.size() - dm, 0);
  const gf::Elem inv_lead = F.inv(m.back());
  for (std::size_t top = r.size(); top-- > dm;) {
    const gf::Elem c = F.mul(r[top], inv_lead);
    if (c == 0) continue;
    const std::size_t shift = top - dm;
    quo[shift] = c;
    for (std::size_t i = 0; i < dm; ++i) r[shift + i] = F.sub(r[shift + i], F.mul(c, m[i]));
    r[top] = 0;
  }
  r.resize(dm);
  trim(r);
  trim(quo);
}

Coeffs make_monic(const gf::Field& F, Coeffs a) {
  if (a.empty() || a.back() == 1) return a;
  const gf::Elem inv = F.inv(a.back());
  for (auto& x : a) x = F.mul(x, inv);
  return a;
}

Coeffs gcd(const gf::Field& F, Coeffs a, Coeffs b) {
  while (!b.empty()) {
    rem_inplace(F, a, b);
    std::swap(a, b);
  }
  return make_monic(F, std::move(a));
}

Coeffs derivative(const gf::Field& F, const Coeffs& a) {
  if (a.size() <= 1) return {};
  Coeffs r(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = F.mul(a[i], F.from_int(static_cast<long long>(i % F.p())));
  trim(r);
  return r;
}

Coeffs mulmod(const gf::Field& F, const Coeffs& a, const Coeffs& b, const Coeffs& m) {
  Coeffs r = mul(F, a, b);
  rem_inplace(F, r, m);
  return r;
}

Coeffs powmod(const gf::Field& F, Coeffs base, u64 e, const Coeffs& m) {
  rem_inplace(F, base, m);
  Coeffs r{1};
  rem_inplace(F, r, m);
  while (e) {
    if (e & 1) r = mulmod(F, r, base, m);
    e >>= 1;
    if (e) base = mulmod(F, base, base, m);
  }
  return r;
}

Coeffs powmod(const gf::Field& F, Coeffs base, const BigInt& e, const Coeffs& m) {
  if (e < 0) throw std::domain_error("powmod: negative exponent");
  rem_inplace(F, base, m);
  Coeffs r{1};
  rem_inplace(F, r, m);
  const unsigned bits = e == 0 ? 0 : static_cast<unsigned>(boost::multiprecision::msb(e)) + 1;
  for (unsigned i = bits; i-- > 0;) {
    r = mulmod(F, r, r, m);
    if (boost::multiprecision::bit_test(e, i)) r = mulmod(F, r, base, m);
  }
  return r;
}

bool is_one(const Coeffs& a) { return a.size() == 1 && a[0] == 1; }

}  // namespace dense

Poly::Poly(gf::FieldPtr field) : field_(std::move(field)) {
  if (!field_) throw std::invalid_argument("Poly: null field");
}

Poly::Poly(gf::FieldPtr field, Coeffs coeffs) : field_(std::move(field)), c_(std::move(coeffs)) {
  if (!field_) throw std::invalid_argument("Poly: null field");
  for (auto x : c_)
    if (!field_->contains(x)) throw std::invalid_argument("Poly: coefficient out of range");
  dense::trim(c_);
}

Poly Poly::constant(gf::FieldPtr field, gf::Elem c) { return Poly(std::move(field), Coeffs{c}); }
Poly Poly::x(gf::FieldPtr field) { return Poly(std::move(field), Coeffs{0, 1}); }

Poly Poly::monomial(gf::FieldPtr field, gf::Elem c, unsigned degree) {
  Coeffs v(degree + 1, 0);
  v[degree] = c;
  return Poly(std::move(field), std::move(v));
}

Poly Poly::from_index(gf::FieldPtr field, const BigInt& i) {
  if (i < 0) throw std::invalid_argument("Poly::from_index: negative index");
  Coeffs v;
  BigInt x = i;
  const u64 q = field->q();
  while (x > 0) {
    v.push_back(static_cast<gf::Elem>(static_cast<u64>(x % q)));
    x /= q;
  }
  return Poly(std::move(field), std::move(v));
}

Poly Poly::from_index(gf::FieldPtr field, u64 i) {
  Coeffs v;
  const u64 q = field->q();
  while (i > 0) {
    v.push_back(static_cast<gf::Elem>(i % q));
    i /= q;
  }
  return Poly(std::move(field), std::move(v));
}

Poly Poly::monic() const {
  if (is_zero()) throw std::domain_error("Poly::monic: zero polynomial");
  return Poly(field_, dense::make_monic(*field_, c_));
}

Poly Poly::scaled(gf::Elem c) const { return Poly(field_, dense::scale(*field_, c_, c)); }

gf::Elem Poly::eval(gf::Elem x) const {
  gf::Elem r = 0;
  for (std::size_t i = c_.size(); i-- > 0;) r = field_->add(field_->mul(r, x), c_[i]);
  return r;
}

BigInt Poly::index() const {
  BigInt r = 0;
  for (std::size_t i = c_.size(); i-- > 0;) r = r * field_->q() + c_[i];
  return r;
}

u64 Poly::index64() const {
  const u64 q = field_->q();
  u64 r = 0;
  for (std::size_t i = c_.size(); i-- > 0;) {
    if (r > (UINT64_MAX - c_[i]) / q) throw std::overflow_error("Poly::index64: index exceeds 64 bits");
    r = r * q + c_[i];
  }
  return r;
}

std::string Poly::to_string() const {
  if (c_.empty()) return "0";
  std::string s;
  for (std::size_t i = c_.size(); i-- > 0;) {
    if (c_[i] == 0) continue;
    if (!s.empty()) s += " + ";
    if (i == 0) {
      s += field_->format(c_[i]);
      continue;
    }
    if (c_[i] != 1) s += field_->format(c_[i]) + "*";
    s += "X";
    if (i > 1) s += "^" + std::to_string(i);
  }
  return s;
}

void Poly::check_same_field(const Poly& o) const {
  if (field_ != o.field_ && !field_->same_as(*o.field_)) throw std::invalid_argument("Poly: mixed-field operands");
}

Poly Poly::operator+(const Poly& o) const {
  check_same_field(o);
  return Poly(field_, dense::add(*field_, c_, o.c_));
}
Poly Poly::operator-(const Poly& o) const {
  check_same_field(o);
  return Poly(field_, dense::sub(*field_, c_, o.c_));
}
Poly Poly::operator*(const Poly& o) const {
  check_same_field(o);
  return Poly(field_, dense::mul(*field_, c_, o.c_));
}
Poly Poly::operator-() const { return Poly(field_, dense::sub(*field_, {}, c_)); }

bool Poly::operator==(const Poly& o) const {
  return c_ == o.c_ && (field_ == o.field_ || field_->same_as(*o.field_));
}

DivMod divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw std::domain_error("divmod: division by zero polynomial");
  if (!a.field().same_as(b.field())) throw std::invalid_argument("divmod: mixed-field operands");
  Coeffs q, r;
  dense::divmod(a.field(), a.coeffs(), b.coeffs(), q, r);
  return {Poly(a.field_ptr(), std::move(q)), Poly(a.field_ptr(), std::move(r))};
}

Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).remainder; }
Poly operator/(const Poly& a, const Poly& b) { return divmod(a, b).quotient; }

Poly gcd(const Poly& a, const Poly& b) {
  if (!a.field().same_as(b.field())) throw std::invalid_argument("gcd: mixed-field operands");
  return Poly(a.field_ptr(), dense::gcd(a.field(), a.coeffs(), b.coeffs()));
}

Poly derivative(const Poly& f) { return Poly(f.field_ptr(), dense::derivative(f.field(), f.coeffs())); }

Poly powmod(const Poly& base, const BigInt& e, const Poly& m) {
  if (m.is_zero()) throw std::domain_error("powmod: zero modulus");
  return Poly(base.field_ptr(), dense::powmod(base.field(), base.coeffs(), e, m.coeffs()));
}

bool order_less(const Poly& a, const Poly& b) {
  const auto& x = a.coeffs();
  const auto& y = b.coeffs();
  if (x.size() != y.size()) return x.size() < y.size();
  for (std::size_t i = x.size(); i-- > 0;)
    if (x[i] != y[i]) return x[i] < y[i];
  return false;
}

namespace {

class PolyParser {
 public:
  PolyParser(const gf::FieldPtr& field, std::string_view text) : field_(field), text_(text) {}

  Poly parse() {
    Coeffs acc;
    skip_ws();
    if (at_end()) fail("empty input");
    bool first = true;
    while (true) {
      skip_ws();
      bool negate = false;
      if (!first) {
        if (at_end()) break;
        if (peek() == '+') {
          ++pos_;
        } else if (peek() == '-') {
          negate = true;
          ++pos_;
        } else {
          fail("expected '+' or '-'");
        }
        skip_ws();
      } else if (peek() == '-') {
        negate = true;
        ++pos_;
        skip_ws();
      }
      first = false;
      auto [c, d] = term();
      if (negate) c = field_->neg(c);
      if (acc.size() <= d) acc.resize(d + 1, 0);
      acc[d] = field_->add(acc[d], c);
    }
    return Poly(field_, std::move(acc));
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("parse_poly: " + what + " at position " + std::to_string(pos_) + " in '" +
                                std::string(text_) + "'");
  }

  gf::Elem coefficient() {
    const std::size_t start = pos_;
    if (peek() == '[') {
      while (!at_end() && peek() != ']') ++pos_;
      if (at_end()) fail("unterminated coefficient list");
      ++pos_;
    } else {
      while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    }
    try {
      return field_->parse_element(text_.substr(start, pos_ - start));
    } catch (const std::invalid_argument& e) {
      fail(e.what());
    }
  }

  unsigned exponent() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    unsigned v = 0;
    auto [ptr, ec] = std::from_chars(text_.data() + start, text_.data() + pos_, v);
    if (ec != std::errc{} || start == pos_) fail("bad exponent");
    if (v > 1u << 20) fail("exponent too large");
    return v;
  }

  std::pair<gf::Elem, std::size_t> term() {
    if (at_end()) fail("expected a term");
    gf::Elem c = 1;
    bool have_coeff = false;
    if (peek() == '[' || std::isdigit(static_cast<unsigned char>(peek()))) {
      c = coefficient();
      have_coeff = true;
      skip_ws();
      if (!at_end() && peek() == '*') {
        ++pos_;
        skip_ws();
      } else if (at_end() || (peek() != 'X' && peek() != 'x')) {
        return {c, 0};
      }
    }
    if (at_end() || (peek() != 'X' && peek() != 'x')) {
      if (have_coeff) fail("expected 'X' after '*'");
      fail("expected a coefficient or 'X'");
    }
    ++pos_;
    skip_ws();
    std::size_t d = 1;
    if (!at_end() && peek() == '^') {
      ++pos_;
      skip_ws();
      d = exponent();
    }
    return {c, d};
  }

  const gf::FieldPtr& field_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(const gf::FieldPtr& field, std::string_view text) { return PolyParser(field, text).parse(); }

Poly monic_at(const gf::FieldPtr& field, int t, u64 i) {
  if (t < 0) throw std::invalid_argument("monic_at: negative degree");
  Coeffs v(static_cast<std::size_t>(t) + 1, 0);
  const u64 q = field->q();
  for (int k = 0; k < t; ++k) {
    v[k] = static_cast<gf::Elem>(i % q);
    i /= q;
  }
  if (i != 0) throw std::out_of_range("monic_at: index out of range");
  v[t] = 1;
  return Poly(field, std::move(v));
}

std::vector<Poly> enumerate_monic(const gf::FieldPtr& field, int t) {
  if (t < 0) throw std::invalid_argument("enumerate_monic: negative degree");
  const u64 count = checked_pow(field->q(), static_cast<unsigned>(t));
  std::vector<Poly> out;
  out.reserve(count);
  for (u64 i = 0; i < count; ++i) out.push_back(monic_at(field, t, i));
  return out;
}

}  // namespace ffsmooth
