#include "ffsmooth/gf.hpp"

#include <charconv>
#include <sstream>
#include <stdexcept>

namespace ffsmooth::gf {

namespace {

using PPoly = std::vector<u32>;  // polynomial over F_p, low degree first

void trim(PPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

PPoly pmod(PPoly a, const PPoly& m, u64 p) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  const u64 inv_lead = powmod(m.back(), p - 2, p);
  while (a.size() > dm) {
    const u64 c = mulmod(a.back(), inv_lead, p);
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i)
      a[shift + i] = static_cast<u32>((a[shift + i] + p - mulmod(c, m[i], p)) % p);
    trim(a);
  }
  return a;
}

PPoly pmulmod(const PPoly& a, const PPoly& b, const PPoly& m, u64 p) {
  if (a.empty() || b.empty()) return {};
  PPoly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      c[i + j] = static_cast<u32>((c[i + j] + mulmod(a[i], b[j], p)) % p);
  return pmod(std::move(c), m, p);
}

PPoly decode(u64 v, u64 p, unsigned n) {
  PPoly c(n, 0);
  for (unsigned i = 0; i < n; ++i) {
    c[i] = static_cast<u32>(v % p);
    v /= p;
  }
  return c;
}

u64 encode(const PPoly& c, u64 p) {
  u64 v = 0;
  for (std::size_t i = c.size(); i-- > 0;) v = v * p + c[i];
  return v;
}

std::vector<u32> default_modulus(u64 p, unsigned n) {
  // Monic degree-n polynomials in I-order: index p^n + j, j ascending.
  const u64 count = checked_pow(p, n);
  for (u64 j = 0; j < count; ++j) {
    PPoly f = decode(j, p, n);
    f.push_back(1);
    if (is_irreducible_over_prime_field(f, p)) return f;
  }
  throw std::logic_error("default_modulus: no irreducible polynomial found");
}

}  // namespace

bool is_irreducible_over_prime_field(const std::vector<u32>& f_in, u64 p) {
  PPoly f = f_in;
  trim(f);
  if (f.size() < 2) return false;
  const unsigned deg = static_cast<unsigned>(f.size() - 1);
  if (deg == 1) return true;
  // Trial division by every monic polynomial of degree 1..deg/2.
  for (unsigned d = 1; d <= deg / 2; ++d) {
    const u64 count = checked_pow(p, d);
    for (u64 j = 0; j < count; ++j) {
      PPoly g = decode(j, p, d);
      g.push_back(1);
      if (pmod(f, g, p).empty()) return false;
    }
  }
  return true;
}

Field::Field(u64 p, unsigned n, std::vector<u32> modulus)
    : p_(p), n_(n), q_(checked_pow(p, n)), modulus_(std::move(modulus)) {
  const std::size_t qq = static_cast<std::size_t>(q_);
  add_.assign(qq * qq, 0);
  mul_.assign(qq * qq, 0);
  neg_.assign(qq, 0);
  inv_.assign(qq, 0);

  if (n_ == 1) {
    for (u64 a = 0; a < q_; ++a) {
      neg_[a] = static_cast<Elem>((p_ - a) % p_);
      for (u64 b = 0; b < q_; ++b) {
        add_[idx(Elem(a), Elem(b))] = static_cast<Elem>((a + b) % p_);
        mul_[idx(Elem(a), Elem(b))] = static_cast<Elem>(a * b % p_);
      }
    }
  } else {
    std::vector<PPoly> dec(qq);
    for (u64 a = 0; a < q_; ++a) dec[a] = decode(a, p_, n_);
    for (u64 a = 0; a < q_; ++a) {
      PPoly na(n_);
      for (unsigned i = 0; i < n_; ++i) na[i] = static_cast<u32>((p_ - dec[a][i]) % p_);
      neg_[a] = static_cast<Elem>(encode(na, p_));
      for (u64 b = 0; b < q_; ++b) {
        PPoly s(n_);
        for (unsigned i = 0; i < n_; ++i) s[i] = static_cast<u32>((dec[a][i] + dec[b][i]) % p_);
        add_[idx(Elem(a), Elem(b))] = static_cast<Elem>(encode(s, p_));
      }
    }
    // Multiplication through exp/log tables of a primitive element, found by
    // direct polynomial arithmetic modulo the defining polynomial.
    const u64 order = q_ - 1;
    const auto ell = factor_integer(order);
    auto slow_pow = [&](PPoly base, u64 e) {
      PPoly r{1};
      while (e) {
        if (e & 1) r = pmulmod(r, base, modulus_, p_);
        base = pmulmod(base, base, modulus_, p_);
        e >>= 1;
      }
      return r;
    };
    PPoly g;
    for (u64 cand = 2; cand < q_; ++cand) {
      PPoly c = dec[cand];
      trim(c);
      bool primitive = true;
      for (auto [l, e] : ell) {
        PPoly t = slow_pow(c, order / l);
        if (t.size() == 1 && t[0] == 1) {
          primitive = false;
          break;
        }
      }
      if (primitive) {
        g = c;
        break;
      }
    }
    if (g.empty()) throw std::logic_error("Field: no primitive element; modulus not irreducible?");
    std::vector<Elem> exp_t(order);
    std::vector<u64> log_t(qq, 0);
    PPoly cur{1};
    for (u64 k = 0; k < order; ++k) {
      PPoly full = cur;
      full.resize(n_, 0);
      const Elem v = static_cast<Elem>(encode(full, p_));
      exp_t[k] = v;
      log_t[v] = k;
      cur = pmulmod(cur, g, modulus_, p_);
    }
    for (u64 a = 1; a < q_; ++a)
      for (u64 b = 1; b < q_; ++b) mul_[idx(Elem(a), Elem(b))] = exp_t[(log_t[a] + log_t[b]) % order];
  }
  for (u64 a = 1; a < q_; ++a)
    for (u64 b = 1; b < q_; ++b)
      if (mul_[idx(Elem(a), Elem(b))] == 1) {
        inv_[a] = static_cast<Elem>(b);
        break;
      }
}

Elem Field::inv(Elem a) const {
  if (a == 0) throw std::domain_error("gf: inversion of zero");
  return inv_[a];
}

Elem Field::pow(Elem a, u64 e) const noexcept {
  Elem r = 1;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

Elem Field::pow(Elem a, const BigInt& e) const {
  if (e < 0) return pow(inv(a), BigInt(-e));
  if (a == 0) return e == 0 ? Elem(1) : Elem(0);
  return pow(a, static_cast<u64>(e % (q_ - 1)));
}

Elem Field::from_int(long long v) const noexcept {
  long long r = v % static_cast<long long>(p_);
  if (r < 0) r += static_cast<long long>(p_);
  return static_cast<Elem>(r);
}

std::vector<u32> Field::coeffs(Elem a) const { return decode(a, p_, n_); }

Elem Field::from_coeffs(std::span<const u32> c) const {
  if (c.size() > n_) throw std::invalid_argument("gf: coefficient vector longer than extension degree");
  PPoly v(c.begin(), c.end());
  for (auto& x : v) x = static_cast<u32>(x % p_);
  return static_cast<Elem>(encode(v, p_));
}

std::string Field::describe() const {
  std::ostringstream os;
  os << "q=" << p_ << '^' << n_ << ";modulus=[";
  for (std::size_t i = 0; i < modulus_.size(); ++i) os << (i ? "," : "") << modulus_[i];
  os << ']';
  return os.str();
}

std::string Field::format(Elem a) const {
  if (n_ == 1) return std::to_string(a);
  std::string s = "[";
  auto c = coeffs(a);
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(c[i]);
  }
  return s + ']';
}

namespace {

std::vector<u32> parse_u32_list(std::string_view t) {
  if (t.size() < 2 || t.front() != '[' || t.back() != ']')
    throw std::invalid_argument("expected a bracketed coefficient list, got '" + std::string(t) + "'");
  t = t.substr(1, t.size() - 2);
  std::vector<u32> out;
  while (!t.empty()) {
    const auto comma = t.find(',');
    std::string_view tok = t.substr(0, comma);
    u32 v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
      throw std::invalid_argument("bad coefficient '" + std::string(tok) + "'");
    out.push_back(v);
    if (comma == std::string_view::npos) break;
    t.remove_prefix(comma + 1);
  }
  return out;
}

}  // namespace

Elem Field::parse_element(std::string_view text) const {
  if (!text.empty() && text.front() == '[') {
    auto c = parse_u32_list(text);
    for (u32 x : c)
      if (x >= p_) throw std::invalid_argument("gf: coefficient out of range in '" + std::string(text) + "'");
    return from_coeffs(c);
  }
  long long v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty())
    throw std::invalid_argument("gf: cannot parse element '" + std::string(text) + "'");
  if (n_ == 1 && (v < 0 || static_cast<u64>(v) >= p_))
    throw std::invalid_argument("gf: element out of range '" + std::string(text) + "'");
  return from_int(v);
}

FieldPtr make_field(u64 p, unsigned n, std::optional<std::vector<u32>> modulus) {
  if (!is_prime(p)) throw std::invalid_argument("make_field: " + std::to_string(p) + " is not prime");
  if (n < 1) throw std::invalid_argument("make_field: extension degree must be >= 1");
  u64 q = 0;
  try {
    q = checked_pow(p, n);
  } catch (const std::overflow_error&) {
    q = kMaxFieldOrder + 1;
  }
  if (q > kMaxFieldOrder)
    throw std::invalid_argument("make_field: field order exceeds " + std::to_string(kMaxFieldOrder));
  std::vector<u32> m;
  if (n == 1) {
    if (modulus && !modulus->empty()) {
      PPoly mm = *modulus;
      trim(mm);
      if (mm.size() != 2 || mm[1] != 1) throw std::invalid_argument("make_field: modulus must be monic of degree 1");
    }
  } else if (modulus) {
    m = *modulus;
    for (auto& c : m)
      if (c >= p) throw std::invalid_argument("make_field: modulus coefficient out of range");
    trim(m);
    if (m.size() != n + 1) throw std::invalid_argument("make_field: modulus has wrong degree");
    if (m.back() != 1) throw std::invalid_argument("make_field: modulus is not monic");
    if (!is_irreducible_over_prime_field(m, p)) throw std::invalid_argument("make_field: modulus is reducible");
  } else {
    m = default_modulus(p, n);
  }
  return std::make_shared<const Field>(p, n, std::move(m));
}

FieldPtr make_field_of_order(u64 q) {
  auto pp = as_prime_power(q);
  if (!pp) throw std::invalid_argument("make_field_of_order: " + std::to_string(q) + " is not a prime power");
  return make_field(pp->p, pp->n);
}

FieldPtr parse_field_description(std::string_view text) {
  // q=p^n;modulus=[...]
  const auto semi = text.find(';');
  const auto caret = text.find('^');
  if (text.substr(0, 2) != "q=" || semi == std::string_view::npos || caret == std::string_view::npos || caret > semi ||
      text.substr(semi + 1, 8) != "modulus=")
    throw std::invalid_argument("parse_field_description: malformed '" + std::string(text) + "'");
  u64 p = 0;
  unsigned n = 0;
  auto sp = text.substr(2, caret - 2);
  auto sn = text.substr(caret + 1, semi - caret - 1);
  if (std::from_chars(sp.data(), sp.data() + sp.size(), p).ec != std::errc{} ||
      std::from_chars(sn.data(), sn.data() + sn.size(), n).ec != std::errc{})
    throw std::invalid_argument("parse_field_description: malformed '" + std::string(text) + "'");
  auto m = parse_u32_list(text.substr(semi + 9));
  if (n == 1) return make_field(p, 1);
  return make_field(p, n, m);
}

FFElement::FFElement(FieldPtr field, Elem value) : field_(std::move(field)), value_(value) {
  if (!field_) throw std::invalid_argument("FFElement: null field");
  if (!field_->contains(value)) throw std::invalid_argument("FFElement: value out of range");
}

void FFElement::check_same_field(const FFElement& o) const {
  if (field_ != o.field_ && !field_->same_as(*o.field_)) throw std::invalid_argument("FFElement: mixed-field operands");
}

FFElement FFElement::operator+(const FFElement& o) const {
  check_same_field(o);
  return {field_, field_->add(value_, o.value_)};
}
FFElement FFElement::operator-(const FFElement& o) const {
  check_same_field(o);
  return {field_, field_->sub(value_, o.value_)};
}
FFElement FFElement::operator*(const FFElement& o) const {
  check_same_field(o);
  return {field_, field_->mul(value_, o.value_)};
}
FFElement FFElement::operator/(const FFElement& o) const {
  check_same_field(o);
  return {field_, field_->div(value_, o.value_)};
}
FFElement FFElement::inverse() const { return {field_, field_->inv(value_)}; }
FFElement FFElement::pow(const BigInt& e) const { return {field_, field_->pow(value_, e)}; }

bool FFElement::operator==(const FFElement& o) const {
  return value_ == o.value_ && (field_ == o.field_ || field_->same_as(*o.field_));
}

std::vector<FFElement> enumerate_field(const FieldPtr& field) {
  std::vector<FFElement> out;
  out.reserve(field->q());
  for (u64 v = 0; v < field->q(); ++v) out.emplace_back(field, static_cast<Elem>(v));
  return out;
}

u64 element_order(const Field& field, Elem a) {
  if (a == 0) throw std::domain_error("element_order: zero has no multiplicative order");
  u64 order = field.q() - 1;
  for (auto [l, e] : factor_integer(order)) {
    for (unsigned i = 0; i < e && order % l == 0 && field.pow(a, order / l) == 1; ++i) order /= l;
  }
  return order;
}

FFElement find_generator(const FieldPtr& field) {
  const u64 q = field->q();
  if (q == 2) return {field, 1};
  const auto ell = factor_integer(q - 1);
  for (u64 v = 1; v < q; ++v) {
    const Elem g = static_cast<Elem>(v);
    bool ok = true;
    for (auto [l, e] : ell)
      if (field->pow(g, (q - 1) / l) == 1) {
        ok = false;
        break;
      }
    if (ok) return {field, g};
  }
  throw std::logic_error("find_generator: no generator found");
}

}  // namespace ffsmooth::gf
