#include "ffsmooth/factor.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <stdexcept>

namespace ffsmooth {

namespace {

void require_nonzero(const Poly& f, const char* who) {
  if (f.is_zero()) throw std::domain_error(std::string(who) + ": zero polynomial");
}

Coeffs x_coeffs() { return Coeffs{0, 1}; }

}  // namespace

namespace dense {

std::vector<std::pair<Coeffs, unsigned>> squarefree_decomposition(const gf::Field& F, const Coeffs& f) {
  std::vector<std::pair<Coeffs, unsigned>> out;
  if (f.size() <= 1) return out;
  const Coeffs df = derivative(F, f);
  Coeffs c = gcd(F, f, df);
  Coeffs w, tmp;
  divmod(F, f, c, w, tmp);
  unsigned i = 1;
  while (w.size() > 1) {
    Coeffs y = gcd(F, w, c);
    Coeffs z;
    divmod(F, w, y, z, tmp);
    if (z.size() > 1) out.emplace_back(make_monic(F, z), i);
    ++i;
    w = std::move(y);
    Coeffs nc;
    divmod(F, c, w, nc, tmp);
    c = std::move(nc);
  }
  if (c.size() > 1) {
    // c is a p-th power: take the root coefficient-wise and recurse.
    const u64 p = F.p();
    Coeffs root((c.size() - 1) / p + 1, 0);
    for (std::size_t k = 0; k < root.size(); ++k) root[k] = F.pth_root(c[k * p]);
    trim(root);
    for (auto& [part, m] : squarefree_decomposition(F, root)) out.emplace_back(std::move(part), m * static_cast<unsigned>(p));
  }
  return out;
}

std::vector<std::pair<Coeffs, int>> distinct_degree(const gf::Field& F, Coeffs f) {
  std::vector<std::pair<Coeffs, int>> out;
  Coeffs h = rem(F, x_coeffs(), f);
  for (int d = 1; deg(f) >= 2 * d; ++d) {
    h = powmod(F, h, F.q(), f);
    Coeffs g = gcd(F, f, sub(F, h, x_coeffs()));
    if (g.size() > 1) {
      Coeffs quo, r;
      divmod(F, f, g, quo, r);
      f = std::move(quo);
      out.emplace_back(std::move(g), d);
      rem_inplace(F, h, f);
    }
  }
  if (deg(f) > 0) {
    const int d = deg(f);
    out.emplace_back(std::move(f), d);
  }
  return out;
}

std::vector<Coeffs> equal_degree(const gf::Field& F, const Coeffs& f, int d) {
  std::vector<Coeffs> done;
  std::vector<Coeffs> todo{f};
  std::mt19937_64 rng(0x5eedf00dULL + static_cast<u64>(deg(f)) * 131 + static_cast<u64>(d));
  const u64 q = F.q();
  while (!todo.empty()) {
    Coeffs g = std::move(todo.back());
    todo.pop_back();
    if (deg(g) == d) {
      done.push_back(std::move(g));
      continue;
    }
    while (true) {
      Coeffs a(static_cast<std::size_t>(deg(g)), 0);
      for (auto& c : a) c = static_cast<gf::Elem>(rng() % q);
      trim(a);
      if (deg(a) < 1) continue;
      Coeffs b;
      if (q % 2 == 1) {
        // a^((q^d - 1)/2) = (a^(1 + q + ... + q^(d-1)))^((q-1)/2)
        Coeffs t = a, s = a;
        for (int i = 1; i < d; ++i) {
          t = powmod(F, t, q, g);
          s = mulmod(F, s, t, g);
        }
        b = sub(F, powmod(F, s, (q - 1) / 2, g), Coeffs{1});
      } else {
        // Absolute trace to F_2: sum of a^(2^i), i < n d.
        const unsigned m = F.n() * static_cast<unsigned>(d);
        Coeffs t = a;
        b = a;
        for (unsigned i = 1; i < m; ++i) {
          t = mulmod(F, t, t, g);
          b = add(F, b, t);
        }
      }
      Coeffs h = gcd(F, g, b);
      if (deg(h) > 0 && deg(h) < deg(g)) {
        Coeffs quo, r;
        divmod(F, g, h, quo, r);
        todo.push_back(std::move(h));
        todo.push_back(make_monic(F, std::move(quo)));
        break;
      }
    }
  }
  return done;
}

}  // namespace dense

Poly Factorization::expand() const {
  Poly r = Poly::constant(unit.field(), unit.value());
  for (const auto& [f, m] : factors)
    for (unsigned i = 0; i < m; ++i) r = r * f;
  return r;
}

int Factorization::max_degree() const {
  int m = 0;
  for (const auto& [f, e] : factors) m = std::max(m, f.degree());
  return m;
}

bool Factorization::all_simple() const {
  return std::all_of(factors.begin(), factors.end(), [](const auto& fe) { return fe.second == 1; });
}

bool is_irreducible(const Poly& f) {
  require_nonzero(f, "is_irreducible");
  const int n = f.degree();
  if (n < 1) return false;
  if (n == 1) return true;
  const gf::Field& F = f.field();
  const Coeffs m = dense::make_monic(F, f.coeffs());
  // powers[i] = X^(q^i) mod f
  std::vector<Coeffs> powers{dense::rem(F, x_coeffs(), m)};
  for (int i = 1; i <= n; ++i) powers.push_back(dense::powmod(F, powers.back(), F.q(), m));
  if (powers[n] != dense::rem(F, x_coeffs(), m)) return false;
  for (auto [l, e] : factor_integer(static_cast<u64>(n))) {
    const Coeffs g = dense::gcd(F, m, dense::sub(F, powers[n / l], x_coeffs()));
    if (!dense::is_one(g)) return false;
  }
  return true;
}

bool is_irreducible_trial(const Poly& f) {
  require_nonzero(f, "is_irreducible_trial");
  const int n = f.degree();
  if (n < 1) return false;
  const auto& field = f.field_ptr();
  for (int d = 1; d <= n / 2; ++d) {
    const u64 count = checked_pow(field->q(), static_cast<unsigned>(d));
    for (u64 i = 0; i < count; ++i)
      if ((f % monic_at(field, d, i)).is_zero()) return false;
  }
  return true;
}

bool is_squarefree(const Poly& f) {
  require_nonzero(f, "is_squarefree");
  if (f.degree() < 1) return true;
  const Poly df = derivative(f);
  if (df.is_zero()) return false;
  return gcd(f, df).degree() == 0;
}

int mobius_q(const Poly& f) {
  require_nonzero(f, "mobius_q");
  if (f.degree() < 1) return 1;
  if (!is_squarefree(f)) return 0;
  const gf::Field& F = f.field();
  std::size_t count = 0;
  for (const auto& [g, d] : dense::distinct_degree(F, dense::make_monic(F, f.coeffs())))
    count += static_cast<std::size_t>(dense::deg(g) / d);
  return count % 2 ? -1 : 1;
}

namespace {

Factorization assemble(const Poly& f, std::map<Coeffs, unsigned> parts) {
  Factorization out{gf::FFElement(f.field_ptr(), f.lead()), {}};
  for (auto& [c, m] : parts) out.factors.emplace_back(Poly(f.field_ptr(), c), m);
  std::sort(out.factors.begin(), out.factors.end(),
            [](const auto& a, const auto& b) { return order_less(a.first, b.first); });
  return out;
}

}  // namespace

Factorization factor(const Poly& f) {
  require_nonzero(f, "factor");
  const gf::Field& F = f.field();
  std::map<Coeffs, unsigned> parts;
  for (auto& [part, mult] : dense::squarefree_decomposition(F, dense::make_monic(F, f.coeffs()))) {
    for (auto& [g, d] : dense::distinct_degree(F, part)) {
      for (auto& h : dense::equal_degree(F, g, d)) parts[h] += mult;
    }
  }
  return assemble(f, std::move(parts));
}

Factorization factor_trial(const Poly& f) {
  require_nonzero(f, "factor_trial");
  const auto& field = f.field_ptr();
  std::map<Coeffs, unsigned> parts;
  Poly rest = f.monic();
  for (int d = 1; 2 * d <= rest.degree(); ++d) {
    const u64 count = checked_pow(field->q(), static_cast<unsigned>(d));
    for (u64 i = 0; i < count && 2 * d <= rest.degree(); ++i) {
      const Poly g = monic_at(field, d, i);
      while (true) {
        auto [quo, r] = divmod(rest, g);
        if (!r.is_zero()) break;
        parts[g.coeffs()] += 1;
        rest = quo;
      }
    }
  }
  if (rest.degree() > 0) parts[rest.coeffs()] += 1;
  return assemble(f, std::move(parts));
}

bool is_smooth(const Poly& f, int k) {
  require_nonzero(f, "is_smooth");
  if (k < 1) throw std::invalid_argument("is_smooth: k must be >= 1");
  if (f.degree() <= k) return true;
  const gf::Field& F = f.field();
  for (auto& [part, mult] : dense::squarefree_decomposition(F, dense::make_monic(F, f.coeffs()))) {
    if (dense::deg(part) <= k) continue;
    for (auto& [g, d] : dense::distinct_degree(F, part))
      if (d > k) return false;
  }
  return true;
}

bool is_squarefree_smooth(const gf::Field& F, const Coeffs& f_in, int k) {
  if (f_in.empty()) throw std::domain_error("is_squarefree_smooth: zero polynomial");
  if (dense::deg(f_in) < 1) return true;
  Coeffs f = dense::make_monic(F, f_in);
  const Coeffs df = dense::derivative(F, f);
  if (df.empty()) return false;
  if (!dense::is_one(dense::gcd(F, f, df))) return false;
  if (dense::deg(f) <= k) return true;
  const Coeffs x = x_coeffs();
  Coeffs h = dense::rem(F, x, f);
  for (int d = 1; d <= k; ++d) {
    if (dense::deg(f) < 2 * d) return dense::deg(f) <= k;
    h = dense::powmod(F, h, F.q(), f);
    Coeffs g = dense::gcd(F, f, dense::sub(F, h, x));
    if (g.size() > 1) {
      Coeffs quo, r;
      dense::divmod(F, f, g, quo, r);
      f = std::move(quo);
      if (dense::deg(f) < 1) return true;
      dense::rem_inplace(F, h, f);
    }
  }
  return dense::deg(f) < 1;
}

std::vector<Poly> enumerate_irreducible_monic(const gf::FieldPtr& field, int k) {
  if (k < 1) throw std::invalid_argument("enumerate_irreducible_monic: k must be >= 1");
  const u64 count = checked_pow(field->q(), static_cast<unsigned>(k));
  std::vector<Poly> out;
  for (u64 i = 0; i < count; ++i) {
    Poly g = monic_at(field, k, i);
    if (k == 1 || is_irreducible(g)) out.push_back(std::move(g));
  }
  return out;
}

std::vector<Poly> irreducibles_up_to(const gf::FieldPtr& field, int k_max) {
  std::vector<Poly> out;
  for (int k = 1; k <= k_max; ++k) {
    auto part = enumerate_irreducible_monic(field, k);
    out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  }
  return out;
}

}  // namespace ffsmooth
