#include "ffsmooth/residue.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <numbers>
#include <stdexcept>
#include <unordered_map>

#include "ffsmooth/factor.hpp"

namespace ffsmooth {

ResidueRing::ResidueRing(Poly modulus, bool normalized)
    : modulus_(std::move(modulus)),
      r_(modulus_.degree()),
      size_(checked_pow(modulus_.field().q(), static_cast<unsigned>(r_))),
      order_factors_(size_ > 1 ? factor_integer(size_ - 1) : IntFactorization{}),
      normalized_(normalized) {}

RingPtr make_ring(const Poly& F) {
  if (F.is_zero() || F.degree() < 1) throw std::invalid_argument("make_ring: modulus must have degree >= 1");
  bool normalized = false;
  Poly m = F;
  if (!F.is_monic()) {
    std::cerr << "warning: make_ring: normalizing non-monic modulus " << F.to_string() << " to monic\n";
    m = F.monic();
    normalized = true;
  }
  if (!is_irreducible(m)) throw std::invalid_argument("make_ring: modulus " + m.to_string() + " is reducible");
  return std::make_shared<const ResidueRing>(std::move(m), normalized);
}

Poly ResidueRing::reduce(const Poly& a) const { return a % modulus_; }
Poly ResidueRing::mul(const Poly& a, const Poly& b) const { return (a * b) % modulus_; }

Poly ResidueRing::inv(const Poly& a) const {
  const Poly ra = reduce(a);
  if (ra.is_zero()) throw std::domain_error("ResidueRing::inv: element is a multiple of the modulus");
  return pow(ra, BigInt(group_order() - 1));
}

Poly ResidueRing::pow(const Poly& a, const BigInt& e) const {
  if (e < 0) return pow(inv(a), BigInt(-e));
  return powmod(a, e, modulus_);
}

u64 ResidueRing::index_of(const Coeffs& reduced) const noexcept {
  const u64 q = field().q();
  u64 v = 0;
  for (std::size_t i = reduced.size(); i-- > 0;) v = v * q + reduced[i];
  return v;
}

Coeffs ResidueRing::coeffs_of(u64 index) const {
  if (index >= size_) throw std::out_of_range("ResidueRing::coeffs_of: index out of range");
  Coeffs c;
  const u64 q = field().q();
  while (index) {
    c.push_back(static_cast<gf::Elem>(index % q));
    index /= q;
  }
  return c;
}

u64 ResidueRing::mul_index(u64 a, u64 b) const {
  return index_of(dense::mulmod(field(), coeffs_of(a), coeffs_of(b), modulus_.coeffs()));
}

u64 ResidueRing::add_index(u64 a, u64 b) const noexcept {
  const gf::Field& F = field();
  const u64 q = F.q();
  u64 out = 0, scale = 1;
  while (a || b) {
    out += scale * F.add(static_cast<gf::Elem>(a % q), static_cast<gf::Elem>(b % q));
    a /= q;
    b /= q;
    scale *= q;
  }
  return out;
}

const Poly& ResidueRing::generator() const {
  std::call_once(gen_once_, [this] {
    const u64 n = group_order();
    if (n == 1) {
      generator_ = Poly::constant(base(), 1);
      return;
    }
    const gf::Field& F = field();
    for (u64 idx = 1; idx < size_; ++idx) {
      const Coeffs c = coeffs_of(idx);
      bool ok = true;
      for (auto [l, e] : order_factors_) {
        if (dense::is_one(dense::powmod(F, c, n / l, modulus_.coeffs()))) {
          ok = false;
          break;
        }
      }
      if (ok) {
        generator_ = Poly(base(), c);
        return;
      }
    }
    throw std::logic_error("ResidueRing: no generator found");
  });
  return *generator_;
}

void ResidueRing::build_tables() const {
  std::call_once(table_once_, [this] {
    if (size_ > kDlogTableHardLimit) throw std::length_error("ResidueRing: residue field too large for a log table");
    const gf::Field& F = field();
    const std::size_t r = static_cast<std::size_t>(r_);
    const Coeffs& g = generator().coeffs();
    // Columns of multiplication by g: g * X^j mod F, padded to length r.
    std::vector<Coeffs> cols(r);
    Coeffs xj{1};
    for (std::size_t j = 0; j < r; ++j) {
      cols[j] = dense::mulmod(F, g, xj, modulus_.coeffs());
      cols[j].resize(r, 0);
      xj.insert(xj.begin(), 0);
    }
    const u64 n = group_order();
    dlog_.assign(size_, kNoLog);
    exp_.assign(n, 0);
    Coeffs cur(r, 0), next(r, 0);
    cur[0] = 1;
    const u64 q = F.q();
    for (u64 k = 0; k < n; ++k) {
      u64 idx = 0;
      for (std::size_t i = r; i-- > 0;) idx = idx * q + cur[i];
      dlog_[idx] = static_cast<u32>(k);
      exp_[k] = static_cast<u32>(idx);
      std::fill(next.begin(), next.end(), gf::Elem(0));
      for (std::size_t j = 0; j < r; ++j) {
        const gf::Elem c = cur[j];
        if (c == 0) continue;
        const Coeffs& col = cols[j];
        for (std::size_t i = 0; i < r; ++i) next[i] = F.add(next[i], F.mul(c, col[i]));
      }
      std::swap(cur, next);
    }
  });
}

const std::vector<u32>& ResidueRing::dlog_table() const {
  build_tables();
  return dlog_;
}

const std::vector<u32>& ResidueRing::exp_table() const {
  build_tables();
  return exp_;
}

u64 ResidueRing::bsgs(u64 a) const {
  const u64 n = group_order();
  const u64 m = static_cast<u64>(std::ceil(std::sqrt(static_cast<long double>(n))));
  std::unordered_map<u64, u64> baby;
  baby.reserve(m * 2);
  const u64 g = generator_index();
  u64 cur = 1;
  for (u64 j = 0; j < m; ++j) {
    baby.emplace(cur, j);
    cur = mul_index(cur, g);
  }
  const u64 factor = index_of(dense::powmod(field(), generator().coeffs(), BigInt(n) - BigInt(m % n), modulus_.coeffs()));
  u64 gamma = a;
  for (u64 i = 0; i <= m; ++i) {
    auto it = baby.find(gamma);
    if (it != baby.end()) return (i * m + it->second) % n;
    gamma = mul_index(gamma, factor);
  }
  throw std::logic_error("ResidueRing::bsgs: logarithm not found");
}

u64 ResidueRing::dlog_index(u64 a) const {
  if (a == 0 || a >= size_) throw std::domain_error("ResidueRing::dlog: argument is zero or out of range");
  if (size_ <= kDlogTableLimit) return dlog_table()[a];
  return bsgs(a);
}

u64 ResidueRing::dlog(const Poly& a) const { return dlog_index(reduce_index(a)); }

std::string ResidueRing::describe() const { return field().describe() + ";F=" + modulus_.to_string(); }

Poly find_ring_generator(const ResidueRing& ring) { return ring.generator(); }

std::optional<u64> Character::exponent_index(u64 residue_index) const {
  if (residue_index == 0) return std::nullopt;
  const u64 k = ring->dlog_index(residue_index);
  return static_cast<u64>(static_cast<unsigned __int128>(k % d) * (power % d) % d);
}

std::optional<u64> Character::exponent(const Poly& f) const { return exponent_index(ring->reduce_index(f)); }

std::complex<double> Character::eval(const Poly& f) const {
  auto e = exponent(f);
  if (!e) return {0.0, 0.0};
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(*e) / static_cast<double>(d);
  return {std::cos(angle), std::sin(angle)};
}

Character make_character(RingPtr ring, u64 d, u64 power) {
  if (d == 0 || ring->group_order() % d != 0)
    throw std::invalid_argument("make_character: order " + std::to_string(d) + " does not divide q^r - 1");
  return Character{std::move(ring), d, power};
}

std::complex<double> ExactCharSum::value() const {
  long double re = 0, im = 0;
  for (u64 k = 0; k < counts.size(); ++k) {
    if (counts[k] == 0) continue;
    const long double angle = 2.0L * std::numbers::pi_v<long double> * static_cast<long double>(k) / static_cast<long double>(d);
    re += static_cast<long double>(counts[k]) * std::cos(angle);
    im += static_cast<long double>(counts[k]) * std::sin(angle);
  }
  return {static_cast<double>(re), static_cast<double>(im)};
}

long long ExactCharSum::integer_value() const {
  if (d == 1) return static_cast<long long>(counts[0]);
  if (d == 2) return static_cast<long long>(counts[0]) - static_cast<long long>(counts[1]);
  throw std::logic_error("ExactCharSum::integer_value: only defined for d <= 2");
}

namespace {

// Integer coefficients of the d-th cyclotomic polynomial, lowest degree first.
std::vector<BigInt> cyclotomic(u64 d) {
  std::vector<BigInt> num(d + 1, 0);  // X^d - 1
  num[0] = -1;
  num[d] = 1;
  for (u64 e = 1; e < d; ++e) {
    if (d % e) continue;
    const auto den = cyclotomic(e);
    // Exact division by the monic den.
    const std::size_t dd = den.size() - 1;
    std::vector<BigInt> quo(num.size() - dd, 0);
    for (std::size_t i = num.size(); i-- > dd;) {
      const BigInt c = num[i];
      quo[i - dd] = c;
      for (std::size_t j = 0; j <= dd; ++j) num[i - dd + j] -= c * den[j];
    }
    num = std::move(quo);
  }
  return num;
}

}  // namespace

bool ExactCharSum::vanishes_exactly() const {
  // sum_k counts[k] zeta_d^k = 0 iff Phi_d divides sum_k counts[k] X^k.
  const auto phi = cyclotomic(d);
  const std::size_t deg = phi.size() - 1;
  std::vector<BigInt> a(counts.begin(), counts.end());
  for (std::size_t i = a.size(); i-- > deg;) {
    const BigInt c = a[i];
    if (c == 0) continue;
    for (std::size_t j = 0; j <= deg; ++j) a[i - deg + j] -= c * phi[j];
  }
  for (std::size_t i = 0; i < std::min(deg, a.size()); ++i)
    if (a[i] != 0) return false;
  return true;
}

std::vector<u64> monic_residue_histogram(const ResidueRing& ring, int t) {
  if (t < 0) throw std::invalid_argument("monic_residue_histogram: negative degree");
  const u64 size = ring.size();
  const u64 q = ring.q();
  const gf::Field& F = ring.field();
  // Distribution of h mod F over all h with deg h < t, built one coefficient
  // position at a time, then shifted by X^t mod F.
  std::vector<u64> hist(size, 0), next(size, 0);
  hist[0] = 1;
  Coeffs xi{1};
  for (int i = 0; i < t; ++i) {
    const Coeffs basis = dense::rem(F, xi, ring.modulus().coeffs());
    std::fill(next.begin(), next.end(), 0);
    for (u64 c = 0; c < q; ++c) {
      const u64 shift = ring.index_of(dense::scale(F, basis, static_cast<gf::Elem>(c)));
      for (u64 s = 0; s < size; ++s)
        if (hist[s]) next[ring.add_index(s, shift)] += hist[s];
    }
    std::swap(hist, next);
    xi.insert(xi.begin(), 0);
  }
  const u64 lead = ring.index_of(dense::rem(F, xi, ring.modulus().coeffs()));
  std::fill(next.begin(), next.end(), 0);
  for (u64 s = 0; s < size; ++s)
    if (hist[s]) next[ring.add_index(s, lead)] += hist[s];
  return next;
}

std::vector<u64> monic_residue_histogram_enumerated(const ResidueRing& ring, int t) {
  std::vector<u64> hist(ring.size(), 0);
  const u64 count = checked_pow(ring.q(), static_cast<unsigned>(t));
  for (u64 i = 0; i < count; ++i) ++hist[ring.reduce_index(monic_at(ring.base(), t, i))];
  return hist;
}

std::vector<u64> squarefree_residue_histogram(const ResidueRing& ring, int m) {
  if (m < 2) throw std::invalid_argument("squarefree_residue_histogram: m must be >= 2");
  const u64 q = ring.q();
  const u64 end = checked_pow(q, static_cast<unsigned>(m));
  if (end > (u64{1} << 26)) throw std::length_error("squarefree_residue_histogram: enumeration too large");
  std::vector<u64> hist(ring.size(), 0);
  for (u64 idx = q; idx < end; ++idx) {
    const Poly f = Poly::from_index(ring.base(), idx);
    if (is_squarefree(f)) ++hist[ring.reduce_index(f)];
  }
  return hist;
}

ExactCharSum char_sum_from_histogram(const Character& chi, const std::vector<u64>& hist) {
  ExactCharSum out{chi.d, std::vector<u64>(chi.d, 0)};
  for (u64 idx = 1; idx < hist.size(); ++idx) {
    if (!hist[idx]) continue;
    out.counts[*chi.exponent_index(idx)] += hist[idx];
  }
  return out;
}

double monic_sum_bound(u64 q, int r, int t) {
  return std::pow(static_cast<double>(q), t / 2.0) *
         static_cast<double>(binomial(static_cast<unsigned>(r - 1), static_cast<unsigned>(t)));
}

double squarefree_sum_bound_corollary(u64 q, int r, int m) {
  const double qd = static_cast<double>(q);
  return std::pow(qd, (m - 1) / 2.0) * (qd - 1) * (std::pow(2.0, r - 1) - 1) * m / 2.0;
}

double squarefree_sum_bound_min(u64 q, int r, int m) {
  const double qd = static_cast<double>(q);
  double total = 0;
  for (int k = 0; k <= (m - 2) / 2; ++k) {
    double inner = 0;
    for (int t = 1; t <= m - 2 * k - 1; ++t) {
      const double c = static_cast<double>(binomial(static_cast<unsigned>(r - 1), static_cast<unsigned>(t)));
      inner += std::pow(qd, t / 2.0) * std::min(std::pow(qd, t / 2.0), c);
    }
    total += std::pow(qd, k) * inner;
  }
  return (qd - 1) * total;
}

namespace {

bool within(double abs, double bound) { return abs <= bound * (1 + kMagnitudeSlack) + kMagnitudeSlack; }

}  // namespace

CharSumReport char_sum_monic(const Character& chi, int t, const std::vector<u64>& hist) {
  if (t < 1) throw std::invalid_argument("char_sum_monic: t must be >= 1");
  CharSumReport rep;
  rep.d = chi.d;
  rep.length = t;
  rep.exact = char_sum_from_histogram(chi, hist);
  rep.sum = rep.exact.value();
  rep.abs = std::abs(rep.sum);
  rep.principal = chi.is_principal();
  rep.bound_lemma = monic_sum_bound(chi.ring->q(), chi.ring->degree(), t);
  rep.bound_eq21 = rep.bound_lemma;
  rep.within_bounds = within(rep.abs, rep.bound_lemma);
  return rep;
}

CharSumReport char_sum_monic(const Character& chi, int t) {
  return char_sum_monic(chi, t, monic_residue_histogram(*chi.ring, t));
}

CharSumReport char_sum_squarefree(const Character& chi, int m, const std::vector<u64>& hist) {
  if (m < 2) throw std::invalid_argument("char_sum_squarefree: m must be >= 2");
  CharSumReport rep;
  rep.d = chi.d;
  rep.length = m;
  rep.exact = char_sum_from_histogram(chi, hist);
  rep.sum = rep.exact.value();
  rep.abs = std::abs(rep.sum);
  rep.principal = chi.is_principal();
  const u64 q = chi.ring->q();
  const int r = chi.ring->degree();
  rep.bound_lemma = squarefree_sum_bound_corollary(q, r, m);
  rep.bound_eq21 = squarefree_sum_bound_min(q, r, m);
  rep.within_bounds = within(rep.abs, rep.bound_lemma) && within(rep.abs, rep.bound_eq21);
  return rep;
}

CharSumReport char_sum_squarefree(const Character& chi, int m) {
  return char_sum_squarefree(chi, m, squarefree_residue_histogram(*chi.ring, m));
}

bool subgroup_contains(const ResidueRing& ring, u64 d, const Poly& h) {
  const u64 n = ring.group_order();
  if (d == 0 || n % d != 0) throw std::invalid_argument("subgroup_contains: d does not divide q^r - 1");
  const Poly rh = ring.reduce(h);
  if (rh.is_zero()) throw std::domain_error("subgroup_contains: h is zero modulo F");
  return dense::is_one(dense::powmod(ring.field(), rh.coeffs(), n / d, ring.modulus().coeffs()));
}

bool CosetSearch::complete() const {
  return std::all_of(reps.begin(), reps.end(), [](const auto& r) { return r.has_value(); });
}

std::size_t CosetSearch::found() const {
  return static_cast<std::size_t>(std::count_if(reps.begin(), reps.end(), [](const auto& r) { return r.has_value(); }));
}

CosetSearch find_coset_reps(const ResidueRing& ring, u64 d, int degree_bound) {
  const u64 n = ring.group_order();
  if (d == 0 || n % d != 0) throw std::invalid_argument("find_coset_reps: d does not divide q^r - 1");
  CosetSearch out{d, degree_bound, std::vector<std::optional<Poly>>(d)};
  if (degree_bound < 2) return out;
  const u64 q = ring.q();
  const u64 end = checked_pow(q, static_cast<unsigned>(degree_bound));
  if (end > (u64{1} << 28)) throw std::length_error("find_coset_reps: search space too large");
  std::size_t found = 0;
  for (u64 idx = q; idx < end && found < d; ++idx) {
    const Poly f = Poly::from_index(ring.base(), idx);
    const u64 ri = ring.reduce_index(f);
    if (ri == 0) continue;
    const u64 coset = ring.dlog_index(ri) % d;
    if (out.reps[coset]) continue;
    if (!is_squarefree(f)) continue;
    out.reps[coset] = f;
    ++found;
  }
  return out;
}

TwistSum twist_sum(const ResidueRing& ring, const Poly& N) {
  if (ring.q() % 2 == 0) throw std::invalid_argument("twist_sum: no quadratic character in even characteristic");
  const u64 n_idx = ring.reduce_index(N);
  if (n_idx == 0) throw std::domain_error("twist_sum: N is zero modulo F");
  const auto& logs = ring.dlog_table();
  const auto& exps = ring.exp_table();
  const u64 order = ring.group_order();
  long long sum = 0;
  for (u64 y = 1; y < ring.size(); ++y) {
    const u64 ly = logs[y];
    const u64 y2 = exps[(2 * ly) % order];
    const u64 s = ring.add_index(y2, n_idx);
    if (s == 0) continue;
    sum += ((ly + logs[s]) % 2 == 0) ? 1 : -1;
  }
  const BigInt lhs = BigInt(sum) * sum;
  const BigInt rhs = 4 * BigInt(ring.size());
  return {sum, lhs <= rhs};
}

}  // namespace ffsmooth
