#include "ffsmooth/bounds.hpp"

#include <stdexcept>

#include "ffsmooth/counts.hpp"

namespace ffsmooth {

std::string OmegaClass::label() const {
  switch (region) {
    case OmegaRegion::Omega1:
      return "Omega1";
    case OmegaRegion::OutOfDomain:
      return "OutOfDomain";
    case OmegaRegion::Omega0:
      break;
  }
  if (omega0_prime && omega0_double_prime) return "Omega0',Omega0''";
  if (omega0_prime) return "Omega0'";
  if (omega0_double_prime) return "Omega0''";
  return "Omega0";
}

unsigned omega0_min_r(u64 q) {
  if (q < 7) throw std::invalid_argument("omega0_min_r: q must be >= 7");
  if (q == 7 || q == 8) return 6;
  if (q == 9 || q == 11) return 5;
  if (q < 23) return 4;
  if (q < 64) return 3;
  return 2;
}

namespace {

bool in_double_prime(u64 q, unsigned r) {
  switch (q) {
    case 7:
      return r >= 6 && r <= 19;
    case 8:
      return r >= 6 && r <= 14;
    case 9:
      return r >= 5 && r <= 10;
    case 11:
      return r >= 5 && r <= 6;
    default:
      return false;
  }
}

}  // namespace

OmegaClass omega_classify(u64 q, unsigned r) {
  if (!is_prime_power(q)) throw std::invalid_argument("omega_classify: q must be a prime power");
  OmegaClass c;
  if (q < 7 || r < 2) return c;
  const unsigned r0 = omega0_min_r(q);
  if (r < r0) {
    c.region = OmegaRegion::Omega1;
    return c;
  }
  c.region = OmegaRegion::Omega0;
  c.omega0_prime = r == r0;
  c.omega0_double_prime = in_double_prime(q, r);
  return c;
}

std::vector<std::pair<u64, unsigned>> omega1_pairs() {
  std::vector<std::pair<u64, unsigned>> out;
  for (u64 q : prime_powers_in(7, 64))
    for (unsigned r = 2; r < omega0_min_r(q); ++r) out.emplace_back(q, r);
  return out;
}

std::vector<std::pair<u64, unsigned>> omega0_prime_pairs_below_64() {
  std::vector<std::pair<u64, unsigned>> out;
  for (u64 q : prime_powers_in(7, 63)) out.emplace_back(q, omega0_min_r(q));
  return out;
}

std::vector<std::pair<u64, unsigned>> omega0_double_prime_pairs() {
  std::vector<std::pair<u64, unsigned>> out;
  for (u64 q : {7, 8, 9, 11})
    for (unsigned r = 2; r <= 19; ++r)
      if (in_double_prime(q, r)) out.emplace_back(q, r);
  return out;
}

std::string inequality_id(Inequality which) {
  switch (which) {
    case Inequality::IrredCount:
      return "irred_count";
    case Inequality::Coset:
      return "coset";
    case Inequality::SimpleCoset:
      return "simple_coset";
    case Inequality::EnoughReps:
      return "enough_reps";
  }
  return {};
}

std::optional<Inequality> parse_inequality_id(std::string_view id) {
  for (Inequality w : kAllInequalities)
    if (inequality_id(w) == id) return w;
  return std::nullopt;
}

namespace {

void require_pair(u64 q, unsigned r, const char* what) {
  if (!is_prime_power(q)) throw std::invalid_argument(std::string(what) + ": q must be a prime power");
  if (r < 2) throw std::invalid_argument(std::string(what) + ": r must be >= 2");
}

BigRational ratio(long long a, long long b) { return BigRational(BigInt(a), BigInt(b)); }

}  // namespace

ExactComparison ineq_irred_count(u64 q, unsigned r) {
  require_pair(q, r, "ineq_irred_count");
  const long long R = r;
  ExactComparison c(q);
  c.add_lhs(BigRational(count_irreducible_below(q, r)), 0);
  c.add_rhs(ratio(1, R), 20 * R);
  c.add_rhs(2, 10 * R + 11);
  c.add_rhs(BigRational(BigInt(q - 1) * R * R * R + 3), 0);
  return c;
}

ExactComparison ineq_coset(u64 q, unsigned r) {
  require_pair(q, r, "ineq_coset");
  const long long R = r;
  ExactComparison c(q);
  c.add_lhs(1, 20 * (R - 1));
  // Every right-hand term is an integer times q^(a/20) with a a multiple of
  // 10; collect the integer coefficient of each exponent first.
  std::vector<BigInt> by_half_power(2 * r + 1, 0);
  for (long long t = 1; t <= R - 1; ++t) {
    const BigInt C = binomial(r - 1, static_cast<unsigned>(t));
    // min(q^(t/2), C): compare q^t with C^2.
    const bool power_smaller = big_pow(q, static_cast<unsigned>(t)) <= C * C;
    for (long long k = 0; k <= (R - 2) / 2 && t <= R - 2 * k - 1; ++k) {
      if (power_smaller)
        by_half_power[static_cast<std::size_t>(2 * (k + t))] += 1;
      else
        by_half_power[static_cast<std::size_t>(2 * k + t)] += C;
    }
  }
  for (std::size_t h = 0; h < by_half_power.size(); ++h)
    if (by_half_power[h] != 0) c.add_rhs(BigRational(by_half_power[h] * (R - 1)), 10 * static_cast<long long>(h));
  return c;
}

ExactComparison ineq_simple_coset(u64 q, unsigned r) {
  require_pair(q, r, "ineq_simple_coset");
  const long long R = r;
  ExactComparison c(q);
  c.add_lhs(1, 20 * (R - 1));
  const BigInt pow2 = (BigInt(1) << (r - 1)) - 1;
  c.add_rhs(BigRational(pow2 * (R - 1) * R, BigInt(2)), 10 * (R - 1));
  return c;
}

ExactComparison ineq_enough_reps(u64 q, unsigned r) {
  require_pair(q, r, "ineq_enough_reps");
  const long long R = r;
  ExactComparison c(q);
  c.add_lhs(ratio(1, R), 10 * R + 11);
  c.add_lhs(2, 22);
  c.add_lhs(3, 11 - 10 * R);
  c.add_rhs(BigRational(BigInt(q - 1) * 4 * R + 1), 0);
  return c;
}

ExactComparison inequality(Inequality which, u64 q, unsigned r) {
  switch (which) {
    case Inequality::IrredCount:
      return ineq_irred_count(q, r);
    case Inequality::Coset:
      return ineq_coset(q, r);
    case Inequality::SimpleCoset:
      return ineq_simple_coset(q, r);
    case Inequality::EnoughReps:
      return ineq_enough_reps(q, r);
  }
  throw std::logic_error("inequality: unknown id");
}

Sandwich irreducible_count_sandwich(u64 q, unsigned k) {
  if (k < 1) throw std::invalid_argument("irreducible_count_sandwich: k must be >= 1");
  return irreducible_count_sandwich(q, k, count_irreducible(q, k));
}

Sandwich irreducible_count_sandwich(u64 q, unsigned k, const BigInt& count) {
  if (k < 1) throw std::invalid_argument("irreducible_count_sandwich: k must be >= 1");
  const BigInt monic = count / (q - 1);
  Sandwich s;
  ExactComparison lower(q);  // k * monic >= q^k - 2 q^(k/2)
  lower.add_lhs(BigRational(monic * k), 0);
  lower.add_rhs(1, 20LL * k);
  lower.add_rhs(-2, 10LL * k);
  s.lower = lower.sign() >= 0;
  s.upper = monic * k <= big_pow(q, k);
  return s;
}

bool combined_criterion(u64 q, unsigned r) {
  return ineq_irred_count(q, r).holds() && ineq_enough_reps(q, r).holds() &&
         (ineq_coset(q, r).holds() || ineq_simple_coset(q, r).holds());
}

namespace {

void finish_row(ThresholdRow& row, unsigned r_max) {
  if (row.truth.empty() || !row.truth.back()) {
    row.never_true_up_to = r_max;
    return;
  }
  std::size_t i = row.truth.size();
  while (i > 0 && row.truth[i - 1]) --i;
  row.first_true_r = row.r_min + static_cast<unsigned>(i);
}

}  // namespace

std::vector<ThresholdRow> scan_thresholds(u64 q, unsigned r_max) {
  if (!is_prime_power(q)) throw std::invalid_argument("scan_thresholds: q must be a prime power");
  std::vector<ThresholdRow> rows;
  for (Inequality w : kAllInequalities) {
    ThresholdRow row;
    row.q = q;
    row.id = inequality_id(w);
    for (unsigned r = 2; r <= r_max; ++r) row.truth.push_back(inequality(w, q, r).holds());
    finish_row(row, r_max);
    rows.push_back(std::move(row));
  }
  ThresholdRow comb;
  comb.q = q;
  comb.id = "combined";
  for (std::size_t i = 0; i < rows[0].truth.size(); ++i)
    comb.truth.push_back(rows[0].truth[i] && rows[3].truth[i] && (rows[1].truth[i] || rows[2].truth[i]));
  finish_row(comb, r_max);
  rows.push_back(std::move(comb));
  return rows;
}

void write_threshold_csv(std::ostream& out, const std::vector<ThresholdRow>& rows) {
  out << "q,ineq_id,first_true_r,never_true_up_to\n";
  for (const auto& row : rows) {
    out << row.q << ',' << row.id << ',';
    if (row.first_true_r) out << *row.first_true_r;
    out << ',';
    if (!row.first_true_r) out << row.never_true_up_to;
    out << '\n';
  }
}

}  // namespace ffsmooth
