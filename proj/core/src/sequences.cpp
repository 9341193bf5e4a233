#include "ffsmooth/sequences.hpp"

#include <zlib.h>

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>
#include <unordered_map>

#include "ffsmooth/residue.hpp"

namespace ffsmooth {

namespace {

bool contains_poly(const std::vector<Poly>& v, const Poly& g) { return std::find(v.begin(), v.end(), g) != v.end(); }

Poly product(const gf::FieldPtr& field, const std::vector<Poly>& terms) {
  Poly n = Poly::constant(field, field->from_int(1));
  for (const auto& t : terms) n = n * t;
  return n;
}

// Nonempty subset of `terms` whose product is a nonzero constant mod g, as
// term indices.  Subset products are tracked by discrete log in (F_q[X]/g)^*.
std::optional<std::vector<std::size_t>> constant_subproduct(const Poly& g, const std::vector<Poly>& terms) {
  auto ring = make_ring(g);
  const u64 n = ring->group_order();
  const u64 fold = n / (ring->q() - 1);
  constexpr u32 kUnseen = UINT32_MAX;
  std::vector<u32> first_step(n, kUnseen);
  std::vector<u64> logs(terms.size());
  std::vector<u64> fresh;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const u64 e = ring->dlog(terms[i]);
    logs[i] = e;
    fresh.clear();
    if (first_step[e] == kUnseen) fresh.push_back(e);
    for (u64 k = 0; k < n; ++k) {
      if (first_step[k] == kUnseen || first_step[k] == i) continue;
      const u64 t = (k + e) % n;
      if (first_step[t] == kUnseen) fresh.push_back(t);
    }
    for (u64 t : fresh) first_step[t] = static_cast<u32>(i);
    for (u64 k = 0; k < n; k += fold) {
      if (first_step[k] == kUnseen) continue;
      std::vector<std::size_t> subset;
      u64 cur = k;
      for (;;) {
        const u32 s = first_step[cur];
        subset.push_back(s);
        if (cur == logs[s]) break;
        cur = (cur + n - logs[s]) % n;
      }
      std::reverse(subset.begin(), subset.end());
      return subset;
    }
  }
  return std::nullopt;
}

// Distinct monic irreducible factors of a nonconstant f.
std::vector<Poly> irreducible_factors(const Poly& f) {
  std::vector<Poly> out;
  for (auto& [p, m] : factor(f).factors) out.push_back(p);
  return out;
}

}  // namespace

std::optional<Plus1Step> plus1_next(const gf::FieldPtr& field, const std::vector<Poly>& terms, int max_degree) {
  if (terms.empty()) throw std::invalid_argument("plus1_next: empty state");
  const auto& F = *field;
  for (int e = 1; e <= max_degree; ++e) {
    for (const auto& g : enumerate_irreducible_monic(field, e)) {
      if (contains_poly(terms, g)) continue;
      auto subset = constant_subproduct(g, terms);
      if (!subset) continue;
      Poly m = Poly::constant(field, F.from_int(1));
      for (auto i : *subset) m = m * terms[i];
      const gf::Elem k = (m % g).coeff(0);
      const Poly h = m.scaled(F.neg(F.inv(k)));
      const Poly h1 = h + Poly::constant(field, F.from_int(1));
      if (h1.is_zero() || !(h1 % g).is_zero()) throw std::logic_error("plus1_next: witness check failed");
      return Plus1Step{g, h, h1};
    }
  }
  return std::nullopt;
}

Plus1Sequence plus1_sequence(const gf::FieldPtr& field, std::size_t count, int max_degree) {
  Plus1Sequence seq{field, {Poly::x(field)}, {}, {}};
  while (seq.terms.size() < count) {
    auto step = plus1_next(field, seq.terms, max_degree);
    if (!step)
      throw std::runtime_error("plus1 sequence: no term of degree <= " + std::to_string(max_degree) + " after " +
                               std::to_string(seq.terms.size()) + " terms");
    if (order_less(step->term, seq.terms.back())) seq.out_of_order.push_back(seq.terms.size() - 1);
    seq.terms.push_back(step->term);
    seq.steps.push_back(std::move(*step));
  }
  return seq;
}

std::vector<EuclidCandidate> euclid_candidates(const gf::FieldPtr& field, const std::vector<Poly>& terms,
                                               DivisorUnits units, gf::Elem n_unit) {
  const auto& F = *field;
  if (n_unit == 0) throw std::invalid_argument("euclid_candidates: zero unit");
  // Distinct factors with multiplicity.
  std::vector<std::pair<Poly, unsigned>> parts;
  for (const auto& t : terms) {
    auto it = std::find_if(parts.begin(), parts.end(), [&](const auto& p) { return p.first == t; });
    if (it == parts.end())
      parts.emplace_back(t, 1u);
    else
      ++it->second;
  }
  const Poly N = product(field, terms);
  std::vector<gf::Elem> unit_list;
  if (units == DivisorUnits::MonicOnly) {
    unit_list.push_back(F.from_int(1));
  } else {
    for (u64 c = 1; c < F.q(); ++c) unit_list.push_back(static_cast<gf::Elem>(c));
  }
  u64 divisor_count = unit_list.size();
  for (const auto& part : parts) {
    divisor_count *= part.second + 1;
    if (divisor_count > kEuclidDivisorLimit)
      throw std::length_error("euclid_candidates: N has more than " + std::to_string(kEuclidDivisorLimit) + " divisors");
  }
  std::map<Poly, EuclidCandidate, PolyOrderLess> found;
  std::vector<unsigned> ex(parts.size(), 0);
  for (;;) {
    Poly m = Poly::constant(field, F.from_int(1));
    for (std::size_t i = 0; i < parts.size(); ++i)
      for (unsigned j = 0; j < ex[i]; ++j) m = m * parts[i].first;
    const Poly cofactor = (N / m).scaled(n_unit);
    for (auto c : unit_list) {
      const Poly h = m.scaled(c);
      const Poly value = h + cofactor.scaled(F.inv(c));
      if (value.is_constant()) continue;
      for (auto& g : irreducible_factors(value)) {
        if (!found.count(g)) found.emplace(g, EuclidCandidate{g, h, value});
      }
    }
    std::size_t i = 0;
    while (i < parts.size() && ex[i] == parts[i].second) ex[i++] = 0;
    if (i == parts.size()) break;
    ++ex[i];
  }
  std::vector<EuclidCandidate> out;
  for (auto& [g, c] : found) {
    if (!(c.value % g).is_zero()) throw std::logic_error("euclid_candidates: witness check failed");
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<Poly> euclid_seed(const gf::FieldPtr& field, std::string_view name) {
  if (name == "x") return {Poly::x(field)};
  if (name == "deg1") return enumerate_irreducible_monic(field, 1);
  throw std::invalid_argument("unknown seed '" + std::string(name) + "' (expected deg1 or x)");
}

EuclidSequence euclid_sequence(const gf::FieldPtr& field, std::vector<Poly> seed, std::size_t steps,
                               ChoicePolicy policy) {
  if (seed.empty()) throw std::invalid_argument("euclid sequence: empty seed");
  EuclidSequence seq{field, std::move(seed), {}};
  for (std::size_t s = 0; s < steps; ++s) {
    std::vector<EuclidCandidate> fresh;
    for (auto& c : euclid_candidates(field, seq.terms)) {
      if (contains_poly(seq.terms, c.g)) continue;
      fresh.push_back(std::move(c));
      if (policy == ChoicePolicy::Min) break;
    }
    if (fresh.empty()) break;
    seq.terms.push_back(fresh.front().g);
    seq.steps.push_back(EuclidStep{fresh.front().g, std::move(fresh)});
  }
  return seq;
}

namespace {

struct KeyHash {
  std::size_t operator()(const std::vector<u64>& v) const noexcept {
    std::size_t h = v.size();
    for (u64 x : v) h ^= std::hash<u64>{}(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};

class Explorer {
 public:
  Explorer(gf::FieldPtr field, const ExploreOptions& options, std::vector<Poly> seed, std::size_t target)
      : field_(std::move(field)), options_(options), target_(target) {
    gf::Elem unit = 1;
    for (auto& t : seed) {
      unit = field_->mul(unit, t.lead());
      monic_.push_back(t.monic());
      shown_.push_back(t);
    }
    unit_ = unit;
  }

  void run(gzFile log) {
    log_ = log;
    visit();
  }

  ExploreResult result() {
    ExploreResult r;
    r.sequences = sequences_;
    r.max_degree_one = max_degree_one_;
    r.degree_one_histogram = std::move(histogram_);
    r.distinct_states = memo_.size();
    r.repeat_seen = repeat_seen_;
    return r;
  }

 private:
  const std::vector<Poly>& candidates() {
    std::vector<u64> key;
    for (const auto& t : monic_) key.push_back(t.index64());
    std::sort(key.begin(), key.end());
    key.push_back(unit_);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    std::vector<Poly> out;
    for (auto& c : euclid_candidates(field_, monic_, options_.units, unit_)) {
      if (contains_poly(monic_, c.g)) {
        if (!options_.allow_repeats) continue;
        repeat_seen_ = true;
      }
      out.push_back(std::move(c.g));
    }
    if (options_.reverse_order) std::reverse(out.begin(), out.end());
    return memo_.emplace(std::move(key), std::move(out)).first->second;
  }

  void leaf() {
    unsigned d1 = 0;
    for (const auto& t : monic_) d1 += t.degree() == 1;
    sequences_ += 1;
    histogram_[d1] += 1;
    max_degree_one_ = std::max(max_degree_one_, d1);
    if (log_) {
      std::string line = std::to_string(next_id_) + ": ";
      for (std::size_t i = 0; i < shown_.size(); ++i) {
        if (i) line += ',';
        line += shown_[i].to_string();
      }
      line += '\n';
      if (gzwrite(log_, line.data(), static_cast<unsigned>(line.size())) == 0)
        throw std::runtime_error("error writing branch log");
    }
    ++next_id_;
  }

  void visit() {
    if (monic_.size() >= target_) return leaf();
    const auto& cands = candidates();
    const u64 q = field_->q();
    for (const auto& g : cands) {
      for (u64 c = 1; c < q; ++c) {
        if (!options_.associates && c != 1) break;
        const auto a = static_cast<gf::Elem>(c);
        const gf::Elem saved = unit_;
        unit_ = field_->mul(unit_, a);
        monic_.push_back(g);
        shown_.push_back(g.scaled(a));
        visit();
        shown_.pop_back();
        monic_.pop_back();
        unit_ = saved;
      }
    }
  }

  gf::FieldPtr field_;
  const ExploreOptions& options_;
  std::size_t target_;
  std::vector<Poly> monic_;
  std::vector<Poly> shown_;
  gf::Elem unit_ = 1;
  gzFile log_ = nullptr;
  u64 next_id_ = 0;
  BigInt sequences_ = 0;
  unsigned max_degree_one_ = 0;
  std::map<unsigned, BigInt> histogram_;
  bool repeat_seen_ = false;
  // node-based: references stay valid across inserts
  std::unordered_map<std::vector<u64>, std::vector<Poly>, KeyHash> memo_;
};

}  // namespace

ExploreResult explore(const gf::FieldPtr& field, const std::vector<Poly>& seed, unsigned depth,
                      const ExploreOptions& options) {
  if (depth > kExploreDepthLimit)
    throw std::invalid_argument("explore: depth " + std::to_string(depth) + " exceeds the limit " +
                                std::to_string(kExploreDepthLimit));
  if (seed.empty()) throw std::invalid_argument("explore: empty seed");
  for (const auto& t : seed)
    if (!is_irreducible(t)) throw std::invalid_argument("explore: seed term " + t.to_string() + " is not irreducible");
  const std::size_t target = options.depth_includes_seed ? depth : seed.size() + depth;

  Explorer explorer(field, options, seed, target);
  gzFile log = nullptr;
  if (options.branch_log) {
    log = gzopen(options.branch_log->c_str(), "wb");
    if (!log) throw std::runtime_error("cannot open branch log " + options.branch_log->string());
  }
  try {
    explorer.run(log);
  } catch (...) {
    if (log) gzclose(log);
    throw;
  }
  if (log && gzclose(log) != Z_OK) throw std::runtime_error("error writing branch log");
  return explorer.result();
}

std::optional<std::vector<Poly>> guided_reach(const gf::FieldPtr& field, const Poly& F) {
  if (F.degree() != 2 || !F.is_monic() || !is_irreducible(F))
    throw std::invalid_argument("guided_reach: target must be monic irreducible of degree 2");
  auto start = euclid_seed(field, "deg1");
  auto has_target = [&](const std::vector<Poly>& terms) {
    for (const auto& c : euclid_candidates(field, terms))
      if (c.g == F) return true;
    return false;
  };
  if (has_target(start)) return std::vector<Poly>{};
  auto chi = make_character(make_ring(F), 2);
  for (const auto& c : euclid_candidates(field, start)) {
    if (c.g == F) continue;
    auto e = chi.exponent(c.g);
    if (!e || *e != 1) continue;
    auto next = start;
    next.push_back(c.g);
    if (has_target(next)) return std::vector<Poly>{c.g};
  }
  return std::nullopt;
}

}  // namespace ffsmooth
