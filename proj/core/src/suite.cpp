#include "ffsmooth/suite.hpp"

#include <chrono>
#include <numeric>
#include <random>
#include <sstream>

#include "ffsmooth/apparatus.hpp"
#include "ffsmooth/bounds.hpp"
#include "ffsmooth/counts.hpp"
#include "ffsmooth/parallel.hpp"
#include "ffsmooth/sequences.hpp"
#include "ffsmooth/verify.hpp"

namespace ffsmooth {

namespace {

using Pairs = std::vector<std::pair<u64, unsigned>>;

class Check {
 public:
  explicit Check(CriterionResult& res) : res_(res) {}

  // Records a failed expectation; returns ok.
  bool expect(bool ok, const std::string& what) {
    if (!ok) {
      failed_ = true;
      if (res_.details.size() < 40) res_.details.push_back("FAILED: " + what);
    }
    return ok;
  }
  void note(const std::string& what) { res_.details.push_back(what); }
  bool ok() const { return !failed_; }

 private:
  CriterionResult& res_;
  bool failed_ = false;
};

std::string pair_text(u64 q, unsigned r) { return "(" + std::to_string(q) + "," + std::to_string(r) + ")"; }

void log(const SuiteOptions& o, const std::string& msg) {
  if (o.log) o.log(msg);
}

std::function<void(u64, u64)> sweep_progress(const SuiteOptions& o, const std::string& label) {
  if (!o.log) return {};
  return [&o, label](u64 done, u64 total) {
    if (done == total || done % 500 == 0) o.log(label + ": " + std::to_string(done) + "/" + std::to_string(total) + " rings");
  };
}

void exhaustive_sweep(const SuiteOptions& o, CriterionResult& res) {
  Check c(res);
  SweepOptions so;
  so.threads = o.threads;
  so.cache_dir = o.cache_dir;
  so.progress = sweep_progress(o, "q<=5, r<=5 sweep");
  auto rep = sweep(sweep_preset("q5r5"), so, "q5r5");
  std::set<std::string> got;
  for (const auto& [e, cls] : rep.failures()) got.insert(pair_text(e.q, e.r) + " F=" + e.F + " class " + cls);
  const std::set<std::string> want = {"(2,3) F=X^3 + X + 1 class 1", "(2,3) F=X^3 + X^2 + 1 class 1"};
  c.note(std::to_string(rep.rings) + " moduli, " + std::to_string(got.size()) + " failing classes");
  for (const auto& g : got) c.note("failure " + g);
  c.expect(got == want, "failing classes differ from the two cubic classes over F_2");
  res.passed = c.ok();
}

void omega1_sweep(const SuiteOptions& o, CriterionResult& res) {
  Check c(res);
  Pairs pairs = sweep_preset("omega1");
  if (o.profile == SuiteProfile::Quick) {
    std::erase_if(pairs, [](auto p) { return big_pow(p.first, p.second) > 5000; });
    res.reduced = true;
    c.note("quick profile: pairs with q^r <= 5000 only");
  }
  SweepOptions so;
  so.threads = o.threads;
  so.cache_dir = o.cache_dir;
  so.progress = sweep_progress(o, "omega1 sweep");
  auto rep = sweep(pairs, so, "omega1");
  c.note(std::to_string(pairs.size()) + " pairs, " + std::to_string(rep.rings) + " moduli");
  for (const auto& [e, cls] : rep.failures())
    c.expect(false, "failure " + pair_text(e.q, e.r) + " F=" + e.F + " class " + cls);
  res.passed = c.ok();
}

void plus1_binary(const SuiteOptions&, CriterionResult& res) {
  Check c(res);
  auto F = gf::make_field(2, 1);
  auto seq = plus1_sequence(F, 6);
  const std::vector<std::string> want = {"X", "X + 1", "X^2 + X + 1", "X^4 + X + 1", "X^3 + X + 1", "X^3 + X^2 + 1"};
  std::string got;
  for (std::size_t i = 0; i < seq.terms.size(); ++i) {
    c.expect(seq.terms[i].to_string() == want[i], "term " + std::to_string(i + 1));
    got += (i ? ", " : "") + seq.terms[i].to_string();
  }
  c.note("terms: " + got);
  res.passed = c.ok();
}

void exploration(const SuiteOptions& o, CriterionResult& res) {
  Check c(res);
  auto F = gf::make_field(3, 1);
  const bool quick = o.profile == SuiteProfile::Quick;
  const unsigned depth = quick ? 6 : 7;
  res.reduced = quick;
  ExploreOptions assoc;
  ExploreOptions monic;
  monic.associates = false;
  auto a = explore(F, {Poly::x(F)}, depth, assoc);
  auto m = explore(F, {Poly::x(F)}, depth, monic);
  c.note("first " + std::to_string(depth) + " terms, terms up to associates, N with unit: " + a.sequences.str() +
         " sequences");
  c.note("first " + std::to_string(depth) + " terms, monic terms: " + m.sequences.str() + " sequences");
  c.note("max degree-1 terms: " + std::to_string(std::max(a.max_degree_one, m.max_degree_one)));
  if (quick) {
    ExploreOptions rev;
    rev.reverse_order = true;
    c.expect(explore(F, {Poly::x(F)}, depth, rev).sequences == a.sequences, "traversal orders disagree");
    c.note("quick profile: depth 6, count not compared");
  } else {
    c.expect(a.sequences == 1397132 || m.sequences == 1397132, "no convention gives 1397132");
  }
  c.expect(a.max_degree_one <= 3 && m.max_degree_one <= 3, "a branch has more than 3 degree-1 terms");
  res.passed = c.ok();
}

void thresholds(const SuiteOptions&, CriterionResult& res) {
  Check c(res);
  constexpr unsigned kRMax = 256;
  auto row = [](const std::vector<ThresholdRow>& rows, const std::string& id) -> const ThresholdRow& {
    for (const auto& r : rows)
      if (r.id == id) return r;
    throw std::logic_error("missing row " + id);
  };
  auto first = [&](u64 q, const std::vector<ThresholdRow>& rows, const std::string& id, unsigned want) {
    const auto& r = row(rows, id);
    const std::string got = r.first_true_r ? std::to_string(*r.first_true_r) : "never";
    c.note("q=" + std::to_string(q) + " " + id + ": first true r = " + got);
    c.expect(r.first_true_r == want, "q=" + std::to_string(q) + " " + id + " expected " + std::to_string(want) + ", got " + got);
  };
  auto never = [&](u64 q, const std::vector<ThresholdRow>& rows, const std::string& id) {
    const auto& r = row(rows, id);
    std::string runs;
    for (std::size_t i = 0; i < r.truth.size();) {
      if (!r.truth[i]) {
        ++i;
        continue;
      }
      std::size_t j = i;
      while (j + 1 < r.truth.size() && r.truth[j + 1]) ++j;
      runs += (runs.empty() ? "" : ", ") + std::to_string(r.r_min + i);
      if (j > i) runs += ".." + std::to_string(r.r_min + j);
      i = j + 1;
    }
    c.note("q=" + std::to_string(q) + " " + id + ": " +
           (runs.empty() ? "never true for r <= " + std::to_string(kRMax) : "true for r in " + runs));
    c.expect(runs.empty(), "q=" + std::to_string(q) + " " + id + " is true for some r <= " + std::to_string(kRMax));
  };
  auto never_above_two = [&](u64 q, const std::vector<ThresholdRow>& rows, const std::string& id) {
    // The simple coset bound holds trivially at r = 2 (both sides' polynomial
    // parts vanish); the claim concerns r >= 3.
    const auto& r = row(rows, id);
    bool any = false;
    for (std::size_t i = 0; i < r.truth.size(); ++i) any |= r.truth[i] && r.r_min + i >= 3;
    c.note("q=" + std::to_string(q) + " " + id + ": " + (any ? "true for some 3 <= r <= 256" : "never true for 3 <= r <= 256"));
    c.expect(!any, "q=" + std::to_string(q) + " " + id + " is true for some 3 <= r <= 256");
  };

  auto q5 = scan_thresholds(5, kRMax);
  first(5, q5, "irred_count", 8);
  first(5, q5, "enough_reps", 8);
  first(5, q5, "coset", 13);
  first(5, q5, "simple_coset", 72);
  const auto& coset5 = row(q5, "coset");
  for (unsigned r = 13; r <= 71; ++r) c.expect(coset5.truth[r - coset5.r_min], "q=5 coset false at r=" + std::to_string(r));

  auto q4 = scan_thresholds(4, kRMax);
  first(4, q4, "coset", 22);
  never_above_two(4, q4, "simple_coset");

  auto q3 = scan_thresholds(3, kRMax);
  first(3, q3, "irred_count", 12);
  first(3, q3, "enough_reps", 12);
  first(3, q3, "coset", 49);

  auto q2 = scan_thresholds(2, kRMax);
  never(2, q2, "coset");
  never_above_two(2, q2, "simple_coset");
  res.passed = c.ok();
}

void base_cases(const SuiteOptions&, CriterionResult& res) {
  Check c(res);
  auto prime_pairs = omega0_prime_pairs_below_64();
  prime_pairs.emplace_back(64, 2);
  for (auto [q, r] : prime_pairs) c.expect(ineq_irred_count(q, r).holds(), "irred_count fails at " + pair_text(q, r));
  c.note(std::to_string(prime_pairs.size()) + " irreducible-count base pairs checked");
  auto dd = omega0_double_prime_pairs();
  for (auto [q, r] : dd) c.expect(ineq_coset(q, r).holds(), "coset fails at " + pair_text(q, r));
  c.note(std::to_string(dd.size()) + " coset pairs checked");
  u64 n = 0;
  for (u64 q : prime_powers_in(2, 128))
    for (unsigned r = 2; r <= 64; ++r) {
      if (omega_classify(q, r).region != OmegaRegion::Omega0) continue;
      ++n;
      c.expect(ineq_enough_reps(q, r).holds(), "enough_reps fails at " + pair_text(q, r));
    }
  c.note(std::to_string(n) + " pairs checked for the representation-count bound");
  res.passed = c.ok() && prime_pairs.size() == 23 && dd.size() == 31;
}

void counting(const SuiteOptions& o, CriterionResult& res) {
  Check c(res);
  auto pi = o.count_irreducible ? o.count_irreducible : [](u64 q, unsigned k) { return count_irreducible(q, k); };
  for (u64 q : prime_powers_in(2, 9)) {
    auto F = gf::make_field_of_order(q);
    for (unsigned k = 1; k <= 4; ++k) {
      const BigInt listed = BigInt(enumerate_irreducible_monic(F, static_cast<int>(k)).size()) * (q - 1);
      c.expect(pi(q, k) == listed, "irreducible count q=" + std::to_string(q) + " k=" + std::to_string(k));
    }
  }
  for (u64 q : prime_powers_in(2, 5)) {
    auto F = gf::make_field_of_order(q);
    BigInt below = 0;  // square-free, 1 <= deg < m
    for (unsigned m = 1; m <= 5; ++m) {
      u64 exact = 0;
      for (const auto& f : enumerate_monic(F, static_cast<int>(m))) exact += is_squarefree(f);
      const BigInt exact_all = BigInt(exact) * (q - 1);
      if (m >= 2) {
        c.expect(count_squarefree_exact(q, m) == exact_all, "square-free count q=" + std::to_string(q) + " m=" + std::to_string(m));
        c.expect(count_squarefree_below(q, m) == below, "square-free below q=" + std::to_string(q) + " m=" + std::to_string(m));
      }
      below += exact_all;
    }
  }
  for (u64 q : prime_powers_in(2, 64))
    for (unsigned k = 1; k <= 12; ++k) {
      auto s = irreducible_count_sandwich(q, k, pi(q, k));
      c.expect(s.lower && s.upper, "count bounds q=" + std::to_string(q) + " k=" + std::to_string(k));
    }
  res.passed = c.ok();
}

std::vector<RingPtr> grid_rings(u64 size_limit) {
  std::vector<RingPtr> out;
  for (u64 q : prime_powers_in(2, size_limit)) {
    auto F = gf::make_field_of_order(q);
    for (unsigned r = 2; big_pow(q, r) <= size_limit; ++r) {
      auto irr = enumerate_irreducible_monic(F, static_cast<int>(r));
      out.push_back(make_ring(irr.front()));
      if (irr.size() > 1) out.push_back(make_ring(irr.back()));
    }
  }
  return out;
}

void char_sums(const SuiteOptions& o, CriterionResult& res) {
  Check c(res);
  const auto rings = grid_rings(625);
  std::mutex m;
  u64 sums = 0;
  parallel_for(rings.size(), o.threads, [&](std::size_t i) {
    const auto& R = rings[i];
    const u64 n = R->group_order();
    std::vector<std::string> bad;
    u64 local = 0;
    std::vector<std::vector<u64>> monic(7), sqf(R->degree() + 1);
    for (int t = 1; t <= 6; ++t) monic[t] = monic_residue_histogram(*R, t);
    for (int mm = 2; mm <= R->degree(); ++mm) sqf[mm] = squarefree_residue_histogram(*R, mm);
    for (u64 d : divisors(n)) {
      if (d == 1) continue;
      for (u64 power = 1; power < d; ++power) {
        if (std::gcd(power, d) != 1) continue;
        auto chi = make_character(R, d, power);
        for (int t = 1; t <= 6; ++t) {
          auto rep = char_sum_monic(chi, t, monic[t]);
          ++local;
          if (!rep.within_bounds) bad.push_back(R->describe() + " monic d=" + std::to_string(d) + " t=" + std::to_string(t));
          if (t >= R->degree() && !rep.exact.vanishes_exactly())
            bad.push_back(R->describe() + " nonvanishing d=" + std::to_string(d) + " t=" + std::to_string(t));
        }
        for (int mm = 2; mm <= R->degree(); ++mm) {
          auto rep = char_sum_squarefree(chi, mm, sqf[mm]);
          ++local;
          if (!rep.within_bounds) bad.push_back(R->describe() + " square-free d=" + std::to_string(d) + " m=" + std::to_string(mm));
        }
      }
    }
    std::lock_guard lock(m);
    sums += local;
    for (auto& b : bad) c.expect(false, b);
  });
  c.note(std::to_string(sums) + " character sums on " + std::to_string(rings.size()) + " moduli");

  // Equal character values exactly on cosets of H_d.
  u64 pairs = 0;
  for (const auto& R : grid_rings(81)) {
    const u64 n = R->group_order();
    for (u64 d : divisors(n)) {
      auto chi = make_character(R, d);
      std::vector<u64> e(R->size());
      std::vector<bool> in_h(R->size());
      for (u64 i = 1; i < R->size(); ++i) {
        e[i] = *chi.exponent_index(i);
        in_h[i] = subgroup_contains(*R, d, R->residue(i));
      }
      for (u64 a = 1; a < R->size(); ++a) {
        const u64 a_inv = R->index_of(R->inv(R->residue(a)).coeffs());
        for (u64 f = 1; f < R->size(); ++f) {
          ++pairs;
          if ((e[f] == e[a]) != in_h[R->mul_index(f, a_inv)])
            c.expect(false, "coset equivalence " + R->describe() + " d=" + std::to_string(d));
        }
      }
    }
  }
  c.note(std::to_string(pairs) + " (f, a, d) triples checked for character/coset equivalence");
  res.passed = c.ok();
}

void twist(const SuiteOptions&, CriterionResult& res) {
  Check c(res);
  u64 n = 0;
  for (u64 q : {7, 9}) {
    auto F = gf::make_field_of_order(q);
    for (const auto& mod : enumerate_irreducible_monic(F, 2)) {
      auto R = make_ring(mod);
      for (u64 i = 1; i < R->size(); ++i) {
        ++n;
        auto ts = twist_sum(*R, R->residue(i));
        c.expect(ts.within_bound, R->describe() + " N=" + R->residue(i).to_string() + " sum=" + std::to_string(ts.sum));
      }
    }
  }
  c.note(std::to_string(n) + " twisted sums checked");
  res.passed = c.ok();
}

void oracle_equivalence(const SuiteOptions& o, CriterionResult& res) {
  Check c(res);
  std::vector<RingPtr> rings;
  // Random sample over every (q, r) with q^r <= 2^14.
  Pairs all;
  for (u64 q : prime_powers_in(2, 128))
    for (unsigned r = 2; big_pow(q, r) <= (1 << 14); ++r) all.emplace_back(q, r);
  std::mt19937_64 rng(20200);
  for (int i = 0; i < 60; ++i) {
    auto [q, r] = all[rng() % all.size()];
    auto irr = enumerate_irreducible_monic(gf::make_field_of_order(q), static_cast<int>(r));
    rings.push_back(make_ring(irr[rng() % irr.size()]));
  }
  Pairs sweep_pairs = sweep_preset("q5r5");
  for (auto p : sweep_preset("omega1")) sweep_pairs.push_back(p);
  for (auto [q, r] : sweep_pairs) {
    if (r > 4) continue;
    for (const auto& F : enumerate_irreducible_monic(gf::make_field_of_order(q), static_cast<int>(r)))
      rings.push_back(make_ring(F));
  }
  std::atomic<u64> classes{0};
  std::mutex m;
  parallel_for(rings.size(), o.threads, [&](std::size_t i) {
    VerifyOptions vo;
    vo.algorithm = Algorithm::Both;
    vo.records = false;
    auto rep = verify_theorem(rings[i], vo);
    classes += rep.classes_checked;
    if (!rep.algorithms_agree) {
      std::lock_guard lock(m);
      c.expect(false, "algorithms disagree on " + rings[i]->describe());
    }
  });
  c.note(std::to_string(rings.size()) + " moduli, " + std::to_string(classes.load()) + " classes compared");
  res.passed = c.ok();
}

void apparatus_sanity(const SuiteOptions& o, CriterionResult& res) {
  Check c(res);
  std::vector<RingPtr> rings;
  for (u64 q : prime_powers_in(2, 128))
    for (unsigned r = 2; big_pow(q, r) <= kApparatusLimit; ++r) {
      if (omega_classify(q, r).region != OmegaRegion::Omega0) continue;
      auto irr = enumerate_irreducible_monic(gf::make_field_of_order(q), static_cast<int>(r));
      rings.push_back(make_ring(irr.front()));
      rings.push_back(make_ring(irr.back()));
    }
  std::mutex m;
  parallel_for(rings.size(), o.threads, [&](std::size_t i) {
    const auto& R = rings[i];
    auto st = build_apparatus(R);
    auto w = w_statistics(st);
    auto A = build_A_set(st, w);
    const std::string tag = R->describe();
    std::vector<std::pair<bool, std::string>> checks = {
        {st.reps_complete, tag + " missing coset representatives"},
        {st.S_F_bound_ok, tag + " #S_F bound"},
        {BigInt(w.total) * 2 == BigInt(st.K) * (st.K - 1), tag + " pair total != C(K,2)"},
        {2 * w.max <= st.K, tag + " max w > K/2"},
        {A.bound_ok, tag + " size of A"},
    };
    std::lock_guard lock(m);
    for (auto& [ok, what] : checks) c.expect(ok, what);
  });
  c.note(std::to_string(rings.size()) + " moduli over " + std::to_string(rings.size() / 2) + " pairs");
  res.passed = c.ok();
}

}  // namespace

std::string criterion_name(int id) {
  static const char* names[] = {"",
                                "exhaustive sweep q<=5, r<=5",
                                "Omega1 sweep",
                                "plus-1 sequence over F_2",
                                "h + N/h exploration, q=3",
                                "inequality thresholds",
                                "base cases of the inequalities",
                                "counting identities",
                                "character-sum bounds",
                                "twisted quadratic sums",
                                "scan/reachability agreement",
                                "apparatus sanity"};
  if (id < 1 || id > kCriterionCount) throw std::out_of_range("criterion " + std::to_string(id));
  return names[id];
}

BigInt count_irreducible_tampered(u64 q, unsigned k) { return count_irreducible(q, k) + (k >= 2 ? 1 : 0); }

CriterionResult run_criterion(int id, const SuiteOptions& options) {
  CriterionResult res;
  res.id = id;
  res.name = criterion_name(id);
  log(options, "criterion " + std::to_string(id) + ": " + res.name);
  const auto t0 = std::chrono::steady_clock::now();
  try {
    switch (id) {
      case 1: exhaustive_sweep(options, res); break;
      case 2: omega1_sweep(options, res); break;
      case 3: plus1_binary(options, res); break;
      case 4: exploration(options, res); break;
      case 5: thresholds(options, res); break;
      case 6: base_cases(options, res); break;
      case 7: counting(options, res); break;
      case 8: char_sums(options, res); break;
      case 9: twist(options, res); break;
      case 10: oracle_equivalence(options, res); break;
      case 11: apparatus_sanity(options, res); break;
    }
  } catch (const std::exception& e) {
    res.passed = false;
    res.details.push_back(std::string("error: ") + e.what());
  }
  res.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return res;
}

std::vector<CriterionResult> run_suite(const SuiteOptions& options) {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= kCriterionCount; ++id)
    if (options.only.empty() || options.only.count(id)) out.push_back(run_criterion(id, options));
  return out;
}

}  // namespace ffsmooth
