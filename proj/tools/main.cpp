// ffsmooth command-line tool.
//
// Option values resolve as: command line, then FFSMOOTH_THREADS /
// FFSMOOTH_CACHE, then the --config file (flat key = value, keys are long
// option names).  Exit status: 0 success, 1 a computation contradicted an
// expected result, 2 usage or input error, 3 other runtime failure.
#include "CLI11.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "ffsmooth/apparatus.hpp"
#include "ffsmooth/bounds.hpp"
#include "ffsmooth/counts.hpp"
#include "ffsmooth/report.hpp"
#include "ffsmooth/sequences.hpp"
#include "ffsmooth/suite.hpp"
#include "ffsmooth/verify.hpp"

using namespace ffsmooth;
namespace fs = std::filesystem;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Shared option storage; only the active subcommand's fields are read.
struct Options {
  std::string config_path;
  unsigned threads = 1;
  std::string cache;
  bool quiet = false;

  u64 q = 0;
  std::string field;
  unsigned r = 0;
  std::string modulus;
  std::string out;
  std::string report;

  // poly
  std::string op = "factor";
  std::string f, g;
  int k = 0;
  std::string index;
  // counts
  unsigned degree = 1;
  // charsum
  u64 d = 0;
  u64 power = 1;
  int length = 0;
  std::string kind = "both";
  std::string csv;
  // coset
  int bound = 0;
  // apparatus
  std::string convention = "distinct";
  unsigned closure = 0;
  // ineq
  bool scan = false;
  unsigned rmax = 0;
  std::string ineq_id;
  // verify / sweep
  std::string algo = "reach";
  std::string preset;
  // seq
  unsigned steps = 0;
  int max_degree = kPlus1DegreeCeiling;
  std::string seed = "deg1";
  std::string choose = "min";
  unsigned depth = 0;
  bool monic_terms = false;
  bool exclude_repeats = false;
  bool depth_appended = false;
  bool monic_divisors = false;
  // paper-suite
  std::string profile = "quick";
  std::vector<int> only, expect_fail;
  std::string mutate;
};

void info(const Options& o, const std::string& msg) {
  if (!o.quiet) std::cerr << msg << std::endl;
}

gf::FieldPtr resolve_field(const Options& o) {
  try {
    if (!o.field.empty()) {
      auto F = gf::parse_field_description(o.field);
      if (o.q != 0 && o.q != F->q()) throw UsageError("--q and --field disagree");
      return F;
    }
    if (o.q == 0) throw UsageError("one of --q or --field is required");
    return gf::make_field_of_order(o.q);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

Poly parse_arg_poly(const gf::FieldPtr& F, const std::string& text, const char* what) {
  try {
    return parse_poly(F, text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string(what) + ": " + e.what());
  }
}

// --modulus, or the first monic irreducible of degree --r.
RingPtr resolve_ring(const Options& o) {
  auto F = resolve_field(o);
  Poly mod(F);
  if (!o.modulus.empty()) {
    mod = parse_arg_poly(F, o.modulus, "--modulus");
    if (o.r != 0 && mod.degree() != static_cast<int>(o.r))
      throw UsageError("--modulus has degree " + std::to_string(mod.degree()) + ", --r is " + std::to_string(o.r));
  } else {
    if (o.r < 1) throw UsageError("--r or --modulus is required");
    if (big_pow(F->q(), o.r) > BigInt(kDlogTableHardLimit))
      throw UsageError("q^r exceeds " + std::to_string(kDlogTableHardLimit));
    mod = enumerate_irreducible_monic(F, static_cast<int>(o.r)).front();
  }
  try {
    return make_ring(mod);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

std::string option_value(const CLI::Option* opt) {
  if (opt->count() == 0) return opt->get_default_str();
  const auto& res = opt->results();
  if (res.size() == 1) return res.front();
  std::string s;
  for (const auto& v : res) s += (s.empty() ? "" : ",") + v;
  return s;
}

json config_echo(const std::vector<CLI::App*>& chain) {
  json cfg = json::object();
  for (const auto* app : chain)
    for (const auto* opt : app->get_options()) {
      const auto& names = opt->get_lnames();
      if (names.empty() || names.front() == "help" || names.front() == "version" || names.front() == "config") continue;
      cfg[names.front()] = option_value(opt);
    }
  return cfg;
}

std::map<std::string, std::string> read_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read config file " + path);
  std::map<std::string, std::string> kv;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    auto trim = [](std::string s) {
      const auto a = s.find_first_not_of(" \t\r");
      if (a == std::string::npos) return std::string();
      const auto b = s.find_last_not_of(" \t\r");
      return s.substr(a, b - a + 1);
    };
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw UsageError(path + ":" + std::to_string(lineno) + ": expected key = value");
    std::string key = trim(line.substr(0, eq)), value = trim(line.substr(eq + 1));
    if (value.size() >= 2 && value.front() == '"' && value.back() == '"') value = value.substr(1, value.size() - 2);
    kv[key] = value;
  }
  return kv;
}

// Fills options not given on the command line or by the environment.
void apply_config(const std::map<std::string, std::string>& kv, const std::vector<CLI::App*>& chain) {
  for (const auto& [key, value] : kv) {
    CLI::Option* opt = nullptr;
    for (auto it = chain.rbegin(); it != chain.rend() && !opt; ++it) {
      try {
        opt = (*it)->get_option("--" + key);
      } catch (const CLI::OptionNotFound&) {
      }
    }
    if (!opt || key == "config") throw UsageError("unknown config key '" + key + "'");
    if (opt->count() > 0) continue;
    try {
      opt->add_result(value);
      opt->run_callback();
    } catch (const CLI::Error& e) {
      throw UsageError("config key '" + key + "': " + e.what());
    }
  }
}

class Emitter {
 public:
  Emitter(std::string command, json config) : command_(std::move(command)), config_(std::move(config)) {}

  void write(json payload, const std::string& path) const {
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0_).count();
    auto doc = make_report(command_, config_, std::move(payload), ms);
    if (path.empty() || path == "-")
      std::cout << doc.dump(2) << std::endl;
    else
      write_json_file(path, doc);
  }

 private:
  std::string command_;
  json config_;
  std::chrono::steady_clock::time_point t0_ = std::chrono::steady_clock::now();
};

// ---- commands ------------------------------------------------------------

int cmd_field(const Options& o, const Emitter& em) {
  auto F = resolve_field(o);
  json elems = json::array();
  if (F->q() <= 64)
    for (u64 i = 0; i < F->q(); ++i) elems.push_back(F->format(static_cast<gf::Elem>(i)));
  em.write({{"description", F->describe()},
            {"p", F->p()},
            {"n", F->n()},
            {"q", F->q()},
            {"elements", elems}},
           o.out);
  return 0;
}

int cmd_poly(const Options& o, const Emitter& em) {
  auto F = resolve_field(o);
  json p;
  p["field"] = F->describe();
  p["op"] = o.op;
  if (o.op == "from-index") {
    if (o.index.empty()) throw UsageError("--index is required");
    BigInt i;
    try {
      i = BigInt(o.index);
    } catch (const std::exception&) {
      throw UsageError("--index must be a nonnegative integer");
    }
    if (i < 0) throw UsageError("--index must be nonnegative");
    p["result"] = index_to_poly(F, i).to_string();
    em.write(p, o.out);
    return 0;
  }
  if (o.f.empty()) throw UsageError("--f is required");
  const Poly f = parse_arg_poly(F, o.f, "--f");
  p["f"] = f.to_string();
  auto need_g = [&] {
    if (o.g.empty()) throw UsageError("--g is required for " + o.op);
    return parse_arg_poly(F, o.g, "--g");
  };
  if (o.op == "factor") {
    if (f.is_zero()) throw UsageError("cannot factor 0");
    p["result"] = to_json(factor(f));
  } else if (o.op == "irreducible") {
    p["result"] = is_irreducible(f);
  } else if (o.op == "squarefree") {
    p["result"] = !f.is_zero() && is_squarefree(f);
  } else if (o.op == "smooth") {
    p["k"] = o.k;
    p["result"] = !f.is_zero() && is_smooth(f, o.k);
  } else if (o.op == "index") {
    p["result"] = poly_index(f).str();
  } else if (o.op == "add") {
    p["result"] = (f + need_g()).to_string();
  } else if (o.op == "mul") {
    p["result"] = (f * need_g()).to_string();
  } else if (o.op == "divmod") {
    const Poly g = need_g();
    if (g.is_zero()) throw UsageError("division by zero");
    auto dm = divmod(f, g);
    p["result"] = {{"quotient", dm.quotient.to_string()}, {"remainder", dm.remainder.to_string()}};
  } else if (o.op == "gcd") {
    p["result"] = gcd(f, need_g()).to_string();
  } else {
    throw UsageError("unknown --op " + o.op);
  }
  em.write(p, o.out);
  return 0;
}

int cmd_counts(const Options& o, const Emitter& em) {
  auto F = resolve_field(o);
  const u64 q = F->q();
  const unsigned k = o.degree;
  if (k < 1) throw UsageError("--k must be >= 1");
  json p = {{"q", q}, {"k", k}, {"irreducible", count_irreducible(q, k).str()},
            {"irreducible_monic", (count_irreducible(q, k) / (q - 1)).str()},
            {"irreducible_below", count_irreducible_below(q, k).str()}};
  if (k >= 2) {
    p["squarefree_exact"] = count_squarefree_exact(q, k).str();
    p["squarefree_below"] = count_squarefree_below(q, k).str();
  }
  auto s = irreducible_count_sandwich(q, k);
  p["count_bounds_hold"] = s.lower && s.upper;
  em.write(p, o.out);
  return s.lower && s.upper ? 0 : 1;
}

int cmd_charsum(const Options& o, const Emitter& em) {
  auto R = resolve_ring(o);
  if (R->size() > (u64{1} << 20)) throw UsageError("q^r too large for character sums (limit 2^20)");
  if (o.kind != "monic" && o.kind != "squarefree" && o.kind != "both") throw UsageError("--kind: monic|squarefree|both");
  const u64 n = R->group_order();
  std::vector<u64> ds;
  if (o.d) {
    if (n % o.d) throw UsageError("--d must divide q^r - 1 = " + std::to_string(n));
    ds.push_back(o.d);
  } else {
    for (u64 d : divisors(n))
      if (d > 1) ds.push_back(d);
  }
  const int r = R->degree();
  std::vector<int> ts, ms;
  if (o.length) {
    ts.push_back(o.length);
    if (o.length >= 2) ms.push_back(o.length);
  } else {
    for (int t = 1; t <= r + 1; ++t) ts.push_back(t);
    for (int m = 2; m <= r; ++m) ms.push_back(m);
  }
  std::map<int, std::vector<u64>> mh, sh;
  if (o.kind != "squarefree")
    for (int t : ts) mh[t] = monic_residue_histogram(*R, t);
  if (o.kind != "monic")
    for (int m : ms) sh[m] = squarefree_residue_histogram(*R, m);

  json sums = json::array();
  std::ostringstream csv;
  csv << "q,r,F,d,t_or_m,sum_re,sum_im,abs,bound_lemma,bound_eq21,within_bounds\n";
  bool ok = true;
  auto add = [&](const std::string& kind, const CharSumReport& rep) {
    json j = to_json(rep);
    j["kind"] = kind;
    sums.push_back(j);
    if (!rep.principal && !rep.within_bounds) ok = false;
    csv << R->q() << ',' << r << ",\"" << R->modulus().to_string() << "\"," << rep.d << ',' << rep.length << ','
        << rep.sum.real() << ',' << rep.sum.imag() << ',' << rep.abs << ',' << rep.bound_lemma << ','
        << rep.bound_eq21 << ',' << (rep.within_bounds ? "true" : "false") << '\n';
  };
  for (u64 d : ds) {
    auto chi = make_character(R, d, o.power);
    for (auto& [t, h] : mh) add("monic", char_sum_monic(chi, t, h));
    for (auto& [m, h] : sh) add("squarefree", char_sum_squarefree(chi, m, h));
  }
  if (!o.csv.empty()) write_text_file(o.csv, csv.str());
  em.write({{"q", R->q()}, {"r", r}, {"F", R->modulus().to_string()}, {"power", o.power}, {"all_within_bounds", ok},
            {"sums", sums}},
           o.out);
  return ok ? 0 : 1;
}

int cmd_coset(const Options& o, const Emitter& em) {
  auto R = resolve_ring(o);
  if (o.d == 0 || R->group_order() % o.d) throw UsageError("--d must divide q^r - 1");
  const int bound = o.bound ? o.bound : R->degree();
  auto cs = find_coset_reps(*R, o.d, bound);
  json p = to_json(cs);
  p["q"] = R->q();
  p["r"] = R->degree();
  p["F"] = R->modulus().to_string();
  em.write(p, o.out);
  const bool asserted = omega_classify(R->q(), R->degree()).region == OmegaRegion::Omega0 &&
                        o.d < static_cast<u64>(R->degree()) && bound >= R->degree();
  return asserted && !cs.complete() ? 1 : 0;
}

int cmd_apparatus(const Options& o, const Emitter& em) {
  auto R = resolve_ring(o);
  if (R->size() > kApparatusLimit) throw UsageError("q^r exceeds the apparatus limit " + std::to_string(kApparatusLimit));
  if (o.convention != "distinct" && o.convention != "repeats") throw UsageError("--convention: distinct|repeats");
  auto st = build_apparatus(R);
  auto w = w_statistics(st, o.convention == "distinct" ? PairConvention::Distinct : PairConvention::WithRepeats);
  auto A = build_A_set(st, w);
  auto hits = closure_hits(st, A);
  json p = apparatus_json(st, w, A, hits);
  p["convention"] = o.convention;
  if (o.closure) {
    auto cl = kfold_closure(st, A, o.closure);
    p["closure"] = {{"k", o.closure}, {"size", std::count(cl.begin(), cl.end(), true)}};
  }
  em.write(p, o.out);
  const bool omega0 = omega_classify(R->q(), R->degree()).region == OmegaRegion::Omega0;
  const bool ok = st.reps_complete && st.S_F_bound_ok && A.bound_ok;
  return omega0 && !ok ? 1 : 0;
}

json comparison_json(const ExactComparison& c) {
  return {{"holds", c.holds()},
          {"sign", c.sign()},
          {"lhs_approx", c.lhs_approx().str(20, std::ios_base::scientific)},
          {"rhs_approx", c.rhs_approx().str(20, std::ios_base::scientific)}};
}

int cmd_ineq(const Options& o, const Emitter& em) {
  const u64 q = o.q;
  if (q < 2 || !is_prime_power(q)) throw UsageError("--q must be a prime power");
  if (o.scan) {
    if (o.rmax < 2) throw UsageError("--rmax must be >= 2");
    auto rows = scan_thresholds(q, o.rmax);
    if (!o.ineq_id.empty())
      std::erase_if(rows, [&](const ThresholdRow& r) { return r.id != o.ineq_id; });
    if (rows.empty()) throw UsageError("unknown --id " + o.ineq_id);
    if (!o.csv.empty()) {
      std::ostringstream s;
      write_threshold_csv(s, rows);
      write_text_file(o.csv, s.str());
    }
    em.write({{"q", q}, {"r_max", o.rmax}, {"rows", thresholds_json(rows)}}, o.out);
    return 0;
  }
  if (o.r < 2) throw UsageError("--r (>= 2) or --scan is required");
  json p = {{"q", q}, {"r", o.r}, {"class", omega_classify(q, o.r).label()}};
  json res = json::object();
  for (auto which : kAllInequalities) {
    const auto id = inequality_id(which);
    if (!o.ineq_id.empty() && o.ineq_id != id) continue;
    res[id] = comparison_json(inequality(which, q, o.r));
  }
  if (res.empty()) throw UsageError("unknown --id " + o.ineq_id);
  p["inequalities"] = res;
  p["combined"] = combined_criterion(q, o.r);
  em.write(p, o.out);
  return 0;
}

Algorithm parse_algo(const std::string& s) {
  auto a = parse_algorithm(s);
  if (!a) throw UsageError("--algo: scan|reach|both");
  return *a;
}

int cmd_verify(const Options& o, const Emitter& em) {
  auto R = resolve_ring(o);
  VerifyOptions vo;
  vo.algorithm = parse_algo(o.algo);
  vo.threads = o.threads;
  auto rep = verify_theorem(R, vo);
  em.write(to_json(rep), o.out);
  // Failures contradict the theorem only where it is claimed.
  const auto region = omega_classify(R->q(), R->degree()).region;
  const bool claimed = region != OmegaRegion::OutOfDomain;
  return claimed && !rep.failures.empty() ? 1 : 0;
}

int cmd_sweep(const Options& o, const Emitter& em) {
  std::vector<std::pair<u64, unsigned>> pairs;
  try {
    pairs = sweep_preset(o.preset);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  SweepOptions so;
  so.algorithm = parse_algo(o.algo);
  so.threads = o.threads;
  if (!o.cache.empty()) so.cache_dir = o.cache;
  if (!o.quiet)
    so.progress = [](u64 done, u64 total) {
      if (done == total || done % 1000 == 0) std::cerr << "sweep: " << done << "/" << total << " moduli" << std::endl;
    };
  auto rep = sweep(pairs, so, o.preset);
  em.write(to_json(rep), o.out);
  std::set<std::string> got;
  for (const auto& [e, cls] : rep.failures()) got.insert(std::to_string(e.q) + ":" + e.F + ":" + cls);
  if (o.preset == "omega1") return got.empty() ? 0 : 1;
  const std::set<std::string> expected = {"2:X^3 + X + 1:1", "2:X^3 + X^2 + 1:1"};
  return got == expected ? 0 : 1;
}

int cmd_plus1(const Options& o, const Emitter& em) {
  auto F = resolve_field(o);
  if (F->n() != 1) throw UsageError("the plus-1 sequence is defined over prime fields");
  if (o.steps < 1) throw UsageError("--steps must be >= 1");
  auto seq = plus1_sequence(F, o.steps, o.max_degree);
  json p = to_json(seq);
  p["max_degree"] = o.max_degree;
  em.write(p, o.out);
  return F->p() >= 7 && !seq.out_of_order.empty() ? 1 : 0;
}

int cmd_euclid(const Options& o, const Emitter& em) {
  auto F = resolve_field(o);
  if (o.choose != "min" && o.choose != "all") throw UsageError("--choose: min|all");
  std::vector<Poly> seed;
  try {
    seed = euclid_seed(F, o.seed);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  auto seq = euclid_sequence(F, seed, o.steps, o.choose == "min" ? ChoicePolicy::Min : ChoicePolicy::All);
  json p = to_json(seq);
  p["seed"] = o.seed;
  p["choose"] = o.choose;
  em.write(p, o.out);
  return 0;
}

int cmd_explore(const Options& o, const Emitter& em) {
  auto F = resolve_field(o);
  if (F->p() == 2) throw UsageError("exploration needs odd q");
  if (o.depth < 1 || o.depth > kExploreDepthLimit)
    throw UsageError("--depth must be in 1.." + std::to_string(kExploreDepthLimit));
  ExploreOptions eo;
  eo.associates = !o.monic_terms;
  eo.allow_repeats = !o.exclude_repeats;
  eo.depth_includes_seed = !o.depth_appended;
  eo.units = o.monic_divisors ? DivisorUnits::MonicOnly : DivisorUnits::All;
  if (!o.out.empty()) eo.branch_log = o.out;
  auto res = explore(F, {Poly::x(F)}, o.depth, eo);
  json p = to_json(res);
  p["convention"] = {{"terms", eo.associates ? "associates" : "monic"},
                     {"repeats", eo.allow_repeats},
                     {"depth_counts_seed", eo.depth_includes_seed},
                     {"divisor_units", eo.units == DivisorUnits::All ? "all" : "monic"}};
  // The other term convention, for comparison.
  ExploreOptions alt = eo;
  alt.associates = !eo.associates;
  alt.branch_log.reset();
  p["alternative_sequences"] = explore(F, {Poly::x(F)}, o.depth, alt).sequences.str();
  if (eo.allow_repeats) {
    ExploreOptions distinct = eo;
    distinct.allow_repeats = false;
    distinct.branch_log.reset();
    p["distinct_only_sequences"] = res.repeat_seen ? explore(F, {Poly::x(F)}, o.depth, distinct).sequences.str()
                                                   : res.sequences.str();
  }
  p["branch_log"] = o.out.empty() ? json(nullptr) : json(o.out);
  em.write(p, o.report);
  return 0;
}

int cmd_suite(const Options& o, const Emitter& em) {
  SuiteOptions so;
  if (o.profile != "quick" && o.profile != "full") throw UsageError("--profile: quick|full");
  so.profile = o.profile == "full" ? SuiteProfile::Full : SuiteProfile::Quick;
  so.threads = o.threads;
  if (!o.cache.empty()) so.cache_dir = o.cache;
  so.only.insert(o.only.begin(), o.only.end());
  if (!o.mutate.empty()) {
    if (o.mutate != "count_irreducible") throw UsageError("--mutate: count_irreducible");
    so.count_irreducible = count_irreducible_tampered;
  }
  if (!o.quiet) so.log = [](const std::string& m) { std::cerr << m << std::endl; };
  const std::set<int> xfail(o.expect_fail.begin(), o.expect_fail.end());
  json items = json::array();
  bool ok = true;
  for (const auto& res : run_suite(so)) {
    const bool expected = xfail.count(res.id) > 0;
    std::cerr << (res.passed ? "PASS" : "FAIL") << "  " << res.id << "  " << res.name
              << (expected ? (res.passed ? "  (unexpected pass)" : "  (expected failure)") : "") << std::endl;
    if (res.passed == expected) ok = false;
    items.push_back({{"id", res.id},
                     {"name", res.name},
                     {"passed", res.passed},
                     {"expected_failure", expected},
                     {"reduced", res.reduced},
                     {"details", res.details}});
  }
  em.write({{"profile", o.profile}, {"criteria", items}, {"all_as_expected", ok}}, o.out);
  return ok ? 0 : 1;
}

// ---- wiring --------------------------------------------------------------

void add_field_opts(CLI::App* c, Options& o) {
  c->add_option("--q", o.q, "field order (prime power, default modulus)");
  c->add_option("--field", o.field, "field description q=p^n;modulus=[...]");
}

void add_ring_opts(CLI::App* c, Options& o) {
  add_field_opts(c, o);
  c->add_option("--r", o.r, "degree of the modulus (first monic irreducible unless --modulus)");
  c->add_option("--modulus", o.modulus, "irreducible modulus F");
}

void add_out(CLI::App* c, Options& o) { c->add_option("--out", o.out, "report file (default stdout)"); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Square-free smooth representatives in residue classes over F_q"};
  app.option_defaults()->always_capture_default();
  app.set_version_flag("--version", std::string(tool_version()));
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--config", o.config_path, "flat key = value file; keys are long option names");
  app.add_option("--threads", o.threads, "worker threads (0: all cores)")->envname("FFSMOOTH_THREADS");
  app.add_option("--cache", o.cache, "sweep cache directory")->envname("FFSMOOTH_CACHE");
  app.add_flag("--quiet", o.quiet, "no progress output");

  std::map<CLI::App*, std::function<int(const Options&, const Emitter&)>> handlers;

  auto* field = app.add_subcommand("field", "describe a finite field");
  add_field_opts(field, o);
  add_out(field, o);
  handlers[field] = cmd_field;

  auto* poly = app.add_subcommand("poly", "polynomial utilities");
  add_field_opts(poly, o);
  poly->add_option("--op", o.op, "factor|irreducible|squarefree|smooth|index|from-index|add|mul|divmod|gcd");
  poly->add_option("--f", o.f, "polynomial");
  poly->add_option("--g", o.g, "second operand");
  poly->add_option("--k", o.k, "smoothness bound");
  poly->add_option("--index", o.index, "I-order index for from-index");
  add_out(poly, o);
  handlers[poly] = cmd_poly;

  auto* counts = app.add_subcommand("counts", "closed-form polynomial counts");
  add_field_opts(counts, o);
  counts->add_option("--k", o.degree, "degree");
  add_out(counts, o);
  handlers[counts] = cmd_counts;

  auto* charsum = app.add_subcommand("charsum", "exact character sums and their bounds");
  add_ring_opts(charsum, o);
  charsum->add_option("--d", o.d, "character order (default: every divisor > 1)");
  charsum->add_option("--power", o.power, "use chi^power");
  charsum->add_option("--length", o.length, "t for monic sums, m for square-free sums");
  charsum->add_option("--kind", o.kind, "monic|squarefree|both");
  charsum->add_option("--csv", o.csv, "also write CSV rows here");
  add_out(charsum, o);
  handlers[charsum] = cmd_charsum;

  auto* coset = app.add_subcommand("coset", "square-free coset representatives");
  add_ring_opts(coset, o);
  coset->add_option("--d", o.d, "subgroup index")->required();
  coset->add_option("--bound", o.bound, "degree bound (default r)");
  add_out(coset, o);
  handlers[coset] = cmd_coset;

  auto* appar = app.add_subcommand("apparatus", "S_F, K, pair statistics, A and closures");
  add_ring_opts(appar, o);
  appar->add_option("--convention", o.convention, "distinct|repeats");
  appar->add_option("--closure", o.closure, "also report the size of A^k");
  add_out(appar, o);
  handlers[appar] = cmd_apparatus;

  auto* ineq = app.add_subcommand("ineq", "exact inequality evaluation and threshold scans");
  ineq->add_option("--q", o.q, "prime power")->required();
  ineq->add_option("--r", o.r, "degree");
  ineq->add_flag("--scan", o.scan, "scan r = 2..rmax");
  ineq->add_option("--rmax", o.rmax, "upper end of the scan");
  ineq->add_option("--id", o.ineq_id, "irred_count|coset|simple_coset|enough_reps|combined");
  ineq->add_option("--csv", o.csv, "threshold CSV output");
  add_out(ineq, o);
  handlers[ineq] = cmd_ineq;

  auto* verify = app.add_subcommand("verify", "check every residue class modulo F");
  add_ring_opts(verify, o);
  verify->add_option("--algo", o.algo, "scan|reach|both");
  add_out(verify, o);
  handlers[verify] = cmd_verify;

  auto* sweep_cmd = app.add_subcommand("sweep", "verify every modulus of a preset");
  sweep_cmd->add_option("--preset", o.preset, "omega1|q5r5")->required();
  sweep_cmd->add_option("--algo", o.algo, "scan|reach|both");
  add_out(sweep_cmd, o);
  handlers[sweep_cmd] = cmd_sweep;

  auto* seq = app.add_subcommand("seq", "irreducible-polynomial sequences");
  seq->require_subcommand(1);
  auto* plus1 = seq->add_subcommand("plus1", "least new g dividing h + 1");
  add_field_opts(plus1, o);
  plus1->add_option("--steps", o.steps, "number of terms")->required();
  plus1->add_option("--max-degree", o.max_degree, "candidate degree ceiling");
  add_out(plus1, o);
  handlers[plus1] = cmd_plus1;

  auto* euclid = seq->add_subcommand("euclid", "prime factors of h + N/h");
  add_field_opts(euclid, o);
  euclid->add_option("--seed", o.seed, "deg1|x");
  euclid->add_option("--steps", o.steps, "steps")->required();
  euclid->add_option("--choose", o.choose, "min|all");
  add_out(euclid, o);
  handlers[euclid] = cmd_euclid;

  auto* expl = seq->add_subcommand("explore", "count every h + N/h sequence from [X]");
  add_field_opts(expl, o);
  expl->add_option("--depth", o.depth, "sequence length, seed included")->required();
  expl->add_option("--out", o.out, "gzip branch log");
  expl->add_option("--report", o.report, "report file (default stdout)");
  expl->add_flag("--monic-terms", o.monic_terms, "terms are monic (default: any leading coefficient)");
  expl->add_flag("--no-repeats", o.exclude_repeats, "never append a term already present");
  expl->add_flag("--depth-appended", o.depth_appended, "depth counts appended terms only");
  expl->add_flag("--monic-divisors", o.monic_divisors, "h ranges over monic divisors only");
  handlers[expl] = cmd_explore;

  auto* suite = app.add_subcommand("paper-suite", "run the acceptance checks");
  suite->add_option("--profile", o.profile, "quick|full");
  suite->add_flag("--quick{quick},--full{full}", o.profile, "profile shorthand");
  suite->add_option("--only", o.only, "criterion ids");
  suite->add_option("--expect-fail", o.expect_fail, "criterion ids known to fail");
  suite->add_option("--mutate", o.mutate, "negative control: count_irreducible");
  add_out(suite, o);
  handlers[suite] = cmd_suite;

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  std::vector<CLI::App*> chain{&app};
  for (CLI::App* cur = &app;;) {
    auto subs = cur->get_subcommands();
    if (subs.empty()) break;
    cur = subs.front();
    chain.push_back(cur);
  }
  std::string command;
  for (std::size_t i = 1; i < chain.size(); ++i) command += (i > 1 ? " " : "") + chain[i]->get_name();

  try {
    if (!o.config_path.empty()) apply_config(read_config_file(o.config_path), chain);
    auto it = handlers.find(chain.back());
    if (it == handlers.end()) throw UsageError("missing subcommand");
    Emitter em(command, config_echo(chain));
    info(o, "ffsmooth " + command);
    return it->second(o, em);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << std::endl;
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << std::endl;
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << std::endl;
    return 3;
  }
}
