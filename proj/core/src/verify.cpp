#include "ffsmooth/verify.hpp"

#include <bit>
#include <chrono>
#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>

#include <nlohmann/json.hpp>

#include "ffsmooth/counts.hpp"
#include "ffsmooth/factor.hpp"
#include "ffsmooth/parallel.hpp"

namespace ffsmooth {

std::string algorithm_name(Algorithm a) {
  switch (a) {
    case Algorithm::Scan:
      return "scan";
    case Algorithm::Reach:
      return "reach";
    case Algorithm::Both:
      return "both";
  }
  return {};
}

std::optional<Algorithm> parse_algorithm(std::string_view name) {
  if (name == "scan") return Algorithm::Scan;
  if (name == "reach" || name == "reachability") return Algorithm::Reach;
  if (name == "both") return Algorithm::Both;
  return std::nullopt;
}

bool is_suitable_representative(const ResidueRing& ring, const Poly& cls, const Poly& rep) {
  if (rep.degree() < 1) return false;
  if (!((rep - cls) % ring.modulus()).is_zero()) return false;
  const Factorization fz = factor(rep);
  return fz.all_simple() && fz.max_degree() <= ring.degree() - 1;
}

unsigned scan_degree_cap(u64 q, unsigned r) {
  BigInt total = 0;
  for (unsigned k = 1; k < r; ++k) total += count_irreducible(q, k) / (q - 1) * k;
  if (total > 1u << 30) throw std::overflow_error("scan_degree_cap: cap too large");
  return static_cast<unsigned>(total);
}

namespace {

void require_class(const ResidueRing& ring, const Poly& f, const char* what) {
  if (!f.field().same_as(ring.field())) throw std::invalid_argument(std::string(what) + ": class over a different field");
  if (f.is_zero() || !f.is_monic() || f.degree() >= ring.degree())
    throw std::invalid_argument(std::string(what) + ": class must be nonzero, monic, of degree < r");
}

}  // namespace

ScanOutcome suitable_rep_scan(const ResidueRing& ring, const Poly& f) {
  require_class(ring, f, "suitable_rep_scan");
  const gf::Field& F = ring.field();
  const int r = ring.degree();
  ScanOutcome out;
  ++out.candidates;
  if (f.degree() >= 1 && is_squarefree_smooth(f, r - 1)) {
    out.rep = f;
    return out;
  }
  const unsigned cap = scan_degree_cap(ring.q(), static_cast<unsigned>(r));
  const u64 q = ring.q();
  const Coeffs& m = ring.modulus().coeffs();
  for (unsigned D = static_cast<unsigned>(r); D <= cap; ++D) {
    const unsigned j = D - static_cast<unsigned>(r);
    // g runs over all polynomials of degree exactly j in I-order: a base-q
    // counter whose top digit starts at 1.
    Coeffs g(j + 1, 0);
    g[j] = 1;
    for (;;) {
      ++out.candidates;
      Coeffs cand = dense::add(F, f.coeffs(), dense::mul(F, g, m));
      if (is_squarefree_smooth(F, cand, r - 1)) {
        out.rep = Poly(ring.base(), std::move(cand));
        return out;
      }
      std::size_t i = 0;
      while (i <= j) {
        if (++g[i] < q) break;
        g[i] = 0;
        ++i;
      }
      if (i > j) break;
      if (i == j && g[j] == 0) break;
    }
  }
  return out;
}

ReachabilitySet::ReachabilitySet(RingPtr ring, bool keep_witness) : ring_(std::move(ring)), keep_witness_(keep_witness) {
  if (ring_->size() > kDlogTableHardLimit) throw std::length_error("ReachabilitySet: q^r exceeds the table guard");
  run();
}

void ReachabilitySet::run() {
  const ResidueRing& R = *ring_;
  n_ = R.group_order();
  fold_ = n_ / (R.q() - 1);
  const std::size_t words = static_cast<std::size_t>((n_ + 63) / 64);
  bits_.assign(words, 0);
  class_hit_.assign(fold_, 0);
  uncovered_ = fold_;
  if (keep_witness_) reached_at_.assign(n_, UINT32_MAX);
  factors_ = irreducibles_up_to(R.base(), R.degree() - 1);
  const auto& logs = R.dlog_table();
  factor_logs_.clear();
  for (const Poly& u : factors_) factor_logs_.push_back(logs[R.reduce_index(u)]);

  const u64 n = n_;
  const unsigned tail = static_cast<unsigned>(n % 64);
  const std::uint64_t last_mask = tail ? (std::uint64_t{1} << tail) - 1 : ~std::uint64_t{0};
  // 64 bits of the snapshot starting at bit s (bits at or beyond n are zero).
  auto fetch = [&](const std::vector<std::uint64_t>& src, u64 s) -> std::uint64_t {
    const std::size_t w = static_cast<std::size_t>(s >> 6);
    const unsigned sh = static_cast<unsigned>(s & 63);
    std::uint64_t v = src[w] >> sh;
    if (sh && w + 1 < src.size()) v |= src[w + 1] << (64 - sh);
    return v;
  };
  auto fetch_cyclic = [&](const std::vector<std::uint64_t>& src, u64 s) -> std::uint64_t {
    if (s + 64 <= n) return fetch(src, s);
    const unsigned len = static_cast<unsigned>(n - s);
    std::uint64_t v = fetch(src, s);
    if (len < 64) v |= fetch(src, 0) << len;
    return v;
  };

  std::vector<std::uint64_t> next(words);
  for (std::size_t step = 0; step < factors_.size(); ++step) {
    const u64 e = factor_logs_[step];
    // next[bit d] = old[d] | old[d - e] | (d == e)
    for (std::size_t w = 0; w < words; ++w) {
      const u64 d0 = static_cast<u64>(w) * 64;
      const u64 s = (d0 + n - e % n) % n;
      next[w] = bits_[w] | fetch_cyclic(bits_, s);
    }
    next[words - 1] &= last_mask;
    next[static_cast<std::size_t>(e >> 6)] |= std::uint64_t{1} << (e & 63);
    for (std::size_t w = 0; w < words; ++w) {
      std::uint64_t fresh = next[w] & ~bits_[w];
      while (fresh) {
        const u64 k = static_cast<u64>(w) * 64 + static_cast<unsigned>(std::countr_zero(fresh));
        fresh &= fresh - 1;
        if (keep_witness_) reached_at_[k] = static_cast<u32>(step);
        auto& hit = class_hit_[folded_log(k)];
        if (!hit) {
          hit = 1;
          --uncovered_;
        }
      }
    }
    bits_.swap(next);
    steps_used_ = step + 1;
    if (uncovered_ == 0) break;
  }
}

bool ReachabilitySet::class_reachable(const Poly& f) const {
  require_class(*ring_, f, "class_reachable");
  return class_hit_[folded_log(ring_->dlog(f))] != 0;
}

std::optional<Poly> ReachabilitySet::witness(const Poly& f) const {
  if (!keep_witness_) throw std::logic_error("ReachabilitySet::witness: built without witness tracking");
  require_class(*ring_, f, "witness");
  const u64 lf = ring_->dlog(f) % fold_;
  for (u64 k = lf; k < n_; k += fold_) {
    if (!contains_log(k)) continue;
    Poly product = Poly::constant(ring_->base(), 1);
    u64 cur = k;
    for (;;) {
      const u32 step = reached_at_[cur];
      const u64 e = factor_logs_[step];
      product = product * factors_[step];
      if (cur == e) break;
      cur = (cur + n_ - e) % n_;
    }
    // product = c f mod F for a unit c; rescale so that it represents f.
    const Poly red = product % ring_->modulus();
    return product.scaled(ring_->field().inv(red.lead()));
  }
  return std::nullopt;
}

namespace {

std::vector<Poly> monic_classes(const ResidueRing& ring) {
  std::vector<Poly> out;
  for (int t = 0; t < ring.degree(); ++t)
    for (Poly& f : enumerate_monic(ring.base(), t)) out.push_back(std::move(f));
  return out;
}

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

void check_rep(const ResidueRing& ring, const ClassRecord& rec) {
  if (rec.rep && !is_suitable_representative(ring, rec.cls, *rec.rep))
    throw std::logic_error("verifier produced an invalid representative for class " + rec.cls.to_string());
}

}  // namespace

VerificationReport reachability_verify(const RingPtr& ring, bool records) {
  return verify_theorem(ring, VerifyOptions{Algorithm::Reach, 1, records});
}

VerificationReport verify_theorem(const RingPtr& ring, const VerifyOptions& options) {
  if (ring->degree() < 2) throw std::invalid_argument("verify_theorem: r must be >= 2");
  const auto t0 = std::chrono::steady_clock::now();
  VerificationReport rep;
  rep.ring = ring;
  rep.algorithm = options.algorithm;
  const auto classes = monic_classes(*ring);
  rep.classes_checked = classes.size();
  rep.classes.reserve(classes.size());
  for (const Poly& f : classes) rep.classes.push_back(ClassRecord{f, std::nullopt, false});

  const bool scan = options.algorithm != Algorithm::Reach;
  const bool reach = options.algorithm != Algorithm::Scan;
  std::vector<std::uint8_t> scan_ok(classes.size(), 0), reach_ok(classes.size(), 0);
  if (scan) {
    parallel_for(classes.size(), options.threads, [&](std::size_t i) {
      auto out = suitable_rep_scan(*ring, classes[i]);
      scan_ok[i] = out.rep.has_value();
      rep.classes[i].rep = std::move(out.rep);
    });
  }
  if (reach) {
    const bool want_witness = options.records && !scan;
    ReachabilitySet set(ring, want_witness);
    for (std::size_t i = 0; i < classes.size(); ++i) {
      reach_ok[i] = set.class_reachable(classes[i]);
      if (want_witness && reach_ok[i]) rep.classes[i].rep = set.witness(classes[i]);
    }
  }
  for (std::size_t i = 0; i < classes.size(); ++i) {
    auto& rec = rep.classes[i];
    const bool ok = scan ? scan_ok[i] : reach_ok[i];
    rec.reachable = ok;
    if (scan && reach && scan_ok[i] != reach_ok[i]) rep.algorithms_agree = false;
    if (!ok) rep.failures.push_back(rec.cls);
    check_rep(*ring, rec);
  }
  if (scan && rep.failures.empty()) {
    int M = 0;
    for (const auto& rec : rep.classes) M = std::max(M, rec.rep->degree());
    rep.M = M;
  }
  if (!options.records) rep.classes.clear();
  rep.elapsed_ms = ms_since(t0);
  return rep;
}

std::vector<std::pair<SweepEntry, std::string>> SweepReport::failures() const {
  std::vector<std::pair<SweepEntry, std::string>> out;
  for (const auto& e : entries)
    for (const auto& f : e.failures) out.emplace_back(e, f);
  return out;
}

std::vector<std::pair<u64, unsigned>> sweep_preset(std::string_view name) {
  std::vector<std::pair<u64, unsigned>> out;
  if (name == "q5r5") {
    for (u64 q : {2, 3, 4, 5})
      for (unsigned r = 2; r <= 5; ++r) out.emplace_back(q, r);
    return out;
  }
  if (name == "omega1") {
    for (u64 q : prime_powers_in(7, 64)) {
      const unsigned r0 = q < 9 ? 6 : q < 13 ? 5 : q < 23 ? 4 : q < 64 ? 3 : 2;
      for (unsigned r = 2; r < r0; ++r) out.emplace_back(q, r);
    }
    return out;
  }
  throw std::invalid_argument("sweep_preset: unknown preset '" + std::string(name) + "'");
}

namespace {

constexpr int kCacheVersion = 1;

std::filesystem::path cache_file(const std::filesystem::path& dir, Algorithm a, u64 q, unsigned r, const Poly& F) {
  std::ostringstream name;
  name << "v" << kCacheVersion << "-" << algorithm_name(a) << "-q" << q << "-r" << r << "-" << F.index() << ".json";
  return dir / name.str();
}

nlohmann::json entry_json(const SweepEntry& e) {
  nlohmann::json j{{"q", e.q}, {"r", e.r}, {"F", e.F}, {"field", e.field}, {"failures", e.failures}};
  j["M"] = e.M ? nlohmann::json(*e.M) : nlohmann::json(nullptr);
  return j;
}

std::optional<SweepEntry> load_entry(const std::filesystem::path& path, u64 q, unsigned r, const std::string& F,
                                     const std::string& field) {
  std::ifstream in(path);
  if (!in) return std::nullopt;
  try {
    const auto j = nlohmann::json::parse(in);
    if (j.at("cache_version").get<int>() != kCacheVersion) return std::nullopt;
    SweepEntry e;
    e.q = j.at("q").get<u64>();
    e.r = j.at("r").get<unsigned>();
    e.F = j.at("F").get<std::string>();
    e.field = j.at("field").get<std::string>();
    e.failures = j.at("failures").get<std::vector<std::string>>();
    if (!j.at("M").is_null()) e.M = j.at("M").get<int>();
    if (e.q != q || e.r != r || e.F != F || e.field != field) return std::nullopt;
    return e;
  } catch (const std::exception& ex) {
    std::cerr << "warning: ignoring unreadable cache entry " << path << ": " << ex.what() << "\n";
    return std::nullopt;
  }
}

void store_entry(const std::filesystem::path& path, const SweepEntry& e) {
  std::error_code ec;
  std::filesystem::create_directories(path.parent_path(), ec);
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    auto j = entry_json(e);
    j["cache_version"] = kCacheVersion;
    out << j.dump() << "\n";
    if (!out) {
      std::cerr << "warning: could not write cache entry " << tmp << "\n";
      std::filesystem::remove(tmp, ec);
      return;
    }
  }
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::cerr << "warning: could not publish cache entry " << path << ": " << ec.message() << "\n";
    std::filesystem::remove(tmp, ec);
  }
}

}  // namespace

SweepReport sweep(const std::vector<std::pair<u64, unsigned>>& pairs, const SweepOptions& options, std::string preset_name) {
  const auto t0 = std::chrono::steady_clock::now();
  SweepReport rep;
  rep.preset = std::move(preset_name);
  rep.algorithm = options.algorithm;
  rep.pairs = pairs;

  struct Job {
    u64 q;
    unsigned r;
    Poly F;
  };
  std::vector<Job> jobs;
  for (auto [q, r] : pairs) {
    auto field = gf::make_field_of_order(q);
    for (Poly& F : enumerate_irreducible_monic(field, static_cast<int>(r))) jobs.push_back({q, r, std::move(F)});
  }
  rep.rings = jobs.size();
  rep.entries.resize(jobs.size());
  std::atomic<u64> hits{0}, done{0};
  std::mutex progress_mutex;
  parallel_for(jobs.size(), options.threads, [&](std::size_t i) {
    const Job& job = jobs[i];
    const std::string Fs = job.F.to_string(), field = job.F.field().describe();
    std::optional<std::filesystem::path> path;
    if (options.cache_dir) {
      path = cache_file(*options.cache_dir, options.algorithm, job.q, job.r, job.F);
      if (auto cached = load_entry(*path, job.q, job.r, Fs, field)) {
        rep.entries[i] = std::move(*cached);
        ++hits;
        if (options.progress) {
          std::lock_guard lock(progress_mutex);
          options.progress(++done, jobs.size());
        }
        return;
      }
    }
    auto ring = make_ring(job.F);
    auto vr = verify_theorem(ring, VerifyOptions{options.algorithm, 1, false});
    if (!vr.algorithms_agree) throw std::logic_error("scan and reachability disagree modulo " + Fs);
    SweepEntry e{job.q, job.r, Fs, field, {}, vr.M};
    for (const Poly& f : vr.failures) e.failures.push_back(f.to_string());
    if (path) store_entry(*path, e);
    rep.entries[i] = std::move(e);
    if (options.progress) {
      std::lock_guard lock(progress_mutex);
      options.progress(++done, jobs.size());
    }
  });
  rep.cache_hits = hits;
  rep.elapsed_ms = ms_since(t0);
  return rep;
}

}  // namespace ffsmooth
