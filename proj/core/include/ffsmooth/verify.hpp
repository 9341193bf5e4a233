// Existence of non-constant, square-free, (r-1)-smooth representatives for
// every nonzero residue class modulo an irreducible F of degree r.
//
// Classes are the monic polynomials of degree < r; class f "succeeds" when
// some polynomial congruent to a unit multiple of f is suitable, which by
// unit invariance is the same as f itself having a suitable representative.
#pragma once

#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ffsmooth/residue.hpp"

namespace ffsmooth {

enum class Algorithm { Scan, Reach, Both };
std::string algorithm_name(Algorithm a);
std::optional<Algorithm> parse_algorithm(std::string_view name);

/// Non-constant, square-free, (r-1)-smooth and congruent to cls mod F.
/// Uses full factorization, independently of the verifiers' fast tests.
bool is_suitable_representative(const ResidueRing& ring, const Poly& cls, const Poly& rep);

/// Degree of the product of all monic irreducibles of degree < r; no
/// suitable representative can be longer.
unsigned scan_degree_cap(u64 q, unsigned r);

struct ScanOutcome {
  std::optional<Poly> rep;
  u64 candidates = 0;
};

/// Candidates in strictly increasing degree: f, then f + gF with deg g =
/// D - r for D = r, r+1, ... up to the cap, g in I-order (every leading
/// coefficient).  The first suitable one has minimal degree.
ScanOutcome suitable_rep_scan(const ResidueRing& ring, const Poly& f);

/// Residues reachable as nonempty products of distinct monic irreducibles of
/// degree < r, stored as a bitset indexed by discrete log.
class ReachabilitySet {
 public:
  /// keep_witness records, per residue, the step that first reached it, so
  /// that products can be reconstructed (4 bytes per residue).
  ReachabilitySet(RingPtr ring, bool keep_witness);

  const ResidueRing& ring() const noexcept { return *ring_; }
  /// Residue g^k is a product of distinct small irreducibles.
  bool contains_log(u64 k) const noexcept { return (bits_[k >> 6] >> (k & 63)) & 1; }
  /// Monic class f: some unit multiple of f is reachable.
  bool class_reachable(const Poly& f) const;
  /// Every monic class reachable.
  bool all_classes_reachable() const noexcept { return uncovered_ == 0; }
  /// Number of monic irreducibles processed before every class was covered
  /// (all of them if some class never is).
  std::size_t steps_used() const noexcept { return steps_used_; }
  /// A product of distinct monic irreducibles congruent to a unit multiple
  /// of f, scaled so that it is congruent to f; nullopt when unreachable.
  std::optional<Poly> witness(const Poly& f) const;

 private:
  u64 folded_log(u64 k) const noexcept { return k % fold_; }
  void run();

  RingPtr ring_;
  u64 n_ = 0;     // q^r - 1
  u64 fold_ = 0;  // (q^r - 1)/(q - 1): logs of monic classes mod units
  std::vector<std::uint64_t> bits_;
  std::vector<std::uint8_t> class_hit_;
  u64 uncovered_ = 0;
  std::size_t steps_used_ = 0;
  std::vector<Poly> factors_;
  std::vector<u64> factor_logs_;
  bool keep_witness_ = false;
  std::vector<u32> reached_at_;
};

struct ClassRecord {
  Poly cls;
  std::optional<Poly> rep;  // scan: minimal degree; reachability: a product witness
  bool reachable = false;
};

struct VerificationReport {
  RingPtr ring;
  Algorithm algorithm = Algorithm::Reach;
  std::vector<ClassRecord> classes;
  std::vector<Poly> failures;
  /// Maximum over classes of the minimal representative degree; present
  /// when the scan ran and no class failed.
  std::optional<int> M;
  u64 classes_checked = 0;
  /// Scan and reachability agreed class by class (true unless both ran).
  bool algorithms_agree = true;
  double elapsed_ms = 0;
};

struct VerifyOptions {
  Algorithm algorithm = Algorithm::Reach;
  unsigned threads = 1;
  /// Keep per-class records (witnesses for the reachability algorithm).
  bool records = true;
};

VerificationReport reachability_verify(const RingPtr& ring, bool records = true);
VerificationReport verify_theorem(const RingPtr& ring, const VerifyOptions& options);

/// One verified modulus inside a sweep.
struct SweepEntry {
  u64 q = 0;
  unsigned r = 0;
  std::string F;        // modulus as printed
  std::string field;    // field description
  std::vector<std::string> failures;
  std::optional<int> M;
};

struct SweepReport {
  std::string preset;
  Algorithm algorithm = Algorithm::Reach;
  std::vector<std::pair<u64, unsigned>> pairs;
  std::vector<SweepEntry> entries;
  u64 rings = 0;
  u64 cache_hits = 0;
  double elapsed_ms = 0;
  /// (q, r, F, class) for every failing class.
  std::vector<std::pair<SweepEntry, std::string>> failures() const;
};

struct SweepOptions {
  Algorithm algorithm = Algorithm::Reach;
  unsigned threads = 1;
  std::optional<std::filesystem::path> cache_dir;
  /// Called after each finished ring: (done, total).
  std::function<void(u64, u64)> progress;
};

/// Pairs for a named preset: "omega1" or "q5r5".
std::vector<std::pair<u64, unsigned>> sweep_preset(std::string_view name);
/// Every monic irreducible F of degree r over F_q (default field model) for
/// each pair.  Cached entries are reused; cache problems only warn.
SweepReport sweep(const std::vector<std::pair<u64, unsigned>>& pairs, const SweepOptions& options,
                  std::string preset_name = "custom");

}  // namespace ffsmooth
