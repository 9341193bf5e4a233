#include "ffsmooth/apparatus.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "ffsmooth/counts.hpp"
#include "ffsmooth/factor.hpp"

namespace ffsmooth {

namespace {

std::vector<u64> small_divisors(u64 n, unsigned r) {
  std::vector<u64> out;
  for (u64 d : divisors(n))
    if (d < r) out.push_back(d);
  return out;
}

void require_small(const ResidueRing& ring, const char* what) {
  if (ring.size() > kApparatusLimit) throw std::length_error(std::string(what) + ": q^r exceeds 2^14");
}

}  // namespace

ApparatusState build_apparatus(const RingPtr& ring) {
  require_small(*ring, "build_apparatus");
  ApparatusState st;
  st.ring = ring;
  const unsigned r = static_cast<unsigned>(ring->degree());
  const u64 q = ring->q();
  st.reps_complete = true;
  std::set<Poly, PolyOrderLess> S;
  for (u64 d : small_divisors(ring->group_order(), r)) {
    st.cosets.push_back(find_coset_reps(*ring, d, static_cast<int>(r)));
    st.reps_complete = st.reps_complete && st.cosets.back().complete();
    for (const auto& rep : st.cosets.back().reps)
      if (rep)
        for (const auto& [u, e] : factor(*rep).factors) S.insert(u);
  }
  st.S_F_monic.assign(S.begin(), S.end());
  st.S_F_size = (q - 1) * st.S_F_monic.size();
  st.irreducible_total = static_cast<u64>(count_irreducible_below(q, r));
  st.K = st.irreducible_total - st.S_F_size;
  st.S_F_bound_ok = BigInt(st.S_F_size) < BigInt(q - 1) * r * r * r;
  return st;
}

PairStatistics w_statistics(const ApparatusState& state, PairConvention convention) {
  if (state.K > 100000) throw std::length_error("w_statistics: K exceeds 10^5");
  const ResidueRing& R = *state.ring;
  const u64 n = R.group_order();
  const u64 fold = n / (R.q() - 1);
  const std::set<Poly, PolyOrderLess> excluded(state.S_F_monic.begin(), state.S_F_monic.end());
  // Unit multiples c u have logs log u + j fold, one for each j.
  std::vector<u64> cnt(n, 0);
  for (const Poly& u : irreducibles_up_to(R.base(), R.degree() - 1)) {
    if (excluded.count(u)) continue;
    const u64 lu = R.dlog(u);
    for (u64 j = 0; j < R.q() - 1; ++j) ++cnt[(lu + j * fold) % n];
  }
  std::vector<u64> logs;
  for (u64 x = 0; x < n; ++x)
    if (cnt[x]) logs.push_back(x);
  // Ordered pairs by cyclic self-convolution, then fold to unordered.
  std::vector<u64> ordered(n, 0), diagonal(n, 0);
  for (u64 x : logs) {
    diagonal[(2 * x) % n] += cnt[x];
    for (u64 y : logs) ordered[(x + y) % n] += cnt[x] * cnt[y];
  }
  PairStatistics st;
  st.convention = convention;
  st.w.assign(n, 0);
  for (u64 s = 0; s < n; ++s) {
    st.w[s] = convention == PairConvention::Distinct ? (ordered[s] - diagonal[s]) / 2 : (ordered[s] + diagonal[s]) / 2;
    st.total += st.w[s];
    st.max = std::max(st.max, st.w[s]);
  }
  return st;
}

ASet build_A_set(const ApparatusState& state, const PairStatistics& stats) {
  const ResidueRing& R = *state.ring;
  const u64 q = R.q();
  const unsigned r = static_cast<unsigned>(R.degree());
  // W^20 q^(10r) > K^20 q^11
  const BigInt rhs = boost::multiprecision::pow(BigInt(state.K), 20) * big_pow(q, 11);
  const BigInt scale = big_pow(q, 10 * r);
  auto above = [&](u64 w) { return boost::multiprecision::pow(BigInt(w), 20) * scale > rhs; };
  u64 lo = 0, hi = state.K + 1;  // above(hi) holds since K q^(-r/2 + 11/20) < K + 1 for r >= 2
  while (!above(hi)) hi *= 2;
  while (lo < hi) {
    const u64 mid = lo + (hi - lo) / 2;
    if (above(mid))
      hi = mid;
    else
      lo = mid + 1;
  }
  ASet A;
  A.threshold = lo;
  const double tf = static_cast<double>(state.K) * std::pow(static_cast<double>(q), -static_cast<double>(r) / 2 + 0.55);
  A.float_agrees = true;
  for (u64 s = 0; s < stats.w.size(); ++s) {
    const bool in = stats.w[s] >= A.threshold;
    if (in) A.logs.push_back(s);
    if (in != (static_cast<double>(stats.w[s]) > tf)) A.float_agrees = false;
  }
  A.bound_ok = BigInt(A.size()) * r > BigInt(R.group_order()) + 2 * r;
  return A;
}

namespace {

std::vector<bool> sumset(const std::vector<bool>& P, const std::vector<u64>& logs, u64 n) {
  std::vector<bool> out(n, false);
  for (u64 x = 0; x < n; ++x)
    if (P[x])
      for (u64 a : logs) out[(x + a) % n] = true;
  return out;
}

}  // namespace

std::vector<bool> kfold_closure(const ApparatusState& state, const ASet& A, unsigned k) {
  if (k < 1) throw std::invalid_argument("kfold_closure: k must be >= 1");
  require_small(*state.ring, "kfold_closure");
  const u64 n = state.ring->group_order();
  std::vector<bool> P(n, false);
  for (u64 a : A.logs) P[a] = true;
  for (unsigned j = 1; j < k; ++j) P = sumset(P, A.logs, n);
  return P;
}

std::vector<ClosureHit> closure_hits(const ApparatusState& state, const ASet& A) {
  const u64 n = state.ring->group_order();
  const unsigned r = static_cast<unsigned>(state.ring->degree());
  std::vector<ClosureHit> out;
  for (const auto& cs : state.cosets) out.push_back({cs.d, cs.complete(), std::nullopt});
  std::vector<bool> P(n, false);
  for (u64 a : A.logs) P[a] = true;
  for (unsigned k = 1; k <= 2 * r + 1; ++k) {
    if (std::all_of(out.begin(), out.end(), [](const ClosureHit& h) { return h.k.has_value(); })) break;
    if (k > 1) P = sumset(P, A.logs, n);
    for (auto& hit : out) {
      if (hit.k) continue;
      bool all = true;
      for (u64 x = 0; x < n && all; x += hit.d) all = P[x];
      if (all) hit.k = k;
    }
  }
  return out;
}

}  // namespace ffsmooth
