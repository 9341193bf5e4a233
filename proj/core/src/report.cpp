#include "ffsmooth/report.hpp"

#include <fstream>
#include <stdexcept>
#include <unistd.h>

namespace ffsmooth {

std::string_view tool_version() { return FFSMOOTH_VERSION; }

json make_report(std::string_view command, json config, json payload, double elapsed_ms) {
  json doc;
  doc["schema_version"] = kReportSchemaVersion;
  doc["tool"] = {{"name", "ffsmooth"}, {"version", std::string(tool_version())}};
  doc["command"] = std::string(command);
  doc["config"] = std::move(config);
  doc["payload"] = std::move(payload);
  doc["timing"] = {{"elapsed_ms", elapsed_ms}};
  return doc;
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  auto tmp = path;
  tmp += ".tmp" + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    out << text;
    out.flush();
    if (!out) {
      out.close();
      std::filesystem::remove(tmp);
      throw std::runtime_error("error writing " + tmp.string());
    }
  }
  std::filesystem::rename(tmp, path);
}

void write_json_file(const std::filesystem::path& path, const json& doc) { write_text_file(path, doc.dump(2) + "\n"); }

namespace {

json opt_poly(const std::optional<Poly>& p) { return p ? json(p->to_string()) : json(nullptr); }

std::string big(const BigInt& v) { return v.str(); }

json poly_list(const std::vector<Poly>& v) {
  json a = json::array();
  for (const auto& p : v) a.push_back(p.to_string());
  return a;
}

}  // namespace

json to_json(const Factorization& f) {
  json factors = json::array();
  for (const auto& [p, m] : f.factors) factors.push_back({{"poly", p.to_string()}, {"multiplicity", m}});
  return {{"unit", f.unit.to_string()}, {"factors", factors}};
}

json to_json(const VerificationReport& r) {
  const auto& ring = *r.ring;
  json j;
  j["q"] = ring.q();
  j["r"] = ring.degree();
  j["F"] = ring.modulus().to_string();
  j["field"] = ring.field().describe();
  j["algo"] = std::string(algorithm_name(r.algorithm));
  j["failures"] = poly_list(r.failures);
  j["M"] = r.M ? json(*r.M) : json(nullptr);
  j["classes_checked"] = r.classes_checked;
  j["algorithms_agree"] = r.algorithms_agree;
  json classes = json::array();
  for (const auto& c : r.classes)
    classes.push_back({{"class", c.cls.to_string()}, {"reachable", c.reachable}, {"rep", opt_poly(c.rep)}});
  j["classes"] = classes;
  return j;
}

json to_json(const SweepReport& r) {
  json j;
  j["preset"] = r.preset;
  j["algo"] = std::string(algorithm_name(r.algorithm));
  json pairs = json::array();
  for (auto [q, rr] : r.pairs) pairs.push_back({{"q", q}, {"r", rr}});
  j["pairs"] = pairs;
  j["rings"] = r.rings;
  json failures = json::array();
  for (const auto& [e, cls] : r.failures()) failures.push_back({{"q", e.q}, {"r", e.r}, {"F", e.F}, {"class", cls}});
  j["failures"] = failures;
  json entries = json::array();
  for (const auto& e : r.entries) {
    entries.push_back({{"q", e.q},
                       {"r", e.r},
                       {"F", e.F},
                       {"field", e.field},
                       {"failures", e.failures},
                       {"M", e.M ? json(*e.M) : json(nullptr)}});
  }
  j["entries"] = entries;
  return j;
}

json to_json(const CharSumReport& r) {
  json counts = json::array();
  for (u64 c : r.exact.counts) counts.push_back(c);
  return {{"d", r.d},
          {"length", r.length},
          {"principal", r.principal},
          {"counts_by_root_power", counts},
          {"vanishes", r.exact.vanishes_exactly()},
          {"sum_re", r.sum.real()},
          {"sum_im", r.sum.imag()},
          {"abs", r.abs},
          {"bound_lemma", r.bound_lemma},
          {"bound_eq21", r.bound_eq21},
          {"within_bounds", r.within_bounds}};
}

json to_json(const CosetSearch& c) {
  json reps = json::array();
  for (const auto& p : c.reps) reps.push_back(opt_poly(p));
  return {{"d", c.d}, {"degree_bound", c.degree_bound}, {"complete", c.complete()}, {"found", c.found()},
          {"reps", reps}};
}

json apparatus_json(const ApparatusState& state, const PairStatistics& w, const ASet& A,
                    const std::vector<ClosureHit>& hits) {
  const auto& ring = *state.ring;
  json per_d = json::array();
  for (std::size_t i = 0; i < hits.size(); ++i) {
    const auto& h = hits[i];
    per_d.push_back({{"d", h.d},
                     {"coset_reps_found", h.reps_found},
                     {"closure_k", h.k ? json(*h.k) : json(nullptr)}});
  }
  return {{"q", ring.q()},
          {"r", ring.degree()},
          {"F", ring.modulus().to_string()},
          {"S_F_size", state.S_F_size},
          {"S_F", poly_list(state.S_F_monic)},
          {"S_F_bound_ok", state.S_F_bound_ok},
          {"reps_complete", state.reps_complete},
          {"K", state.K},
          {"w_total", w.total},
          {"w_max", w.max},
          {"W", A.threshold},
          {"A", A.size()},
          {"A_bound_ok", A.bound_ok},
          {"A_float_agrees", A.float_agrees},
          {"per_d", per_d}};
}

json thresholds_json(const std::vector<ThresholdRow>& rows) {
  json out = json::array();
  for (const auto& row : rows) {
    json truth = json::array();
    for (bool b : row.truth) truth.push_back(b);
    out.push_back({{"q", row.q},
                   {"ineq_id", row.id},
                   {"r_min", row.r_min},
                   {"first_true_r", row.first_true_r ? json(*row.first_true_r) : json(nullptr)},
                   {"never_true_up_to", row.first_true_r ? json(nullptr) : json(row.never_true_up_to)},
                   {"truth", truth}});
  }
  return out;
}

json to_json(const Plus1Sequence& s) {
  json steps = json::array();
  for (const auto& st : s.steps)
    steps.push_back({{"term", st.term.to_string()},
                     {"h", st.h.to_string()},
                     {"h_plus_1", st.h_plus_1.to_string()},
                     {"factorization", to_json(factor(st.h_plus_1))}});
  json ooo = json::array();
  for (auto i : s.out_of_order) ooo.push_back(i);
  return {{"field", s.field->describe()}, {"terms", poly_list(s.terms)}, {"steps", steps}, {"out_of_order_after", ooo}};
}

json to_json(const EuclidSequence& s) {
  json steps = json::array();
  for (const auto& st : s.steps) {
    json b = json::array();
    for (const auto& c : st.candidates)
      b.push_back({{"term", c.g.to_string()},
                   {"h", c.h.to_string()},
                   {"h_plus_N_over_h", c.value.to_string()},
                   {"factorization", to_json(factor(c.value))}});
    steps.push_back({{"appended", st.appended.to_string()}, {"candidates", b}});
  }
  return {{"field", s.field->describe()}, {"terms", poly_list(s.terms)}, {"steps", steps}};
}

json to_json(const ExploreResult& r) {
  json hist = json::object();
  for (const auto& [k, v] : r.degree_one_histogram) hist[std::to_string(k)] = big(v);
  return {{"sequences", big(r.sequences)},
          {"max_degree_one", r.max_degree_one},
          {"degree_one_histogram", hist},
          {"distinct_states", r.distinct_states},
          {"repeat_seen", r.repeat_seen}};
}

}  // namespace ffsmooth
