// JSON report envelopes and payload serializers shared by the command-line
// tool and the acceptance driver.
#pragma once

#include <filesystem>
#include <string_view>

#include <nlohmann/json.hpp>

#include "ffsmooth/apparatus.hpp"
#include "ffsmooth/bounds.hpp"
#include "ffsmooth/sequences.hpp"
#include "ffsmooth/verify.hpp"

namespace ffsmooth {

using json = nlohmann::ordered_json;

inline constexpr int kReportSchemaVersion = 1;

std::string_view tool_version();

/// {schema_version, tool, command, config, payload, timing}.  Only the
/// timing block varies between identical runs.
json make_report(std::string_view command, json config, json payload, double elapsed_ms);

/// Writes through a temporary file in the same directory, then renames.
void write_json_file(const std::filesystem::path& path, const json& doc);
/// Same for arbitrary text.
void write_text_file(const std::filesystem::path& path, const std::string& text);

json to_json(const Factorization& f);
json to_json(const VerificationReport& r);
json to_json(const SweepReport& r);
json to_json(const CharSumReport& r);
json to_json(const CosetSearch& c);
json apparatus_json(const ApparatusState& state, const PairStatistics& w, const ASet& A,
                    const std::vector<ClosureHit>& hits);
json thresholds_json(const std::vector<ThresholdRow>& rows);
json to_json(const Plus1Sequence& s);
json to_json(const EuclidSequence& s);
json to_json(const ExploreResult& r);

}  // namespace ffsmooth
