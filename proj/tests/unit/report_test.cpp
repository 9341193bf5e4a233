#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "ffsmooth/counts.hpp"
#include "ffsmooth/report.hpp"
#include "ffsmooth/suite.hpp"

using namespace ffsmooth;

namespace {

std::filesystem::path scratch_dir() {
  auto d = std::filesystem::temp_directory_path() / ("ffsmooth_report_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()));
  std::filesystem::create_directories(d);
  return d;
}

}  // namespace

TEST(Report, EnvelopeFieldsInOrder) {
  auto doc = make_report("verify", {{"q", "2"}}, {{"x", 1}}, 12.5);
  std::vector<std::string> keys;
  for (auto& [k, v] : doc.items()) keys.push_back(k);
  EXPECT_EQ(keys, (std::vector<std::string>{"schema_version", "tool", "command", "config", "payload", "timing"}));
  EXPECT_EQ(doc["schema_version"], kReportSchemaVersion);
  EXPECT_EQ(doc["tool"]["version"], std::string(tool_version()));
  EXPECT_EQ(doc["timing"]["elapsed_ms"], 12.5);
}

TEST(Report, AtomicWriteReplacesAndLeavesNoTemporary) {
  auto dir = scratch_dir();
  auto path = dir / "out.json";
  write_json_file(path, {{"a", 1}});
  write_json_file(path, {{"a", 2}});
  std::ifstream in(path);
  EXPECT_EQ(json::parse(in)["a"], 2);
  int files = 0;
  for (auto& e : std::filesystem::directory_iterator(dir)) {
    (void)e;
    ++files;
  }
  EXPECT_EQ(files, 1);
  std::filesystem::remove_all(dir);
}

TEST(Report, WriteIntoMissingDirectoryThrows) {
  EXPECT_ANY_THROW(write_text_file("/nonexistent-dir-ffsmooth/x.txt", "x"));
}

TEST(Report, VerifyPayload) {
  auto F = gf::make_field_of_order(2);
  auto ring = make_ring(parse_poly(F, "X^3 + X + 1"));
  auto r = verify_theorem(ring, {Algorithm::Both, 1, true});
  auto j = to_json(r);
  ASSERT_EQ(j["failures"].size(), 1u);
  EXPECT_EQ(j["failures"][0], "1");
  EXPECT_TRUE(j["algorithms_agree"].get<bool>());
  // Reproducible apart from timing.
  auto again = to_json(verify_theorem(ring, {Algorithm::Both, 2, true}));
  EXPECT_EQ(j.dump(), again.dump());
}

TEST(Report, Plus1Payload) {
  auto F = gf::make_field_of_order(2);
  auto j = to_json(plus1_sequence(F, 5, 8));
  ASSERT_EQ(j["terms"].size(), 5u);
  EXPECT_EQ(j["terms"][0], "X");
  EXPECT_EQ(j["terms"][3], "X^4 + X + 1");
}

TEST(Report, ExplorePayloadCountsAsStrings) {
  auto F = gf::make_field_of_order(3);
  auto j = to_json(explore(F, {Poly::x(F)}, 4, {}));
  EXPECT_TRUE(j["sequences"].is_string());
}

TEST(Suite, TamperedCountTurnsCountingCheckRed) {
  SuiteOptions o;
  o.only = {7};
  EXPECT_TRUE(run_criterion(7, o).passed);
  o.count_irreducible = count_irreducible_tampered;
  EXPECT_FALSE(run_criterion(7, o).passed);
}

TEST(Suite, TamperedCountDiffersOnlyFromDegreeTwo) {
  EXPECT_EQ(count_irreducible_tampered(5, 1), count_irreducible(5, 1));
  EXPECT_NE(count_irreducible_tampered(5, 2), count_irreducible(5, 2));
}

TEST(Suite, CheapCriteriaPass) {
  SuiteOptions o;
  o.profile = SuiteProfile::Quick;
  for (int id : {3, 9}) {
    auto r = run_criterion(id, o);
    EXPECT_TRUE(r.passed) << criterion_name(id);
    EXPECT_EQ(r.id, id);
  }
}

TEST(Suite, NamesDefinedForEveryCriterion) {
  for (int id = 1; id <= kCriterionCount; ++id) EXPECT_FALSE(criterion_name(id).empty());
}
