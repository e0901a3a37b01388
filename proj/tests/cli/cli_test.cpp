#include "hypershadow_cli/app.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "hypershadow_cli/output.hpp"

namespace cli = hypershadow::cli;

namespace {

struct Invocation {
  int code;
  std::string out;
  std::string err;
};

Invocation invoke(const std::vector<std::string>& args,
                  std::map<std::string, std::string> env = {{"SOURCE_DATE_EPOCH", "0"}}) {
  std::ostringstream out;
  std::ostringstream err;
  const cli::EnvLookup lookup = [env](const std::string& name) -> std::optional<std::string> {
    const auto it = env.find(name);
    if (it == env.end()) return std::nullopt;
    return it->second;
  };
  const int code = cli::run(args, out, err, lookup);
  return {code, out.str(), err.str()};
}

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream stream(line);
  while (std::getline(stream, field, sep)) fields.push_back(field);
  if (!line.empty() && line.back() == sep) fields.emplace_back();
  return fields;
}

// Parses simple CSV (no quoted fields) into header -> column values.
std::vector<std::map<std::string, std::string>> parse_csv(const std::string& text) {
  std::istringstream stream(text);
  std::string line;
  std::getline(stream, line);
  const auto header = split(line, ',');
  std::vector<std::map<std::string, std::string>> rows;
  while (std::getline(stream, line)) {
    const auto fields = split(line, ',');
    std::map<std::string, std::string> row;
    for (std::size_t i = 0; i < header.size(); ++i) row[header[i]] = i < fields.size() ? fields[i] : "";
    rows.push_back(row);
  }
  return rows;
}

double num(const std::string& field) { return std::strtod(field.c_str(), nullptr); }

TEST(Output, RealsUseSeventeenDigitsAndRoundTrip) {
  for (double value : {0.7340136762890959, 1.0 / 3.0, 1e-300, -2.5, 12.056209}) {
    const std::string text = cli::format_real(value);
    EXPECT_EQ(std::strtod(text.c_str(), nullptr), value) << text;
    EXPECT_EQ(text.find(','), std::string::npos);
  }
  EXPECT_EQ(cli::format_real(0.5), "0.5");
  EXPECT_EQ(cli::format_real(1.0 / 3.0), "0.33333333333333331");
}

TEST(Output, CsvEscaping) {
  EXPECT_EQ(cli::csv_escape("plain"), "plain");
  EXPECT_EQ(cli::csv_escape("a,b"), "\"a,b\"");
  EXPECT_EQ(cli::csv_escape("say \"hi\""), "\"say \"\"hi\"\"\"");
}

TEST(Output, Timestamp) {
  EXPECT_EQ(cli::iso8601_utc(0), "1970-01-01T00:00:00Z");
  EXPECT_EQ(cli::iso8601_utc(1700000000), "2023-11-14T22:13:20Z");
}

TEST(ShadowExact, UnitBallsInThreeDimensions) {
  const auto run = invoke({"shadow", "exact", "--n", "3", "--r", "1"});
  ASSERT_EQ(run.code, 0) << run.err;
  EXPECT_EQ(run.out.substr(0, run.out.find('\n')), "n,r,single_fraction,union_fraction,bound,note");
  const auto rows = parse_csv(run.out);
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_NEAR(num(rows[0].at("union_fraction")), 4 * (1 - std::sqrt(2.0 / 3.0)), 1e-15);
  EXPECT_NEAR(num(rows[0].at("single_fraction")), 0.5 * (1 - std::sqrt(2.0 / 3.0)), 1e-15);
  EXPECT_EQ(run.out.find('\r'), std::string::npos);
}

TEST(ShadowExact, ZeroRadiusGivesZeros) {
  const auto rows = parse_csv(invoke({"shadow", "exact", "--n", "3", "--r", "0"}).out);
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_EQ(num(rows[0].at("single_fraction")), 0.0);
  EXPECT_EQ(num(rows[0].at("union_fraction")), 0.0);
  EXPECT_EQ(num(rows[0].at("bound")), 0.0);
}

TEST(ShadowExact, TwentyDimensions) {
  const auto rows = parse_csv(invoke({"shadow", "exact", "--n", "20", "--r", "1"}).out);
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_LT(num(rows[0].at("union_fraction")), 3e-5);
  EXPECT_GE(num(rows[0].at("bound")), num(rows[0].at("single_fraction")));
}

TEST(ShadowExact, UnionOmittedWhenShadowsOverlap) {
  const auto rows = parse_csv(invoke({"shadow", "exact", "--n", "5", "--r", "1.5"}).out);
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_EQ(rows[0].at("union_fraction"), "");
  EXPECT_NE(rows[0].at("note").find("overlap"), std::string::npos);
}

TEST(ShadowExact, GridOfValues) {
  const auto rows = parse_csv(invoke({"shadow", "exact", "--n", "3,4", "--r", "0.5", "1"}).out);
  EXPECT_EQ(rows.size(), 4u);
}

TEST(ShadowExact, DomainErrorExitsWithTwo) {
  const auto run = invoke({"shadow", "exact", "--n", "4", "--r", "3"});
  EXPECT_EQ(run.code, cli::kExitUsage);
  EXPECT_TRUE(run.out.empty());
  EXPECT_EQ(std::count(run.err.begin(), run.err.end(), '\n'), 1);
}

TEST(ShadowMc, DeterministicAndWorkerIndependent) {
  const std::vector<std::string> base = {"shadow", "mc", "--n", "5", "--r", "1.2", "--trials", "20000"};
  auto with_workers = [&](const std::string& workers) {
    auto args = base;
    args.insert(args.end(), {"--workers", workers});
    return invoke(args);
  };
  const auto first = with_workers("1");
  ASSERT_EQ(first.code, 0) << first.err;
  EXPECT_EQ(first.out, with_workers("1").out);
  EXPECT_EQ(first.out, with_workers("8").out);
  EXPECT_EQ(first.out, with_workers("2").out);
}

TEST(ShadowMc, AgreesWithExactValue) {
  const auto rows =
      parse_csv(invoke({"shadow", "mc", "--n", "3", "--r", "1", "--trials", "1000000"}).out);
  ASSERT_EQ(rows.size(), 1u);
  const double p = num(rows[0].at("p_hat"));
  const double exact = 4 * (1 - std::sqrt(2.0 / 3.0));
  EXPECT_LE(std::fabs(p - exact), 3 * std::sqrt(p * (1 - p) / 1e6));
  EXPECT_EQ(rows[0].at("seed"), std::to_string(cli::kDefaultSeed));
  EXPECT_EQ(rows[0].at("ci_level"), "0.94999999999999996");
}

TEST(ShadowMc, TrialsFromEnvironmentAndFlagPrecedence) {
  std::map<std::string, std::string> env = {{"SOURCE_DATE_EPOCH", "0"},
                                            {cli::kTrialsEnvVar, "1234"}};
  auto rows = parse_csv(invoke({"shadow", "mc", "--n", "4", "--r", "1"}, env).out);
  EXPECT_EQ(rows.at(0).at("trials"), "1234");
  rows = parse_csv(invoke({"shadow", "mc", "--n", "4", "--r", "1", "--trials", "99"}, env).out);
  EXPECT_EQ(rows.at(0).at("trials"), "99");
  rows = parse_csv(invoke({"shadow", "mc", "--n", "4", "--r", "0"}).out);
  EXPECT_EQ(rows.at(0).at("trials"), std::to_string(cli::kDefaultTrials));

  env[cli::kTrialsEnvVar] = "lots";
  EXPECT_EQ(invoke({"shadow", "mc", "--n", "4", "--r", "1"}, env).code, cli::kExitUsage);
  env[cli::kTrialsEnvVar] = "0";
  EXPECT_EQ(invoke({"shadow", "mc", "--n", "4", "--r", "1"}, env).code, cli::kExitUsage);
}

TEST(ShadowMc, SeedChangesOutput) {
  const auto a = invoke({"shadow", "mc", "--n", "6", "--r", "1.5", "--trials", "5000", "--seed", "1"});
  const auto b = invoke({"shadow", "mc", "--n", "6", "--r", "1.5", "--trials", "5000", "--seed", "2"});
  EXPECT_NE(a.out, b.out);
}

TEST(Threshold, CriticalRadius) {
  const auto rows = parse_csv(invoke({"threshold", "--n", "400", "--z", "0"}).out);
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_NEAR(num(rows[0].at("r")), 12.0562, 1e-4);
  EXPECT_EQ(num(rows[0].at("predicted_alpha")), 0.5);
  EXPECT_EQ(rows[0].at("regime"), "critical");
  EXPECT_EQ(rows[0].at("p_hat"), "");
}

TEST(Threshold, TargetHalfIsZeroOffset) {
  const auto rows = parse_csv(invoke({"threshold", "--target", "0.5"}).out);
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_EQ(num(rows[0].at("z")), 0.0);
  EXPECT_EQ(rows[0].at("r"), "");
}

TEST(Threshold, RadiusOutOfRange) {
  EXPECT_EQ(invoke({"threshold", "--n", "4", "--z", "50"}).code, cli::kExitUsage);
}

TEST(Threshold, NeedsExactlyOneOffsetFlag) {
  EXPECT_EQ(invoke({"threshold", "--n", "400"}).code, cli::kExitUsage);
  EXPECT_EQ(invoke({"threshold", "--n", "400", "--z", "0", "--target", "0.5"}).code,
            cli::kExitUsage);
}

TEST(Threshold, MonteCarloColumns) {
  const auto rows = parse_csv(
      invoke({"threshold", "--n", "100", "--z", "-1", "1", "--trials", "2000"}).out);
  ASSERT_EQ(rows.size(), 2u);
  for (const auto& row : rows) {
    EXPECT_EQ(row.at("trials"), "2000");
    EXPECT_NEAR(num(row.at("p_hat")), num(row.at("predicted_alpha")), 0.15);
  }
}

TEST(Limits, ReportRows) {
  const auto run = invoke({"limits", "--n", "200", "--trials", "2000", "--kind", "ratio_centered"});
  ASSERT_EQ(run.code, 0) << run.err;
  const auto rows = parse_csv(run.out);
  ASSERT_EQ(rows.size(), 7u);
  EXPECT_EQ(rows[0].at("check"), "mean");
  EXPECT_EQ(rows[1].at("check"), "variance");
  EXPECT_NEAR(num(rows[1].at("expected")), 8 / std::numbers::pi - 24 / (std::numbers::pi * std::numbers::pi), 1e-15);
  for (std::size_t i = 2; i < rows.size(); ++i) EXPECT_EQ(rows[i].at("check"), "quantile");
}

TEST(Limits, AllKindsAndUniformLaw) {
  auto rows = parse_csv(invoke({"limits", "--n", "100", "--trials", "1500"}).out);
  EXPECT_EQ(rows.size(), 21u);
  rows = parse_csv(invoke({"limits", "--n", "100", "--trials", "1500", "--law", "uniform",
                           "--kind", "ratio_centered"})
                       .out);
  ASSERT_FALSE(rows.empty());
  EXPECT_NEAR(num(rows[1].at("expected")), 0.075, 1e-15);
}

TEST(Limits, RejectsUnknownKind) {
  EXPECT_EQ(invoke({"limits", "--n", "100", "--kind", "bogus"}).code, cli::kExitUsage);
}

TEST(Concentration, Subcommands) {
  auto rows = parse_csv(invoke({"concentration", "pmf", "--n", "4"}).out);
  ASSERT_EQ(rows.size(), 5u);
  EXPECT_NEAR(num(rows[2].at("pmf")), 0.375, 1e-15);
  EXPECT_EQ(num(rows[2].at("cosine")), 0.0);

  rows = parse_csv(invoke({"concentration", "slab", "--n", "1000", "--eps", "0.05"}).out);
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_NEAR(num(rows[0].at("exact")), num(rows[0].at("normal_approx")), 1e-3);
  EXPECT_EQ(rows[0].at("approximate"), "false");

  rows = parse_csv(invoke({"concentration", "cap", "--n", "1000", "--theta", "0.7853981633974483"}).out);
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_LT(num(rows[0].at("mass")), 1e-50);

  EXPECT_EQ(invoke({"concentration", "cap", "--n", "10", "--theta", "4"}).code, cli::kExitUsage);
}

TEST(Steele, Range) {
  const auto rows = parse_csv(invoke({"steele", "--from", "2", "--to", "12"}).out);
  ASSERT_EQ(rows.size(), 11u);
  for (const auto& row : rows) {
    const int n = std::stoi(row.at("n"));
    EXPECT_EQ(row.at("escapes_cube"), n >= 10 ? "true" : "false") << n;
  }
  auto single = parse_csv(invoke({"steele", "--n", "9", "100"}).out);
  ASSERT_EQ(single.size(), 2u);
  EXPECT_EQ(single[0].at("inner_radius"), "2");
  EXPECT_EQ(single[0].at("escapes_cube"), "false");
  EXPECT_EQ(single[1].at("inner_radius"), "9");
  EXPECT_EQ(single[1].at("escapes_cube"), "true");
  EXPECT_EQ(invoke({"steele"}).code, cli::kExitUsage);
}

TEST(Json, RowsAndManifest) {
  const auto run = invoke({"shadow", "mc", "--n", "3", "--r", "1", "--trials", "1000",
                           "--format", "json"});
  ASSERT_EQ(run.code, 0) << run.err;
  const auto json = nlohmann::json::parse(run.out);
  EXPECT_EQ(json["manifest"]["command"], "shadow mc");
  EXPECT_EQ(json["manifest"]["seed"], cli::kDefaultSeed);
  EXPECT_EQ(json["manifest"]["tool_version"], cli::tool_version());
  EXPECT_EQ(json["manifest"]["timestamp"], "1970-01-01T00:00:00Z");
  EXPECT_EQ(json["manifest"]["parameters"]["trials"], 1000);
  ASSERT_EQ(json["rows"].size(), 1u);
  EXPECT_EQ(json["rows"][0]["trials"], 1000);
  EXPECT_TRUE(json["rows"][0]["p_hat"].is_number_float());
}

TEST(Json, EmptyCellsAreNull) {
  const auto run = invoke({"shadow", "exact", "--n", "2", "--r", "1.2", "--format", "json"});
  const auto json = nlohmann::json::parse(run.out);
  EXPECT_TRUE(json["rows"][0]["union_fraction"].is_null());
  EXPECT_TRUE(json["rows"][0]["bound"].is_null());
}

TEST(Files, OutputAndManifestSideFile) {
  const auto dir = std::filesystem::temp_directory_path() / "hypershadow_cli_test";
  std::filesystem::create_directories(dir);
  const auto csv = (dir / "steele.csv").string();
  const auto run = invoke({"steele", "--n", "4", "--output", csv});
  ASSERT_EQ(run.code, 0) << run.err;
  EXPECT_TRUE(run.out.empty());
  std::ifstream table(csv);
  std::stringstream contents;
  contents << table.rdbuf();
  EXPECT_EQ(contents.str(), "n,inner_radius,escapes_cube\n4,1,false\n");
  std::ifstream manifest_file(csv + ".manifest.json");
  ASSERT_TRUE(manifest_file.good());
  const auto manifest = nlohmann::json::parse(manifest_file);
  EXPECT_EQ(manifest["command"], "steele");
  std::filesystem::remove_all(dir);
}

TEST(Usage, HelpVersionAndErrors) {
  EXPECT_EQ(invoke({"--help"}).code, 0);
  const auto version = invoke({"--version"});
  EXPECT_EQ(version.code, 0);
  EXPECT_NE(version.out.find(cli::tool_version()), std::string::npos);
  EXPECT_EQ(invoke({}).code, cli::kExitUsage);
  EXPECT_EQ(invoke({"bogus"}).code, cli::kExitUsage);
  EXPECT_EQ(invoke({"shadow"}).code, cli::kExitUsage);
  EXPECT_EQ(invoke({"shadow", "exact", "--n", "3"}).code, cli::kExitUsage);
  EXPECT_EQ(invoke({"shadow", "exact", "--n", "three", "--r", "1"}).code, cli::kExitUsage);
  EXPECT_EQ(invoke({"steele", "--n", "4", "--format", "xml"}).code, cli::kExitUsage);
}

}  // namespace
