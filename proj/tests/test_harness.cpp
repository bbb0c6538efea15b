#include <gtest/gtest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "hbent/errors.hpp"
#include "hbent/harness.hpp"

using namespace hbent;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

fs::path scratch(const std::string& name) {
  auto p = fs::temp_directory_path() / ("hbent_test_" + name);
  fs::remove_all(p);
  return p;
}

ExperimentSpec small_spec(const fs::path& out) {
  ExperimentSpec s;
  s.name = "small";
  s.engine.n = 6;
  s.engine.d = 3;
  s.engine.encoding = Encoding::wanf;
  s.engine.k = 16;
  s.engine.population_size = 20;
  s.engine.max_evaluations = 2000;
  s.runs = 6;
  s.base_seed = 100;
  s.output_path = out;
  return s;
}

}  // namespace

TEST(SuccessTable, Labels) {
  EngineConfig c;
  EXPECT_EQ(SuccessTable::row_label(c), "unrestricted");
  EXPECT_EQ(SuccessTable::column_label(c), "rANF");
  c.fitness = FitnessKind::bent_k;
  c.k = 16;
  EXPECT_EQ(SuccessTable::row_label(c), "16");
  c.encoding = Encoding::wanf;
  c.local_search = LocalSearchConfig{};
  EXPECT_EQ(SuccessTable::column_label(c), "wANF/LS");
}

TEST(SuccessTable, CsvRoundTripAndOrdering) {
  SuccessTable t;
  t.set(8, "39", "wANF", {4, 30});
  t.set(6, "16", "TT", {30, 30});
  t.set(6, "unrestricted", "GP", {21, 30});
  t.set(8, "unrestricted", "rANF/LS", {0, 30});
  const auto csv = t.to_csv();
  EXPECT_EQ(csv,
            "n,weight,GP,TT,rANF,wANF,rANF/LS,wANF/LS\n"
            "6,unrestricted,21/30,,,--,,--\n"
            "6,16,,30/30,,,,\n"
            "8,unrestricted,,,,--,0/30,--\n"
            "8,39,,,,4/30,,\n");
  EXPECT_EQ(SuccessTable::from_csv(csv).to_csv(), csv);
  EXPECT_THROW(SuccessTable::from_csv("a,b\n"), ParseError);
}

TEST(Experiment, RecordsAreReplayableByteForByte) {
  const auto dir = scratch("replay");
  auto spec = small_spec(dir / "a");
  const auto first = run_experiment(spec);
  spec.output_path = dir / "b";
  spec.workers = 3;
  const auto second = run_experiment(spec);
  EXPECT_EQ(slurp(first.records_file), slurp(second.records_file));
  EXPECT_EQ(slurp(first.table_file), slurp(second.table_file));
  fs::remove_all(dir);
}

TEST(Experiment, RecordsMatchResultsAndTable) {
  const auto dir = scratch("records");
  const auto spec = small_spec(dir);
  const auto batch = run_experiment(spec);
  std::istringstream lines(slurp(batch.records_file));
  std::string line;
  int index = 0, successes = 0;
  while (std::getline(lines, line)) {
    const auto j = nlohmann::json::parse(line);
    EXPECT_EQ(j["run"], index);
    EXPECT_EQ(j["seed"], spec.base_seed + static_cast<std::uint64_t>(index));
    EXPECT_EQ(j["terms"], 16);
    EXPECT_LE(j["trace"].size(), 1000u);
    successes += j["success"].get<bool>();
    ++index;
  }
  EXPECT_EQ(index, spec.runs);
  EXPECT_EQ(successes, batch.successes);
  EXPECT_TRUE(fs::exists(dir / "runs" / "small_run000.jsonl"));

  const auto table = SuccessTable::from_csv(slurp(batch.table_file));
  const auto* cell = table.find(6, "16", "wANF");
  ASSERT_NE(cell, nullptr);
  EXPECT_EQ(cell->successes, successes);
  EXPECT_EQ(cell->runs, spec.runs);
  fs::remove_all(dir);
}

TEST(Experiment, TableMergesAcrossBatches) {
  const auto dir = scratch("merge");
  auto spec = small_spec(dir);
  run_experiment(spec);
  spec.name = "quad";
  spec.engine.d = 2;
  spec.engine.encoding = Encoding::tt;
  spec.engine.k.reset();
  const auto batch = run_experiment(spec);
  const auto table = SuccessTable::from_csv(slurp(batch.table_file));
  EXPECT_NE(table.find(6, "16", "wANF"), nullptr);
  EXPECT_NE(table.find(6, "unrestricted", "TT"), nullptr);
  fs::remove_all(dir);
}

TEST(Experiment, InvalidSpecsAreRejectedBeforeWork) {
  auto spec = small_spec(scratch("invalid"));
  spec.runs = 0;
  EXPECT_THROW(run_experiment(spec), ConfigError);
  spec.runs = 1;
  spec.name = "../escape";
  EXPECT_THROW(run_experiment(spec), ConfigError);
  EXPECT_FALSE(fs::exists(spec.output_path));
}

TEST(Cli, VerifyReportsBentQuadratic) {
  const auto dir = scratch("cli");
  fs::create_directories(dir);
  std::ofstream(dir / "f.anf") << "x1x2 + x3x4 + x5x6\n";
  const auto cmd = std::string(HBENT_CLI_PATH) + " verify " + (dir / "f.anf").string() +
                   " --degree 2 > " + (dir / "out.txt").string();
  ASSERT_EQ(std::system(cmd.c_str()), 0);
  const auto out = slurp(dir / "out.txt");
  EXPECT_NE(out.find("bent: true"), std::string::npos);
  EXPECT_NE(out.find("nl: 28"), std::string::npos);
  EXPECT_NE(out.find("homogeneous(2): true"), std::string::npos);
  EXPECT_NE(out.find("terms: 3"), std::string::npos);
  EXPECT_NE(out.find("fit_bent: 28.000000"), std::string::npos);
  fs::remove_all(dir);
}

TEST(Cli, VerifyReportsParsePosition) {
  const auto dir = scratch("cli_err");
  fs::create_directories(dir);
  std::ofstream(dir / "bad.anf") << "x1x2 + x3?x4";
  const auto cmd = std::string(HBENT_CLI_PATH) + " verify " + (dir / "bad.anf").string() +
                   " 2> " + (dir / "err.txt").string();
  EXPECT_NE(std::system(cmd.c_str()), 0);
  EXPECT_NE(slurp(dir / "err.txt").find("position 9"), std::string::npos);
  fs::remove_all(dir);
}
