#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "al_ist/cli.hpp"
#include "al_ist/io.hpp"
#include "oracles.hpp"

using namespace al_ist;

namespace {

namespace fs = std::filesystem;

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "al_ist_tests";
  fs::create_directories(dir);
  return dir / name;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run_job(const cli::JobSpec& job) {
  std::ostringstream out, err;
  const int code = cli::run(job, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::vector<double>> parse_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::getline(in, line);
  std::vector<std::vector<double>> rows;
  while (std::getline(in, line)) {
    std::vector<double> row;
    std::istringstream cells(line);
    std::string cell;
    while (std::getline(cells, cell, ',')) row.push_back(std::stod(cell));
    rows.push_back(row);
  }
  return rows;
}

}  // namespace

TEST(Io, SequenceRoundTripIsBitExact) {
  std::mt19937_64 gen(71);
  const Sequence q = oracle::random_sequence(gen, 9, -4, 0.9);
  EXPECT_EQ(io::sequence_from_json(io::sequence_to_json(q)), q);
  const fs::path p = scratch("roundtrip.json");
  io::write_sequence(p.string(), q);
  EXPECT_EQ(io::read_sequence(p.string()), q);
}

TEST(Io, RejectsMalformedDocuments) {
  EXPECT_THROW(io::sequence_from_json(R"({"offset": 0, "values": [[0.1, 0]], "extra": 1})"), std::invalid_argument);
  EXPECT_THROW(io::sequence_from_json(R"({"offset": 0})"), std::invalid_argument);
  EXPECT_THROW(io::sequence_from_json(R"({"offset": 0, "values": [[1.0, 0.0]]})"), std::invalid_argument);
  EXPECT_THROW(io::sequence_from_json(R"({"offset": 0, "values": [[0.1]]})"), std::invalid_argument);
  EXPECT_THROW(io::sequence_from_json("not json"), std::invalid_argument);
  EXPECT_THROW(io::read_sequence("/nonexistent/file.json"), std::invalid_argument);
}

TEST(Io, RandomSequenceIsReproducible) {
  const Sequence a = io::random_sequence(7, 5, -2, 0.5);
  EXPECT_EQ(a, io::random_sequence(7, 5, -2, 0.5));
  EXPECT_NE(a, io::random_sequence(8, 5, -2, 0.5));
  for (cplx v : a.values()) EXPECT_LE(std::abs(v), 0.5);
  EXPECT_EQ(io::unit_uniform(0), 0.0);
  EXPECT_LT(io::unit_uniform(~0ULL), 1.0);
  EXPECT_EQ(io::format_double(0.1), "0.10000000000000001");
}

TEST(Cli, ParseHelpers) {
  EXPECT_EQ(cli::parse_command("compare"), cli::Command::compare);
  EXPECT_THROW(cli::parse_command("plot"), cli::ValidationError);
  EXPECT_EQ(cli::parse_boundary("periodic"), Boundary::periodic);
  EXPECT_THROW(cli::parse_boundary("open"), cli::ValidationError);
}

TEST(Cli, SolveOnZeroDatum) {
  const fs::path in = scratch("zero.json");
  io::write_sequence(in.string(), Sequence(0, {0.0, 0.0}));
  cli::JobSpec job;
  job.input = in.string();
  const Outcome r = run_job(job);
  ASSERT_EQ(r.code, cli::kSuccess) << r.err;
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "n,re,im,budget");
  for (const auto& row : parse_csv(r.out)) {
    EXPECT_EQ(row[1], 0.0);
    EXPECT_EQ(row[2], 0.0);
    EXPECT_LE(row[3], job.eps);
  }
}

TEST(Cli, ComparePasses) {
  cli::JobSpec job;
  job.command = cli::Command::compare;
  job.seed = 3;
  const Outcome r = run_job(job);
  EXPECT_EQ(r.code, cli::kSuccess) << r.err;
  EXPECT_NE(r.err.find("PASS"), std::string::npos);
  for (const auto& row : parse_csv(r.out)) EXPECT_LE(row[6], 2e-6);
}

TEST(Cli, NlftSingleSite) {
  const fs::path in = scratch("single.json");
  const cplx s{0.3, -0.4};
  io::write_sequence(in.string(), Sequence(2, {s}));
  cli::JobSpec job;
  job.command = cli::Command::nlft;
  job.input = in.string();
  const Outcome r = run_job(job);
  ASSERT_EQ(r.code, cli::kSuccess) << r.err;
  const double scale = 1.0 / std::sqrt(0.75);
  EXPECT_NE(r.out.find("\"a\": {\"min_deg\": 0, \"coeffs\": [[" + io::format_double(scale) + ", 0]]}"),
            std::string::npos)
      << r.out;
  EXPECT_NE(r.out.find("\"min_deg\": -2"), std::string::npos);
}

TEST(Cli, MultiplierAndReference) {
  cli::JobSpec job;
  job.command = cli::Command::multiplier;
  job.eps = 0.5;
  job.eta = 1.0;
  Outcome r = run_job(job);
  ASSERT_EQ(r.code, cli::kSuccess) << r.err;
  EXPECT_NE(r.out.find("\"generating_function_error\""), std::string::npos);

  job = {};
  job.command = cli::Command::reference;
  job.t = 0.2;
  r = run_job(job);
  ASSERT_EQ(r.code, cli::kSuccess) << r.err;
  EXPECT_NO_THROW(io::sequence_from_json(r.out));
}

TEST(Cli, ValidationErrors) {
  cli::JobSpec job;
  job.eps = 1.5;
  EXPECT_EQ(run_job(job).code, cli::kValidationError);
  job = {};
  job.grid = 100;
  EXPECT_EQ(run_job(job).code, cli::kValidationError);
  job = {};
  job.boundary = Boundary::periodic;
  EXPECT_EQ(run_job(job).code, cli::kValidationError);
  job = {};
  job.input = "/nonexistent/file.json";
  EXPECT_EQ(run_job(job).code, cli::kValidationError);

  const fs::path bad = scratch("bad.json");
  std::ofstream(bad) << R"({"offset": 0, "values": [[0.1, 0.0]], "comment": "x"})";
  job = {};
  job.input = bad.string();
  const Outcome r = run_job(job);
  EXPECT_EQ(r.code, cli::kValidationError);
  EXPECT_NE(r.err.find("validation error"), std::string::npos);
}

TEST(Cli, NumericalGuardExitCode) {
  const fs::path in = scratch("near_unit.json");
  io::write_sequence(in.string(), Sequence(-1, {0.9, 0.0, 0.9}));
  cli::JobSpec job;
  job.command = cli::Command::reference;
  job.input = in.string();
  job.t = 5.0;
  job.h = 1.0;
  const Outcome r = run_job(job);
  EXPECT_EQ(r.code, cli::kNumericalGuard);
  EXPECT_NE(r.err.find("modulus guard"), std::string::npos);
}

TEST(Cli, DeterministicOutputFiles) {
  cli::JobSpec job;
  job.seed = 11;
  job.t = 0.5;
  job.output = scratch("det_a.csv").string();
  ASSERT_EQ(run_job(job).code, cli::kSuccess);
  job.output = scratch("det_b.csv").string();
  ASSERT_EQ(run_job(job).code, cli::kSuccess);
  EXPECT_EQ(slurp(scratch("det_a.csv")), slurp(scratch("det_b.csv")));
  EXPECT_FALSE(slurp(scratch("det_a.csv")).empty());
}

TEST(Cli, ExecutableEndToEnd) {
  const fs::path out = scratch("exe.csv");
  const std::string cmd = std::string("\"") + AL_IST_CLI_PATH + "\" --cmd solve --t 0.5 --seed 4 --out \"" +
                          out.string() + "\"";
  EXPECT_EQ(std::system(cmd.c_str()), 0);
  EXPECT_EQ(slurp(out).rfind("n,re,im,budget\n", 0), 0u);

  const std::string bad = std::string("\"") + AL_IST_CLI_PATH + "\" --cmd solve --eps 2 2>/dev/null";
  const int status = std::system(bad.c_str());
  EXPECT_EQ(WEXITSTATUS(status), 2);
  const std::string unknown = std::string("\"") + AL_IST_CLI_PATH + "\" --bogus 1 2>/dev/null";
  EXPECT_EQ(WEXITSTATUS(std::system(unknown.c_str())), 2);
}
