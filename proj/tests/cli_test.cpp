#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "pbell/cli.hpp"
#include "pbell/report_io.hpp"

using namespace pbell;

namespace {

struct Run {
  int status;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int status = cli::run(args, out, err);
  return {status, out.str(), err.str()};
}

std::string without_timing(const std::string &text) {
  std::istringstream in(text);
  std::string line, kept;
  while (std::getline(in, line))
    if (line.find("elapsed_ms = ") == std::string::npos)
      kept += line + '\n';
  return kept;
}

std::string golden(const std::string &name) {
  std::ifstream in(std::string(PBELL_GOLDEN_DIR) + "/" + name);
  REQUIRE(in.good());
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::vector<std::string> lines(const std::string &text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line))
    out.push_back(line);
  return out;
}

} // namespace

TEST_CASE("stirling") {
  Run r = run({"stirling", "--dist", "det:1", "--n-max", "4", "--r", "0", "--format", "csv"});
  CHECK(r.status == 0);
  CHECK(r.out == "1\n0,1\n0,1,1\n0,1,3,1\n0,1,7,6,1\n");

  r = run({"stirling", "--dist", "bernoulli:1/2", "--n-max", "2", "--r", "0", "--format", "csv"});
  CHECK(lines(r.out).back() == "0,1/2,1/4");

  r = run({"stirling", "--dist", "det:1", "--n-max", "0", "--r", "3", "--format", "csv"});
  CHECK(r.out == "1\n");

  r = run({"stirling", "--dist", "bernoulli:1/2", "--n-max", "2"});
  CHECK(r.status == 0);
  CHECK(r.out == "# bernoulli:1/2 r=0\n"
                 "n\\k  0    1    2\n"
                 "  0  1\n"
                 "  1  0  1/2\n"
                 "  2  0  1/2  1/4\n");

  r = run({"stirling", "--dist", "det:1", "--n-max", "2", "--r", "1", "--format", "json"});
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["rows"] == nlohmann::json::parse(R"([["1"],["1","1"],["1","3","1"]])"));
}

TEST_CASE("malformed distribution is a usage error") {
  for (const char *bad : {"bernoulli:2", "discrete:(0,1/3);(2,1/3)", "weird:1", "det:x"}) {
    Run r = run({"stirling", "--dist", bad});
    CHECK(r.status == cli::kUsage);
    CHECK(r.out.empty());
    CHECK(lines(r.err).size() == 1);
  }
  CHECK(run({"stirling"}).status == cli::kUsage);
  CHECK(run({}).status == cli::kUsage);
  CHECK(run({"frobnicate"}).status == cli::kUsage);
  CHECK(run({"stirling", "--dist", "det:1", "--format", "xml"}).status == cli::kUsage);
}

TEST_CASE("bell") {
  Run r = run({"bell", "--dist", "bernoulli:1/2", "--n", "2", "--bivariate"});
  CHECK(r.status == 0);
  CHECK(r.out == "1/4*x^2*y^2 - 1/4*x*y^2 + 1/2*x*y\n");
  CHECK(run({"bell", "--dist", "det:1", "--n", "0"}).out == "1\n");
  CHECK(run({"bell", "--dist", "det:1", "--n", "3", "--at-x", "1"}).out == "5\n");
  CHECK(run({"bell", "--dist", "poisson:1", "--n", "3", "--r", "0", "--at-x", "1"}).out == "12\n");
  CHECK(run({"bell", "--dist", "poisson:1", "--n", "3", "--bivariate", "--at-x", "1"}).out == "5*y\n");

  r = run({"bell", "--dist", "bernoulli:1/2", "--n", "2", "--format", "csv"});
  CHECK(r.out == "x_deg,y_deg,coeff\n2,0,1/4\n1,0,1/2\n");

  r = run({"bell", "--dist", "det:1", "--n", "2", "--r", "1", "--format", "json"});
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["poly"] == "x^2 + 3*x + 1");
  CHECK(doc["terms"].size() == 3);

  CHECK(run({"bell", "--dist", "det:1", "--n", "2", "--at-x", "0.5"}).status == cli::kUsage);
}

TEST_CASE("verify golden output and exit codes") {
  Run r = run({"verify", "thm22", "--dist", "bernoulli:1/2", "--m", "1", "--n", "1"});
  CHECK(r.status == 0);
  CHECK(without_timing(r.out) == golden("verify_thm22_bernoulli.txt"));

  r = run({"verify", "thm24", "--dist", "det:1", "--m", "0", "--n", "0", "--r", "1"});
  CHECK(r.status == 0);
  CHECK(without_timing(r.out) == golden("verify_thm24_det.txt"));

  r = run({"verify", "bogus", "--dist", "det:1", "--m", "1", "--n", "1"});
  CHECK(r.status == 2);
  CHECK(r.out == golden("verify_bogus.stdout.txt"));
  CHECK(r.err == golden("verify_bogus.stderr.txt"));

  CHECK(run({"verify", "thm22", "--m", "1"}).status == 2);
  CHECK(run({"verify", "thm22", "--dist", "poisson:-1", "--m", "1", "--n", "1"}).status == 2);
}

TEST_CASE("verify json parses back into a report") {
  Run r = run({"verify", "cor27", "--m", "2", "--n", "1", "--r", "2", "--format", "json"});
  CHECK(r.status == 0);
  const IdentityReport report = report_from_json(nlohmann::ordered_json::parse(r.out));
  CHECK(report.identity == IdentityId::cor27_y1);
  CHECK(report.equal);
  CHECK(report.lhs == report.rhs);
  CHECK(!report.note.empty());
}

TEST_CASE("sweep") {
  Run r = run({"sweep", "thm22", "--dist", "det:1", "--max-total", "4"});
  CHECK(r.status == 0);
  CHECK(lines(r.out).back() == "15/15 equal");

  r = run({"sweep", "thm26", "--dist", "poisson:1", "--max-total", "0", "--r", "1"});
  CHECK(r.status == 0);
  CHECK(lines(r.out).back() == "1/1 equal");

  r = run({"sweep", "thm25", "--dist", "discrete:(0,1/3);(2,2/3)", "--max-total", "5", "--r", "1,2", "--format", "json"});
  CHECK(r.status == 0);
  const auto doc = nlohmann::ordered_json::parse(r.out);
  CHECK(doc["reports"].size() == 42);
  CHECK(doc["all_equal"] == true);
  for (const auto &item : doc["reports"])
    CHECK(report_from_json(item).equal);

  r = run({"sweep", "eq10", "--max-total", "3", "--r", "1", "--format", "csv"});
  CHECK(r.status == 0);
  const auto rows = lines(r.out);
  CHECK(rows.front() == report_csv_header());
  CHECK(rows.back() == "# 10/10 equal");
  CHECK(rows.size() == 12);

  CHECK(run({"sweep", "nope"}).status == 2);
}

TEST_CASE("sweep output is deterministic, also in parallel") {
  const std::vector<std::string> base{"sweep", "thm24", "--dist", "bernoulli:1/2", "--max-total", "5", "--r", "1,3"};
  auto with_jobs = [&](const char *jobs) {
    auto args = base;
    args.insert(args.end(), {"--jobs", jobs});
    return without_timing(run(args).out);
  };
  const std::string sequential = with_jobs("1");
  CHECK(sequential == with_jobs("1"));
  CHECK(sequential == with_jobs("4"));
  CHECK(lines(sequential).back() == "42/42 equal");
}
