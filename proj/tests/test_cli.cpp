#include <sstream>

#include "doctest.h"
#include "hecke/cli.hpp"
#include "json.hpp"

using namespace hecke::cli;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_args(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::size_t count_lines(const std::string& s) {
  std::size_t n = 0;
  for (char c : s) n += c == '\n';
  return n;
}

}  // namespace

TEST_CASE("passing commands exit 0") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"presentation", "--e", "3"},
           {"eigen", "--e", "2", "--L", "6"},
           {"coefficient", "--e", "3", "--L", "4"},
           {"growth", "--e", "3", "--L", "12"},
           {"poincare", "--e", "4"},
           {"distinction", "--e", "3", "--L", "20"},
           {"gelfand"},
           {"all", "--e", "3", "--L", "4"},
       }) {
    const auto r = run_args(args);
    CHECK_MESSAGE(r.code == kExitPass, args.front() << ": " << r.err);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j.at("pass").get<bool>());
  }
}

TEST_CASE("distinction report") {
  const auto r = run_args({"distinction", "--e", "3", "--f", "1", "--q0", "2", "--L", "40"});
  REQUIRE(r.code == kExitPass);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j.at("closed_form") == "1/1");
  CHECK(j.at("per_term_ok").get<bool>());
  CHECK(j.at("within_tail_bound").get<bool>());
}

TEST_CASE("growth csv") {
  const auto r = run_args({"growth", "--e", "3", "--L", "12", "--output", "csv"});
  REQUIRE(r.code == kExitPass);
  CHECK(count_lines(r.out) == 14);
  CHECK(r.out.rfind("length,count_bfs,count_closed_form,equal\n", 0) == 0);
  CHECK(r.out.find("12,36,36,") != std::string::npos);
}

TEST_CASE("symbolic character runs") {
  CHECK(run_args({"eigen", "--e", "2", "--L", "5", "--chi-pi", "2/3"}).code == kExitPass);
  CHECK(run_args({"all", "--e", "2", "--L", "4", "--chi-pi", "-5/7"}).code == kExitPass);
}

TEST_CASE("usage errors exit 2") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {},
           {"frobnicate"},
           {"growth", "--e", "1"},
           {"growth", "--q0", "6"},
           {"growth", "--e", "x"},
           {"distinction", "--e", "4"},
           {"coefficient", "--chi-pi", "2"},
           {"eigen", "--chi-pi", "0"},
           {"eigen", "--chi-pi", "1/0"},
           {"growth", "--output", "xml"},
           {"gelfand", "--rep", "/nonexistent.json"},
       }) {
    const auto r = run_args(args);
    CHECK_MESSAGE(r.code == kExitUsage, (args.empty() ? std::string("<none>") : args.front()));
    CHECK_FALSE(r.err.empty());
  }
  CHECK(run_args({"distinction", "--e", "4"}).err.find("RequiresOddE") != std::string::npos);
}

TEST_CASE("failed check exits 1") {
  const auto r = run_args({"gelfand", "--rep", std::string(HECKE_TEST_DATA_DIR) + "/s3_trivial_k.json"});
  CHECK(r.code == kExitFail);
  CHECK_FALSE(nlohmann::json::parse(r.out).at("pass").get<bool>());
}

TEST_CASE("output is deterministic") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"presentation", "--e", "3", "--seed", "7"},
           {"poincare", "--e", "3", "--seed", "11", "--samples", "30"},
           {"all", "--e", "3", "--L", "4"},
       }) {
    const auto a = run_args(args), b = run_args(args);
    CHECK(a.code == b.code);
    CHECK(a.out == b.out);
  }
  const auto s1 = run_args({"poincare", "--e", "3", "--seed", "1"});
  const auto s2 = run_args({"poincare", "--e", "3", "--seed", "2"});
  CHECK(s1.out != s2.out);
}

TEST_CASE("text output") {
  const auto r = run_args({"growth", "--e", "2", "--L", "3", "--output", "text"});
  CHECK(r.code == kExitPass);
  CHECK(r.out.rfind("== growth PASS", 0) == 0);
}
