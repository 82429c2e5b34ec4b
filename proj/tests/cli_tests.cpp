#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <string>

#include <json.hpp>

using json = nlohmann::json;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;
};

std::string cli_path() {
  const char* path = std::getenv("LIARLAB_CLI");
  REQUIRE_MESSAGE(path != nullptr, "LIARLAB_CLI must point at the built binary");
  return path;
}

RunResult run(const std::string& args) {
  RunResult result;
  const std::string command = cli_path() + " " + args + " 2>/dev/null";
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buffer[4096];
  while (std::size_t n = std::fread(buffer, 1, sizeof buffer, pipe))
    result.output.append(buffer, n);
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

}  // namespace

TEST_CASE("pres decide prints the truth value") {
  const RunResult r = run("pres decide 'E y. y+y = 1+1'");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "true\n");
  CHECK(run("pres decide 'E y. y+y = 1'").output == "false\n");
}

TEST_CASE("usage and syntax errors exit 2") {
  CHECK(run("pres").exit_code == 2);
  CHECK(run("frobnicate").exit_code == 2);
  CHECK(run("pres decide 'E y. y+y ='").exit_code == 2);
  CHECK(run("quine truth 'Pr(x'").exit_code == 2);
}

TEST_CASE("budget failures exit 1") {
  CHECK(run("--budget 10 pres unname 100001").exit_code == 1);
}

TEST_CASE("quine goedel reports the expected facts") {
  const RunResult r = run("--json quine goedel");
  CHECK(r.exit_code == 0);
  const json doc = json::parse(r.output);
  CHECK(doc["status"] == "witness");
  CHECK(doc["witnesses"]["lambda"] == "~Pr(diag(<~Pr(diag(x))>))");
  for (const auto& fact : doc["facts"]) {
    const std::string label = fact["label"];
    if (label == "truth_lambda" || label == "diag_fixed_point")
      CHECK(fact["value"] == true);
    if (label == "printable_lambda" || label == "printable_negation")
      CHECK(fact["value"] == false);
  }
}

TEST_CASE("liar subcommand confirms the tarski violation on presburger") {
  const RunResult r = run("--json liar --system pres --variant tarski --pi 'E y. y+y = x'");
  CHECK(r.exit_code == 0);
  const json doc = json::parse(r.output);
  CHECK(doc["status"] == "violation");
  bool saw_rep_fact = false;
  for (const auto& fact : doc["facts"]) {
    if (fact["label"] == "represents_diagonal_at_name") {
      saw_rep_fact = true;
      CHECK(fact["value"] == false);
    }
    if (fact["label"] == "liar_lhs" || fact["label"] == "liar_rhs") {
      // recorded below via the pairing check
    }
  }
  CHECK(saw_rep_fact);
}

TEST_CASE("json output is byte-stable across runs") {
  const char* commands[] = {
      "--json quine goedel",
      "--json pres decide '0 = 0'",
      "--json liar --system quine --variant goedel-sem --pi '~Pr(diag(x))'",
      "--json pres enum --count 25",
      "--json quine longtheorem --n 8",
  };
  for (const char* command : commands) {
    const RunResult first = run(command);
    const RunResult second = run(command);
    CHECK(first.exit_code == second.exit_code);
    CHECK(first.output == second.output);
    CHECK_FALSE(first.output.empty());
  }
}

TEST_CASE("json facts round-trip through the cited operations") {
  const json goedel = json::parse(run("--json quine goedel").output);
  const std::string lambda = goedel["witnesses"]["lambda"];

  const RunResult truth = run("--json quine truth '" + lambda + "'");
  const json truth_doc = json::parse(truth.output);
  CHECK(truth_doc["facts"][0]["value"] == true);

  const RunResult printable = run("--json quine printable '" + lambda + "'");
  CHECK(json::parse(printable.output)["facts"][0]["value"] == false);
}

TEST_CASE("pres name and unname invert each other") {
  const json named = json::parse(run("--json pres name 'E y. y+y = x'").output);
  std::uint64_t value = 0;
  for (const auto& fact : named["facts"])
    if (fact["label"] == "name") value = fact["value"].get<std::uint64_t>();
  CHECK(value % 2 == 1);  // a proper formula is never a provable sentence

  const json back = json::parse(run("--json pres unname " + std::to_string(value)).output);
  CHECK(back["witnesses"]["formula"] == "E y. y+y = x");
}

TEST_CASE("quine tarski emits a violation with exit 0") {
  const RunResult r = run("--json quine tarski --phi 'Pr(x)'");
  CHECK(r.exit_code == 0);
  const json doc = json::parse(r.output);
  CHECK(doc["status"] == "violation");
  CHECK(doc["witnesses"]["lambda"] == "~Pr(diag(<~Pr(diag(x))>))");
}

TEST_CASE("pres truthdef passes with exit 0") {
  const RunResult r = run("--json pres truthdef --samples 60");
  CHECK(r.exit_code == 0);
  CHECK(json::parse(r.output)["status"] == "pass");
}
