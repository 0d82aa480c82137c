// End-to-end checks of the installed CLI surface: spawns the binary given
// as argv[1], captures stdout and exit codes.

#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <json.hpp>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <string>

namespace {

std::string g_cli;

struct RunResult {
  int exit_code;
  std::string output;
};

RunResult run(const std::string& args) {
  const std::string cmd = g_cli + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string output;
  char buffer[4096];
  size_t got = 0;
  while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0)
    output.append(buffer, got);
  const int status = pclose(pipe);
  return {WEXITSTATUS(status), output};
}

}  // namespace

TEST_CASE("multiply evaluates generator words") {
  const RunResult res =
      run("--n 2 --r 1 multiply --word '[\"e1\",\"f1\"]'");
  CHECK(res.exit_code == 0);
  const auto doc = nlohmann::json::parse(res.output);
  REQUIRE(doc.at("terms").size() == 1);
  CHECK(doc.at("terms").at(0).at("matrix").at("entries") ==
        nlohmann::json::parse("[[1,1,1]]"));

  // byte-identical across runs
  CHECK(run("--n 2 --r 1 multiply --word '[\"e1\",\"f1\"]'").output == res.output);
}

TEST_CASE("multiply handles element pairs") {
  const std::string k11 =
      R"({"n":2,"r":2,"terms":[{"coeff":"1","matrix":{"n":2,"entries":[[1,1,1],[2,2,1]]}}]})";
  const std::string k20 =
      R"({"n":2,"r":2,"terms":[{"coeff":"1","matrix":{"n":2,"entries":[[1,1,2]]}}]})";
  const RunResult same = run("--n 2 --r 2 multiply --json '{\"x\":" + k11 +
                             ",\"y\":" + k11 + "}'");
  CHECK(same.exit_code == 0);
  CHECK(nlohmann::json::parse(same.output).at("terms").size() == 1);

  const RunResult zero = run("--n 2 --r 2 multiply --json '{\"x\":" + k20 +
                             ",\"y\":" + k11 + "}'");
  CHECK(zero.exit_code == 0);
  CHECK(nlohmann::json::parse(zero.output).at("terms").empty());

  const RunResult text = run("--n 2 --r 2 --format text multiply --json '{\"x\":" +
                             k11 + ",\"y\":" + k11 + "}'");
  CHECK(text.exit_code == 0);
  CHECK(text.output == "[D(1,1)]\n");
}

TEST_CASE("normal-form command") {
  const std::string elem =
      R"({"n":2,"r":1,"terms":[{"coeff":"1","matrix":{"n":2,"entries":[[1,1,1]]}}]})";
  const RunResult res = run("--n 2 --r 1 normal-form --json '" + elem + "'");
  CHECK(res.exit_code == 0);
  const auto doc = nlohmann::json::parse(res.output);
  CHECK(doc.at("round_trip").get<bool>());
  REQUIRE(doc.at("coordinates").size() == 1);
  CHECK(doc.at("coordinates").at(0).at("lambda") == nlohmann::json::parse("[1,0]"));
}

TEST_CASE("verify exits zero on success and one on failure") {
  const RunResult ok = run("--n 2 --r 1 verify");
  CHECK(ok.exit_code == 0);
  CHECK(nlohmann::json::parse(ok.output).at("all_passed").get<bool>());

  const RunResult corrupted = run("--n 2 --r 1 verify --inject-fault");
  CHECK(corrupted.exit_code == 1);
  CHECK(!nlohmann::json::parse(corrupted.output).at("all_passed").get<bool>());

  const RunResult text = run("--n 2 --r 1 --format text verify");
  CHECK(text.exit_code == 0);
  CHECK(text.output.find("all relations hold") != std::string::npos);
}

TEST_CASE("closed-form-check command") {
  const RunResult res = run("--n 2 --r 2 closed-form-check --mmax 2 --tmax 3");
  CHECK(res.exit_code == 0);
  const auto doc = nlohmann::json::parse(res.output);
  CHECK(doc.at("all_equal").get<bool>());
  CHECK(doc.at("instances").get<long long>() == 2 * (4 + 16 + 64));
}

TEST_CASE("input errors use the documented exit codes") {
  CHECK(run("--n 2 --r 1 multiply --json '[notjson'").exit_code == 2);
  // degree mismatch between the element and the configured algebra
  const std::string wrong =
      R"({"n":2,"r":2,"terms":[]})";
  CHECK(run("--n 2 --r 1 normal-form --json '" + wrong + "'").exit_code == 3);
}

int main(int argc, char** argv) {
  if (argc < 2) {
    std::fprintf(stderr, "usage: cli_integration <path-to-cli>\n");
    return 2;
  }
  g_cli = argv[1];
  doctest::Context context;
  return context.run();
}
