#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include "doctest.h"
#include "kmatch/cli.hpp"

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<const char*> args) {
  args.insert(args.begin(), "kmatch");
  std::ostringstream out, err;
  const int code = kmatch::cli::run(static_cast<int>(args.size()), args.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream f(p);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("enumerate prints universe sizes") {
  CHECK(run({"enumerate", "--parts", "3,3", "--r", "2"}).out == "18\n");
  CHECK(run({"enumerate", "--parts", "3,3,3", "--r", "2"}).out == "108\n");
  CHECK(run({"enumerate", "--parts", "3", "--sizes", "1,2"}).out == "6\n");
}

TEST_CASE("enumerate refuses oversized universes with the predicted count") {
  const auto o = run({"enumerate", "--parts", "8,8", "--r", "8", "--universe-cap", "1000"});
  CHECK(o.code == kmatch::cli::kUsage);
  CHECK(o.err.find("predicted=40320") != std::string::npos);
}

TEST_CASE("search summaries") {
  const auto a = run({"search", "--parts", "3,3", "--r", "2", "--all-maxima"});
  CHECK(a.code == 0);
  CHECK(a.out.find("max=4, maxima=9, all t-stars") == 0);
  const auto b = run({"search", "--parts", "5", "--r", "3", "--pred", "intersecting:2"});
  CHECK(b.out.find("max=4, EXCEEDS_STAR_BOUND") == 0);
  const auto c = run({"search", "--parts", "4,4,4", "--r", "3", "--node-budget", "10"});
  CHECK(c.code == kmatch::cli::kBudget);
}

TEST_CASE("search writes json and csv reports") {
  const auto dir = std::filesystem::temp_directory_path() / "kmatch_cli_test";
  std::filesystem::create_directories(dir);
  const std::string prefix = (dir / "cell").string();
  REQUIRE(run({"search", "--parts", "3,3", "--r", "2", "--all-maxima", "--out", prefix.c_str()}).code == 0);
  const std::string first = slurp(prefix + ".csv");
  CHECK(first.find("MATCHES_STAR_BOUND") != std::string::npos);
  const auto j = kmatch::json::parse(slurp(prefix + ".json"));
  CHECK(j.contains("config"));
  REQUIRE(run({"search", "--parts", "3,3", "--r", "2", "--all-maxima", "--workers", "2", "--out", prefix.c_str()})
              .code == 0);
  CHECK(slurp(prefix + ".csv") == first);
  std::filesystem::remove_all(dir);
}

TEST_CASE("verify and scan") {
  const auto ex = run({"verify", "--campaign", "builtin:examples"});
  CHECK(ex.code == 0);
  CHECK(ex.out.find("4/4 passed") != std::string::npos);
  const auto props = run({"verify", "--campaign", "builtin:lemma1", "--samples", "300", "--seed", "7"});
  CHECK(props.code == 0);
  const auto scan = run({"scan", "--campaign", "builtin:ak-regime"});
  CHECK(scan.code == 0);
  CHECK(scan.out.find("EXCEEDS_STAR_BOUND") != std::string::npos);
  CHECK(run({"verify", "--campaign", "builtin:nope"}).code == kmatch::cli::kUsage);
}

TEST_CASE("verify exits 1 when an assertion fails") {
  const auto dir = std::filesystem::temp_directory_path() / "kmatch_cli_fail";
  std::filesystem::create_directories(dir);
  const auto file = dir / "camp.json";
  std::ofstream(file) << R"({"name":"wrong","kind":"bound","mode":"assert-equality",
    "cells":[{"parts":[3,3],"r":2,"pred":"intersecting:1","expect_max":"5"}]})";
  CHECK(run({"verify", "--campaign", file.c_str()}).code == kmatch::cli::kAssertionFailed);
  std::filesystem::remove_all(dir);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == kmatch::cli::kUsage);
  CHECK(run({"enumerate", "--parts", "3,x", "--r", "2"}).code == kmatch::cli::kUsage);
  CHECK(run({"search", "--parts", "3,3", "--r", "2", "--pred", "crossing"}).code == kmatch::cli::kUsage);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("the installed binary reports exit codes") {
  const char* tool = std::getenv("KMATCH_TOOL");
  if (!tool) return;
  const std::string base = std::string(tool) + " ";
  auto status = [](const std::string& cmd) {
    const int raw = std::system((cmd + " >/dev/null 2>&1").c_str());
    return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  };
  CHECK(status(base + "enumerate --parts 3,3 --r 2") == 0);
  CHECK(status(base + "enumerate --parts 8,8 --r 8 --universe-cap 10") == 2);
  CHECK(status(base + "search --parts 4,4,4 --r 3 --node-budget 10") == 3);
  CHECK(status(base) == 2);

  std::array<char, 64> buf{};
  FILE* p = popen((base + "enumerate --parts 3,3,3 --r 2").c_str(), "r");
  REQUIRE(p);
  std::string text;
  while (fgets(buf.data(), buf.size(), p)) text += buf.data();
  pclose(p);
  CHECK(text == "108\n");
}
