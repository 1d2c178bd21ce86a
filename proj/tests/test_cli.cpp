#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

#include "doctest.h"
#include "qflag/json_io.hpp"
#include "qflag/polynomial.hpp"

namespace {

struct Run {
  int status = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string command = std::string(QFLAG_CLI_PATH) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buffer{};
  std::size_t got = 0;
  while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) r.out.append(buffer.data(), got);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

std::string stderr_of(const std::string& args) {
  const std::string command = std::string(QFLAG_CLI_PATH) + " " + args + " 2>&1 >/dev/null";
  std::string err;
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buffer{};
  std::size_t got = 0;
  while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) err.append(buffer.data(), got);
  pclose(pipe);
  return err;
}

}  // namespace

TEST_CASE("schubert command") {
  CHECK(run("schubert --perm '2 1 3' --n 3").out == "x1\n");
  CHECK(run("schubert --perm '1 2 3' --n 3").out == "1\n");
  CHECK(run("schubert --perm '3 2 1' --n 3").out == "x1^2*x2\n");
  const Run bad = run("schubert --perm '2 y 1' --n 3");
  CHECK(bad.status == 1);
  CHECK(stderr_of("schubert --perm '2 y 1' --n 3").find("'y'") != std::string::npos);
  CHECK(run("schubert --perm '1 2 4 3' --n 3").status == 1);
}

TEST_CASE("relations command") {
  const Run r = run("relations --n 2");
  CHECK(r.status == 0);
  CHECK(r.out == "R1 = x1 + x2\nR2 = x1*x2 + q1\n");
  const Run all = run("relations --n 3 --method all --format json");
  CHECK(all.status == 0);
  const auto doc = qflag::Json::parse(all.out);
  CHECK(doc["result"]["agreement"] == true);
  CHECK(doc["result"]["relations"].size() == 3);
  CHECK(run("relations --n 3 --method all").out.find("agreement: true") != std::string::npos);
  CHECK(run("relations --n 1").status == 1);
  CHECK(run("relations --n 3 --method cofactor").status == 1);
}

TEST_CASE("qproduct and gw commands") {
  CHECK(run("qproduct --u '2 1' --v '2 1' --n 2").out == "{\"1 2\": \"q1\"}\n");
  const Run gw = run("gw --perms '2 1;2 1;2 1' --deg '1' --n 2");
  CHECK(gw.status == 0);
  CHECK(gw.out == "1\n");
  // A dimension mismatch is a valid question with answer 0.
  CHECK(run("gw --perms '2 1;2 1' --deg '1' --n 2").out == "0\n");
  CHECK(run("gw --perms '2 1' --deg '1' --n 2").status == 1);
  CHECK(run("gw --perms '2 1;2 1;2 1' --deg '1 1' --n 2").status == 1);
  CHECK(run("gw --perms '2 1;2 1;2 1' --deg 'x' --n 2").status == 1);
}

TEST_CASE("nf command") {
  CHECK(run("nf --poly 'x1^2' --n 2").out == "q1\n");
  CHECK(run("nf --poly 'x1 + x2' --n 2").out == "0\n");
  CHECK(run("nf --poly 'x1 + x5' --n 2").status == 1);
}

TEST_CASE("JSON output is deterministic and complete") {
  const std::string args = "qproduct --u '2 1 3' --v '2 3 1' --n 3 --format json";
  const Run a = run(args);
  const Run b = run(args);
  CHECK(a.status == 0);
  CHECK(a.out == b.out);
  const auto doc = qflag::Json::parse(a.out);
  CHECK(doc["command"] == "qproduct");
  CHECK(doc["inputs"]["u"] == "2 1 3");
  CHECK(doc["meta"]["n"] == 3);
  CHECK(doc["meta"]["schema"] == qflag::kJsonSchemaVersion);
  CHECK(doc["meta"]["version"] == QFLAG_VERSION);
  std::vector<std::string> keys;
  for (const auto& [k, v] : doc.items()) keys.push_back(k);
  CHECK(keys == std::vector<std::string>{"command", "inputs", "result", "meta"});
}

TEST_CASE("text output re-parses") {
  for (int n = 2; n <= 4; ++n) {
    const Run r = run("relations --n " + std::to_string(n) + " --format json");
    const auto doc = qflag::Json::parse(r.out);
    const Run text = run("relations --n " + std::to_string(n));
    std::size_t pos = 0;
    for (const auto& rel : doc["result"]["relations"]) {
      const std::size_t eq = text.out.find(" = ", pos);
      const std::size_t end = text.out.find('\n', eq);
      const std::string rendered = text.out.substr(eq + 3, end - eq - 3);
      CHECK(qflag::parse_polynomial(rendered, n) == qflag::polynomial_from_json(rel, n));
      pos = end;
    }
  }
}

TEST_CASE("verify command") {
  const Run r = run("verify --n 3 --level full");
  CHECK(r.status == 0);
  CHECK(r.out.find("FAIL") == std::string::npos);
  CHECK(r.out.find("PASS associativity") != std::string::npos);
  const Run j = run("verify --n 2 --format json");
  CHECK(qflag::Json::parse(j.out)["result"]["all_passed"] == true);
  CHECK(run("verify --n 3 --level huge").status == 1);
}

TEST_CASE("usage errors") {
  CHECK(run("").status == 1);
  CHECK(run("frobnicate").status == 1);
  CHECK(run("schubert --n 3").status == 1);
  CHECK(run("--help").status == 0);
}
