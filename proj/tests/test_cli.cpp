#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

namespace {

using Json = nlohmann::ordered_json;

struct Run {
  int status = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(BRIESKORN_CLI_PATH) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

std::vector<std::string> lines_of(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

}  // namespace

TEST_CASE("exit codes") {
  CHECK(run("invariants 11 7 5 5 4").status == 0);
  CHECK(run("invariants 2 2").status == 0);
  CHECK(run("invariants 3 1").status == 2);
  CHECK(run("--no-such-flag").status == 2);
  CHECK(run("combo --sigma1 35713 9 8 8 8 8 8 --sigma2 5953 3 2 2 2 2 2").status == 1);
  CHECK(run("--budget 10 signature --method naive 79 13 6 3 3").status == 1);
  CHECK(run("search --s-min 5 --s-max 4").status == 2);
}

TEST_CASE("invariants json") {
  const Run r = run("--json invariants 79 13 6 3 3");
  REQUIRE(r.status == 0);
  const Json j = Json::parse(r.out);
  CHECK(j["exponents"] == Json::array({79, 13, 6, 3, 3}));
  CHECK(j["sigma"] == 5824);
  CHECK(j["sigma_plus"] == 472 * 26);
  CHECK(j["sphere"] == true);
  CHECK(j["ac"]["primary"] == "0");
  CHECK(j["ac"]["secondary"] == 0);
  CHECK(j["chi_m"]["num"] == "-3269");
  CHECK(j["chi_m"]["den"] == "950");
  // Output is exactly the canonical two-space rendering.
  CHECK(j.dump(2) + "\n" == r.out);
}

TEST_CASE("undefined chi_m is reported, not fatal") {
  const Run r = run("--json invariants 2 2");
  REQUIRE(r.status == 0);
  const Json j = Json::parse(r.out);
  CHECK(j["chi_m"].is_null());
  CHECK(j.contains("chi_m_note"));
}

TEST_CASE("search emits one json line per hit") {
  const Run r = run("--json search --s-min 4 --s-max 8");
  REQUIRE(r.status == 0);
  const auto lines = lines_of(r.out);
  REQUIRE(lines.size() == 6);
  const Json last = Json::parse(lines.back());
  CHECK(last["s"] == 8);
  CHECK(last["exponents"] == Json::array({17, 16, 5, 4, 3}));
  const Json first = Json::parse(lines.front());
  CHECK(first["exponents"] == Json::array({11, 7, 5, 5, 4}));
  for (const auto& line : lines) {
    const Json j = Json::parse(line);
    CHECK(j.size() == 6);
    CHECK(j["sphere"] == true);
    CHECK(j["ac_zero"] == true);
    CHECK(j.dump() == line);
  }
  const Run human = run("search --s-min 4 --s-max 8");
  CHECK(lines_of(human.out).back() == "6 hit(s) for s in [4,8]");
}

TEST_CASE("combo report") {
  const Run r = run("--json combo --sigma1 5953 3 2 2 2 2 2 --sigma2 35713 9 8 8 8 8 8");
  REQUIRE(r.status == 0);
  const Json j = Json::parse(r.out);
  CHECK(j["gcd"] == "96");
  CHECK(j["count1"] == "4129041");
  CHECK(j["count2"] == "253");
  CHECK(j["ac_total"]["primary"] == "0");
  CHECK(j["nontrivial"] == true);
}

TEST_CASE("sh-table") {
  const Run r = run("--json sh-table --kind homology --ell 2 --n 5 --max-degree 11");
  CHECK(r.status == 0);
  CHECK(Json::parse(r.out).dump(2) + "\n" == r.out);
  CHECK(run("sh-table --kind homology --ell 2 --n 4 --max-degree 11").status != 0);
}

TEST_CASE("family") {
  const Run r = run("--json family --base 13 6 3 3 --k 2");
  REQUIRE(r.status == 0);
  const Json j = Json::parse(r.out);
  CHECK(j["per_k"]["sigma"] == 5824);
}
