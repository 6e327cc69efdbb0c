#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>

#include <json.hpp>

#include "adicseq/complexity.hpp"
#include "adicseq/sequence.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct CmdResult {
  int exit_code = -1;
  std::string output;
};

// Runs the CLI with stdout captured; stderr is folded in only when asked.
CmdResult run_cli(const std::string& args, bool merge_stderr = false) {
  const std::string cmd =
      std::string(ADICSEQ_CLI_PATH) + " " + args + (merge_stderr ? " 2>&1" : " 2>/dev/null");
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  CmdResult res;
  char buf[4096];
  std::size_t got = 0;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) res.output.append(buf, got);
  const int status = pclose(pipe);
  res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return res;
}

fs::path temp_file(const std::string& name) {
  return fs::temp_directory_path() / ("adicseq_cli_" + std::to_string(getpid()) + "_" + name);
}

int count_lines(const std::string& s) {
  int n = 0;
  for (char c : s) n += (c == '\n');
  return n;
}

}  // namespace

TEST_CASE("primes listing") {
  CHECK(run_cli("primes --max-p 30").output == "p=5 x=1 f=1\np=13 x=3 f=3\np=29 x=5 f=7\n");
  CHECK(run_cli("primes --max-p 5").output == "p=5 x=1 f=1\n");
  const auto r60 = run_cli("primes --max-p 60 --format csv");
  CHECK(r60.output == "p,x,f\n5,1,1\n13,3,3\n29,5,7\n53,7,13\n");
  CHECK(run_cli("primes --max-p 4").exit_code == 2);
  CHECK(run_cli("primes").exit_code == 2);  // --max-p required

  const auto rj = run_cli("primes --max-p 500 --format json");
  const json arr = json::parse(rj.output);
  CHECK(arr.size() == 7);
  CHECK(arr.back()["p"] == 293);
}

TEST_CASE("construct writes the documented format") {
  const auto out = temp_file("u5.txt");
  const auto r = run_cli("construct --p 5 --b 0101 --out " + out.string());
  CHECK(r.exit_code == 0);
  CHECK(r.output == "N=20 weight=10\n");
  std::ifstream f(out);
  std::string content((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
  CHECK(content == "N=20\n01000101100101111010\n");
  fs::remove(out);

  CHECK(run_cli("construct --p 5 --b 0000 --out /dev/null").output == "N=20 weight=8\n");
  CHECK(run_cli("construct --p 5 --b 0110 --out /dev/null").exit_code == 2);
  CHECK(run_cli("construct --p 17 --b 0101 --out /dev/null").exit_code == 2);
  const auto err = run_cli("construct --p 17 --b 0101 --out /dev/null", true);
  CHECK(err.output.find("(p-1)/4 is even") != std::string::npos);
}

TEST_CASE("adic reports and the construct/adic round trip") {
  const auto direct = run_cli("adic --p 13 --b 0101 --format json");
  CHECK(direct.exit_code == 0);
  const json j = json::parse(direct.output);
  CHECK(j["gcd_total"] == "5");
  CHECK(j["gcd_minus"] == "1");
  CHECK(j["gcd_plus"] == "5");
  CHECK(j["period"] == 52);

  const auto out = temp_file("u13.txt");
  run_cli("construct --p 13 --b 0101 --out " + out.string());
  const auto via_file = run_cli("adic --in " + out.string() + " --format json");
  CHECK(json::parse(via_file.output)["gcd_total"] == "5");
  CHECK(json::parse(via_file.output)["U2"] == j["U2"]);
  fs::remove(out);

  const auto ones = temp_file("ones8.txt");
  adicseq::write_sequence_file(ones.string(), adicseq::BinarySequence::ones(8));
  const auto rep = run_cli("adic --in " + ones.string() + " --format json");
  CHECK(json::parse(rep.output)["phi2"] == 0.0);
  CHECK(json::parse(rep.output)["quotient"] == "1");
  fs::remove(ones);

  const auto bad = temp_file("bad.txt");
  std::ofstream(bad) << "period 8\n11110000\n";
  CHECK(run_cli("adic --in " + bad.string()).exit_code == 2);
  fs::remove(bad);

  CHECK(run_cli("adic").exit_code == 2);  // neither --in nor --p/--b
  CHECK(run_cli("adic --p 5 --b 0000 --format json").output.find("\"gcd_total\": \"75\"") !=
        std::string::npos);
}

TEST_CASE("autocorr output formats") {
  const auto csv = run_cli("autocorr --p 5 --b 0101 --format csv");
  CHECK(csv.output.rfind("tau,C\n0,20\n", 0) == 0);
  CHECK(count_lines(csv.output) == 21);

  const auto j = json::parse(run_cli("autocorr --p 5 --b 0101 --format json").output);
  CHECK(j["classification"] == "optimal-magnitude");
  CHECK(j["values"].size() == 20);
  CHECK(j["values"][0] == 20);
  for (std::size_t tau = 1; tau < 20; ++tau) {
    const int v = j["values"][tau];
    CHECK((v == 0 || v == 4 || v == -4));
  }
}

TEST_CASE("linear complexity command") {
  const auto r = run_cli("linear --p 13 --b 0000 --format json");
  const json j = json::parse(r.output);
  CHECK(j["linear_complexity"] == 48);
  CHECK(j["period"] == 52);
}

TEST_CASE("verify exit codes") {
  CHECK(run_cli("verify --p 5").exit_code == 0);
  CHECK(run_cli("verify --p 17").exit_code == 2);
  CHECK(run_cli("verify --p 12").exit_code == 2);
  const auto table = run_cli("verify --p 5");
  CHECK(table.output.find("lemma_3_11: PASS") != std::string::npos);
  CHECK(table.output.find("all checks passed") != std::string::npos);
}

TEST_CASE("scan formats and ordering") {
  const auto four = run_cli("scan --p-list 5,13,29,53 --format csv");
  CHECK(four.exit_code == 0);
  CHECK(count_lines(four.output) == 5);  // header + one row per prime
  CHECK(four.output.find("fail") == std::string::npos);

  const auto csv = run_cli("scan --p-list 13,5 --format csv");
  CHECK(csv.exit_code == 0);
  CHECK(count_lines(csv.output) == 3);
  CHECK(csv.output.rfind("p,g,x,y,d,", 0) == 0);
  const auto p5_line = csv.output.find("\n5,");
  const auto p13_line = csv.output.find("\n13,");
  CHECK(p5_line != std::string::npos);
  CHECK(p13_line != std::string::npos);
  CHECK(p5_line < p13_line);  // ascending p regardless of input order

  const json arr = json::parse(run_cli("scan --max-p 60 --format json").output);
  CHECK(arr.size() == 4);
  CHECK(arr[0]["p"] == 5);
  CHECK(arr[3]["p"] == 53);
  for (const auto& rep : arr) {
    for (const char* key : {"lemma_2_1", "lemma_3_1", "lemma_3_9", "theorem_3_12"}) {
      CHECK(rep[key]["pass"] == true);
    }
  }

  CHECK(run_cli("scan --p-list 5,17").exit_code == 2);
  CHECK(run_cli("scan --p-list 5,abc").exit_code == 2);
  CHECK(run_cli("scan").exit_code == 2);
}

TEST_CASE("json parses for every command across the small sweep") {
  for (const char* p : {"5", "13", "29", "53", "173"}) {
    const std::string ps(p);
    const json a = json::parse(run_cli("adic --p " + ps + " --b 0101 --format json").output);
    CHECK(a["gcd_total"] == "5");
    const json c = json::parse(run_cli("autocorr --p " + ps + " --b 0000 --format json").output);
    CHECK(c["classification"] == "optimal-magnitude");
    const json l = json::parse(run_cli("linear --p " + ps + " --b 1111 --format json").output);
    CHECK(l["period"] == 4 * std::stoull(ps));
    const json v = json::parse(run_cli("verify --p " + ps + " --format json").output);
    CHECK(v["p"] == std::stoull(ps));
    CHECK(v["y"] == 1);
  }
}

TEST_CASE("usage errors never crash") {
  CHECK(run_cli("").exit_code == 2);
  CHECK(run_cli("nonsense").exit_code == 2);
  CHECK(run_cli("adic --format yaml --p 5 --b 0101").exit_code == 2);
  CHECK(run_cli("--help").exit_code == 0);
  CHECK(run_cli("adic --help").exit_code == 0);
}
