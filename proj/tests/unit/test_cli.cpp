#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include "bicay/graph.hpp"

namespace {

struct RunResult {
  int exit_code;
  std::string output;  // stdout only
};

RunResult run_cli(const std::string& args) {
  std::string cmd = std::string(BICAY_CLI_PATH) + " " + args + " 2>/dev/null";
  std::array<char, 4096> buf{};
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  int status = pclose(pipe);
  return RunResult{WEXITSTATUS(status), out};
}

std::string temp_path(const std::string& name) {
  return std::string("/tmp/bicay_cli_test_") + name;
}

}  // namespace

TEST_CASE("aut subcommand") {
  RunResult r = run_cli("aut --graph A_");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("order 2") != std::string::npos);
  CHECK(r.output.find("degree 2") != std::string::npos);
}

TEST_CASE("build then verify round trips") {
  std::string cert = temp_path("q8.cert");
  RunResult build = run_cli("build --group Q8 --out " + cert);
  CHECK(build.exit_code == 0);

  std::ifstream in(cert);
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  CHECK(text.find("aut-order: 96") != std::string::npos);
  CHECK(text.find("br-normal: true") != std::string::npos);

  RunResult verify = run_cli("verify --cert " + cert);
  CHECK(verify.exit_code == 0);
  CHECK(verify.output.find("FAIL") == std::string::npos);

  // Corrupt a claimed field: verify reports FAIL with exit 1.
  std::string bad = text;
  auto pos = bad.find("aut-order: 96");
  bad.replace(pos, 13, "aut-order: 95");
  std::string bad_path = temp_path("q8_bad.cert");
  std::ofstream(bad_path) << bad;
  RunResult fail = run_cli("verify --cert " + bad_path);
  CHECK(fail.exit_code == 1);
  CHECK(fail.output.find("FAIL aut-order") != std::string::npos);
}

TEST_CASE("factor and product subcommands") {
  // graph6 bytes run from 63 to 126, so single quotes are always safe.
  auto quoted = [](const std::string& s) { return "'" + s + "'"; };

  // Q2 = K2 [] K2.
  RunResult prod = run_cli("product --graphs A_ A_");
  CHECK(prod.exit_code == 0);
  std::string q2 = prod.output.substr(0, prod.output.find('\n'));

  RunResult factor = run_cli("factor --graph " + quoted(q2));
  CHECK(factor.exit_code == 0);
  CHECK(factor.output.find("factors 2") != std::string::npos);

  // Q4 has four K2 factors.
  std::string q = "A_";
  for (int i = 0; i < 3; ++i) {
    RunResult next = run_cli("product --graphs " + quoted(q) + " A_");
    REQUIRE(next.exit_code == 0);
    q = next.output.substr(0, next.output.find('\n'));
  }
  RunResult f4 = run_cli("factor --graph " + quoted(q));
  CHECK(f4.exit_code == 0);
  CHECK(f4.output.find("factors 4") != std::string::npos);
}

TEST_CASE("catalog and sweep subcommands") {
  RunResult cat = run_cli("catalog --max-order 8");
  CHECK(cat.exit_code == 0);
  int count = 0;
  std::size_t at = 0;
  while ((at = cat.output.find('\n', at)) != std::string::npos) ++count, ++at;
  // 14 groups of order <= 8 plus the exceptional entries above 8.
  CHECK(count > 14);
  CHECK(cat.output.find("Q8\t8") != std::string::npos);

  RunResult sweep = run_cli("sweep --max-order 4");
  CHECK(sweep.exit_code == 0);
  CHECK(sweep.output.find("C2^2") != std::string::npos);
}

TEST_CASE("deterministic output") {
  RunResult a = run_cli("build --group D8");
  RunResult b = run_cli("build --group D8");
  CHECK(a.output == b.output);
  RunResult s1 = run_cli("sweep --max-order 6");
  RunResult s2 = run_cli("sweep --max-order 6");
  CHECK(s1.output == s2.output);
}

TEST_CASE("named graph constructions") {
  RunResult gp = run_cli("aut --graph GP83");
  CHECK(gp.exit_code == 0);
  CHECK(gp.output.find("order 96") != std::string::npos);

  RunResult q4 = run_cli("factor --graph Qn:4");
  CHECK(q4.exit_code == 0);
  CHECK(q4.output.find("factors 4") != std::string::npos);

  RunResult e6 = run_cli("aut --graph E6");
  CHECK(e6.exit_code == 0);
  CHECK(e6.output.find("order 216") != std::string::npos);
}

TEST_CASE("group file input") {
  std::string path = temp_path("sym3.group");
  std::ofstream(path) << "degree 3\n1 2 0\n1 0 2\n";
  RunResult r = run_cli("build --group " + path);
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("group-order: 6") != std::string::npos);
}

TEST_CASE("exit code matrix") {
  CHECK(run_cli("build --group NoSuchGroup").exit_code == 2);
  CHECK(run_cli("aut --graph " + std::string("\"#bad\"")).exit_code == 2);
  CHECK(run_cli("frobnicate").exit_code == 2);
  CHECK(run_cli("build").exit_code == 2);  // missing required flag
  // Tiny budget: the search gives up, distinct from absence.
  CHECK(run_cli("build --group D16 --budget 2").exit_code == 3);
  // A graph beyond the automorphism engine bound.
  std::string big_path = temp_path("big.g6");
  std::ofstream(big_path) << bicay::graph6_encode(bicay::Graph(300)) << "\n";
  CHECK(run_cli("aut --graph " + big_path).exit_code == 4);
  // A group beyond the order bound.
  CHECK(run_cli("build --group C40 --max-order 16").exit_code == 4);
}
