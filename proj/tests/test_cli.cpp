#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <string>
#include <sys/wait.h>

#ifndef CTCODES_CLI_PATH
#error "CTCODES_CLI_PATH must point at the CLI binary"
#endif

namespace {

struct Run {
  int exit_code = -1;
  std::string out;
};

// Runs the CLI and captures stdout; stderr is discarded unless redirected otherwise.
Run run(const std::string& args, const std::string& redirect = "2>/dev/null") {
  const std::string cmd = std::string(CTCODES_CLI_PATH) + " " + args + " " + redirect;
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::filesystem::path scratch(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / "ctcodes_cli_test";
  std::filesystem::create_directories(dir);
  return dir / name;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace

TEST_CASE("construct prints the matrix and the summary") {
  const auto r = run("construct -m 4 --pair 0,1");
  CHECK(r.exit_code == 0);
  CHECK(r.out.rfind("5 15\n", 0) == 0);
  CHECK(r.out.find("[15,10,3]\n") != std::string::npos);

  const auto h = run("construct -m 4 --pair 1,3");
  CHECK(h.out.find("[15,11,3] (Hamming)") != std::string::npos);
}

TEST_CASE("construct writes matrix files") {
  const auto file = scratch("c01.txt");
  const auto r = run("construct -m 4 --pair 0,1 --out " + file.string());
  CHECK(r.exit_code == 0);
  CHECK(r.out == "[15,10,3]\n");
  CHECK(slurp(file).rfind("5 15\n", 0) == 0);

  const auto dir = scratch("all");
  const auto all = run("construct -m 4 --pair all --out " + dir.string());
  CHECK(all.exit_code == 0);
  CHECK(std::filesystem::exists(dir / "C02.txt"));
  CHECK(all.out.find("{0,2} [15,10,4]") != std::string::npos);
}

TEST_CASE("usage errors exit with 2") {
  const auto odd = run("construct -m 3 --pair 0,1", "2>&1");
  CHECK(odd.exit_code == 2);
  CHECK(odd.out.find("m must be even") != std::string::npos);
  CHECK(run("graph -m 4 --pair 0,1 --format xml").exit_code == 2);
  CHECK(run("construct -m 4 --pair 0,7").exit_code == 2);
  CHECK(run("construct -m 4 --pair banana").exit_code == 2);
  CHECK(run("no-such-command").exit_code == 2);
  CHECK(run("").exit_code == 2);
  CHECK(run("verify-all -m 8").exit_code == 2);
  CHECK(run("group -m 6").exit_code == 2);
  CHECK(run("verify-all --threads 0").exit_code == 2);
}

TEST_CASE("graph command: Hadamard graph from the extended code") {
  const auto file = scratch("gamma12star.dot");
  const auto r = run("graph -m 4 --pair 1,2 --extended --out " + file.string());
  CHECK(r.exit_code == 0);
  const auto cls = nlohmann::json::parse(r.out);
  CHECK(cls["vertices"] == 64);
  CHECK(cls["hadamard_order"] == 16);
  const auto dot = slurp(file);
  CHECK(dot.rfind("graph coset_graph {", 0) == 0);
  CHECK(std::count(dot.begin(), dot.end(), '-') == 2 * 64 * 16 / 2);
}

TEST_CASE("graph command: JSON format and classification on stderr") {
  const auto r = run("graph -m 4 --pair 0,1 --format json");
  CHECK(r.exit_code == 0);
  const auto g = nlohmann::json::parse(r.out);
  CHECK(g["vertices"] == 32);
  const auto merged = run("graph -m 4 --pair 0,1 --format json", "2>&1 >/dev/null");
  CHECK(merged.out.find("\"taylor\": true") != std::string::npos);
}

TEST_CASE("graph command reads a matrix file") {
  const auto file = scratch("ham.txt");
  REQUIRE(run("construct -m 4 --pair 1,3 --out " + file.string()).exit_code == 0);
  const auto r = run("graph --input " + file.string() + " --format text");
  CHECK(r.exit_code == 0);
  CHECK(r.out.rfind("16\n", 0) == 0);
}

TEST_CASE("cosets command") {
  const auto r = run("cosets -m 4 --pair 2,3 --extended");
  CHECK(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["rho"] == 4);
  CHECK(j["intersection_array"]["text"] == "(16, 15, 8, 1; 1, 8, 15, 16)");
  const auto all = nlohmann::json::parse(run("cosets -m 4").out);
  CHECK(all["profiles"].size() == 6);
}

TEST_CASE("group command with hex dump") {
  const auto file = scratch("sp4.hex");
  const auto r = run("group -m 4 --pair 0,1 --dump-hex " + file.string());
  CHECK(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["order"] == 720);
  const auto hex = slurp(file);
  CHECK(std::count(hex.begin(), hex.end(), '\n') == 720);
}

TEST_CASE("verify-all: exit code and thread-count determinism") {
  const auto one = run("verify-all -m 4 --threads 1");
  const auto eight = run("verify-all -m 4 --threads 8");
  CHECK(one.exit_code == 0);
  CHECK(eight.exit_code == 0);
  CHECK(one.out == eight.out);
  const auto j = nlohmann::json::parse(one.out);
  CHECK(j["summary"]["failed"] == 0);

  const auto skip = run("verify-all -m 6 --skip-group");
  CHECK(skip.exit_code == 0);
  CHECK(nlohmann::json::parse(skip.out)["summary"]["skipped"].get<int>() > 0);
}
