#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include <nlohmann/json.hpp>
#include <sys/wait.h>

namespace {

using nlohmann::json;

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run(const std::string& args) {
  std::string cmd = std::string(EDSBOUND_BIN) + " " + args + " 2>/dev/null";
  RunResult r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
  int status = pclose(p);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string data(const char* name) {
  return (std::filesystem::path(EDSBOUND_DATA_DIR) / name).string();
}

std::filesystem::path write_temp(const char* name, const std::string& text) {
  auto p = std::filesystem::temp_directory_path() / name;
  std::ofstream f(p, std::ios::trunc);
  f << text;
  return p;
}

}  // namespace

TEST_CASE("sequence csv output") {
  auto r = run("sequence --input " + data("curve37a.json") +
               " --max-n 10 --format csv");
  CHECK(r.exit_code == 0);
  CHECK(r.out.rfind("n,", 0) == 0);
  // B_5 = 4 with primitive divisor 2, B_10 = 16 without one
  CHECK(r.out.find("\n5,") != std::string::npos);
  CHECK(r.out.find("\n10,") != std::string::npos);
}

TEST_CASE("sequence json flags indices without primitive divisors") {
  auto r = run("sequence --input " + data("curve37a.json") + " --max-n 10");
  CHECK(r.exit_code == 0);
  auto j = json::parse(r.out);
  CHECK(j["n_without_primitive_divisor"] ==
        json::array({1, 2, 3, 4, 6, 10}));
  CHECK(j["terms"].size() == 10);
}

TEST_CASE("bound report") {
  auto r = run("bound --input " + data("curve37a.json"));
  CHECK(r.exit_code == 0);
  auto j = json::parse(r.out);
  REQUIRE(j.contains("report"));
  CHECK_FALSE(j.contains("report_if_minimal"));
  CHECK(j["report"].contains("K_bound"));
  CHECK(j["report"]["s"] == 1);
  CHECK(j["report"]["diagnostics"].contains("b2"));
  CHECK(j["report"]["diagnostics"].contains("b2_linear_variant"));
}

TEST_CASE("unasserted minimality yields both readings") {
  auto r = run("bound --input " + data("curve37a_unasserted.json"));
  CHECK(r.exit_code == 0);
  auto j = json::parse(r.out);
  REQUIRE(j.contains("report"));
  REQUIRE(j.contains("report_if_minimal"));
  CHECK(j["report"]["s"] == 2);
  CHECK(j["report_if_minimal"]["s"] == 1);
}

TEST_CASE("heights subcommand") {
  auto r = run("heights --input " + data("curve389a.json"));
  CHECK(r.exit_code == 0);
  auto j = json::parse(r.out);
  CHECK(j.contains("C_E"));
  CHECK(j.contains("enclosure"));
  double lo = std::stod(j["enclosure"]["lower"]["value"].get<std::string>());
  double hi = std::stod(j["enclosure"]["upper"]["value"].get<std::string>());
  CHECK(lo < hi);
  CHECK(hi - lo <= 1e-3);
}

TEST_CASE("malformed input exits 2") {
  auto p = write_temp("edsbound_cli_bad.json", "{ this is not json");
  auto r = run("sequence --input " + p.string());
  CHECK(r.exit_code == 2);
  std::filesystem::remove(p);
}

TEST_CASE("bad conductor exits 2") {
  auto p = write_temp("edsbound_cli_cond.json",
                      R"({"a":["0","0","1","-1","0"],"point":["0","0"],)"
                      R"("conductor":1,"minimal":true,"degree":1})");
  auto r = run("bound --input " + p.string());
  CHECK(r.exit_code == 2);
  std::filesystem::remove(p);
}

TEST_CASE("off-curve point exits 2") {
  auto p = write_temp("edsbound_cli_off.json",
                      R"({"a":["0","0","1","-1","0"],"point":["2","3"],)"
                      R"("conductor":37,"minimal":true,"degree":1})");
  auto r = run("heights --input " + p.string());
  CHECK(r.exit_code == 2);
  std::filesystem::remove(p);
}

TEST_CASE("verify default corpus passes") {
  auto r = run("verify");
  CHECK(r.exit_code == 0);
  auto j = json::parse(r.out);
  CHECK(j["all_pass"] == true);
  CHECK(j["checks"].size() > 0);
}

TEST_CASE("cached rerun is byte-identical") {
  auto cache = std::filesystem::temp_directory_path() / "edsbound_cli_cache.jsonl";
  std::filesystem::remove(cache);
  std::string args = "sequence --input " + data("curve37a.json") +
                     " --max-n 20 --cache " + cache.string();
  auto cold = run(args);
  CHECK(cold.exit_code == 0);
  CHECK(std::filesystem::exists(cache));
  auto warm = run(args);
  CHECK(warm.exit_code == 0);
  CHECK(warm.out == cold.out);
  std::filesystem::remove(cache);
}
