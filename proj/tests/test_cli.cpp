#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "ecs/serialization.hpp"

// End-to-end checks of the installed binary: exit codes, JSON stability,
// config handling, and the output-directory override.

namespace {

namespace fs = std::filesystem;

struct RunResult {
  int code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

RunResult run(const std::string& args, const std::string& extra_env = "") {
  static int counter = 0;
  fs::path dir = fs::temp_directory_path() / "ecs-cli-tests";
  fs::create_directories(dir);
  fs::path out = dir / ("out" + std::to_string(counter) + ".txt");
  fs::path err = dir / ("err" + std::to_string(counter) + ".txt");
  ++counter;
  std::string cmd = extra_env + " \"" + std::string(ECS_CLI_PATH) + "\" " + args + " > " +
                    out.string() + " 2> " + err.string();
  int status = std::system(cmd.c_str());
  RunResult r;
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = slurp(out);
  r.err = slurp(err);
  return r;
}

}  // namespace

TEST_CASE("usage errors exit with code 2") {
  CHECK(run("delta1 --rank 1 --m 1 --kappa 0.5").code == 2);   // decimal coupling rejected
  CHECK(run("delta1 --rank 3 --m 1,0 --kappa 2").code == 2);   // arity mismatch
  CHECK(run("energy --rank 1 --m 1 --kappa 2 --g 1.5").code == 2);
  CHECK(run("frobnicate").code == 2);
  CHECK(run("").code == 2);  // a subcommand is required
  CHECK(run("--help").code == 0);
}

TEST_CASE("delta1 emits both routes in agreement") {
  RunResult r = run("delta1 --rank 1 --m 1 --kappa 2");
  REQUIRE(r.code == 0);
  ecs::Json j = ecs::Json::parse(r.out);
  CHECK(j["d1"]["generic"]["exact"] == "20");
  CHECK(j["d1"]["closed"]["exact"] == "20");
  CHECK(j["routes_agree"] == true);
  CHECK(j["inputs"]["kappa"]["exact"] == "2");
}

TEST_CASE("delta2 closed form is flagged as-printed") {
  RunResult r = run("delta2 --rank 1 --m 0 --kappa 3 --form both");
  REQUIRE(r.code == 0);
  ecs::Json j = ecs::Json::parse(r.out);
  CHECK(j["d2"]["recurrence"]["exact"] == "693/5");
  CHECK(j["d2"]["closed"]["exact"] == "4293/5");
  CHECK(j["d2"]["closed"]["note"].get<std::string>().find("as-printed") != std::string::npos);
}

TEST_CASE("coeffs table and polynomial dump") {
  RunResult r = run("coeffs --rank 1 --m 1 --kappa 2 --dump");
  REQUIRE(r.code == 0);
  ecs::Json j = ecs::Json::parse(r.out);
  CHECK(j["up"][0]["exact"] == "1");
  CHECK(j["up"][1]["exact"] == "2/3");
  CHECK(j["provenance"] == "jack-basis-linear-solve");
  REQUIRE(j.contains("polynomial"));
  CHECK(j["polynomial"][0]["coeff"] == "1");
}

TEST_CASE("JSON output re-parses and re-renders byte-identically") {
  for (const char* args : {"delta1 --rank 2 --m 1,0 --kappa 5/2",
                           "energy --rank 1 --m 2 --kappa 3 --g 0.001 --order 2",
                           "weier --z 0.7 --g 0.05 --oracle",
                           "oracle --rank 1 --m 0 --kappa 3 --basis 40 --pmax 8"}) {
    RunResult r = run(args);
    REQUIRE(r.code == 0);
    std::string once = r.out;
    REQUIRE(!once.empty());
    CHECK(once.back() == '\n');
    once.pop_back();
    ecs::Json j = ecs::Json::parse(once);
    CHECK(ecs::dump_canonical(j) == once);
    // determinism across invocations
    RunResult r2 = run(args);
    CHECK(r2.out == r.out);
  }
}

TEST_CASE("oracle csv table") {
  RunResult r = run("oracle --rank 1 --m 0 --kappa 3 --basis 40 --pmax 8 --format csv "
                    "--g 0.001,0.002");
  REQUIRE(r.code == 0);
  std::istringstream lines(r.out);
  std::string l0, l1, l2, l3;
  std::getline(lines, l0);
  std::getline(lines, l1);
  std::getline(lines, l2);
  std::getline(lines, l3);
  CHECK(l0 == "# ecs oracle table v1");
  CHECK(l1 == "m,g,E_num,E_pert,residual,ratio");
  CHECK(l2.substr(0, 2) == "0,");
  CHECK(l2.back() == ',');           // no ratio on the first row
  CHECK(l3.find(",0.002,") != std::string::npos);
}

TEST_CASE("config file values are used and flags override them") {
  fs::path dir = fs::temp_directory_path() / "ecs-cli-tests";
  fs::create_directories(dir);
  fs::path cfg = dir / "run.cfg";
  {
    std::ofstream out(cfg);
    out << "[delta1]\nrank=1\nm=1\nkappa=2\n";
  }
  RunResult r = run("--config " + cfg.string() + " delta1");
  REQUIRE(r.code == 0);
  CHECK(ecs::Json::parse(r.out)["d1"]["generic"]["exact"] == "20");

  RunResult over = run("--config " + cfg.string() + " delta1 --kappa 3");
  REQUIRE(over.code == 0);
  // 8*6*(1 + 6/15) at kappa=3, m=1
  CHECK(ecs::Json::parse(over.out)["d1"]["generic"]["exact"] == "336/5");

  fs::path bad = dir / "bad.cfg";
  {
    std::ofstream out(bad);
    out << "[delta1]\nrank=1\nm=1\nkappa=2\nnonsense_key=7\n";
  }
  CHECK(run("--config " + bad.string() + " delta1").code == 2);
}

TEST_CASE("output file and directory override") {
  fs::path dir = fs::temp_directory_path() / "ecs-cli-outdir";
  fs::remove_all(dir);
  fs::create_directories(dir);
  RunResult r = run("delta1 --rank 1 --m 1 --kappa 2 -o result.json",
                    "ECS_OUTPUT_DIR=" + dir.string());
  REQUIRE(r.code == 0);
  std::string content = slurp(dir / "result.json");
  CHECK(ecs::Json::parse(content)["d1"]["generic"]["exact"] == "20");
}

TEST_CASE("verify spot suite passes") {
  RunResult r = run("verify --suite spot");
  CHECK(r.code == 0);
  ecs::Json j = ecs::Json::parse(r.out);
  CHECK(j["passed"] == true);
  CHECK(run("verify --suite no-such-suite").code == 2);
}
