#include <doctest.h>

#include "dcq/cli/commands.hpp"
#include "dcq/cli/reproduce.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace dcq;
using namespace dcq::cli;

namespace {

std::filesystem::path temp_file(const std::string& name) { return std::filesystem::temp_directory_path() / name; }

nlohmann::json stable(nlohmann::json j) {
  j.erase("metadata");
  return j;
}

int run_args(std::vector<std::string> args, std::string* out_text = nullptr) {
  std::vector<char*> argv;
  static std::string prog = "dcq";
  argv.push_back(prog.data());
  for (auto& a : args) argv.push_back(a.data());
  std::ostringstream out, err;
  int code = main_entry(static_cast<int>(argv.size()), argv.data(), out, err);
  if (out_text) *out_text = out.str();
  return code;
}

}  // namespace

TEST_CASE("settings parse and reject bad values") {
  RunConfig c;
  apply_setting(c, "k", "3");
  apply_setting(c, "x", "1, 2.5,3");
  apply_setting(c, "convention", "full");
  apply_setting(c, "calibrate", "true");
  CHECK(c.k == 3);
  REQUIRE(c.x);
  CHECK(c.x->size() == 3);
  CHECK(c.convention == "full");
  CHECK(c.calibrate);
  CHECK_THROWS_AS(apply_setting(c, "k", "two"), ConfigError);
  CHECK_THROWS_AS(apply_setting(c, "unit", "grad"), ConfigError);
  CHECK_THROWS_AS(apply_setting(c, "colour", "red"), ConfigError);
}

TEST_CASE("config file with comments") {
  auto path = temp_file("dcq_test.cfg");
  {
    std::ofstream f(path);
    f << "# parameter point\nk = 3\n\nA = 1.5   # potential\nunit = degrees\n";
  }
  RunConfig c;
  load_config_file(c, path.string());
  CHECK(c.k == 3);
  CHECK(c.A == 1.5);
  CHECK(c.unit_set);
  {
    std::ofstream f(path);
    f << "k 3\n";
  }
  CHECK_THROWS_AS(load_config_file(c, path.string()), ConfigError);
  std::filesystem::remove(path);
}

TEST_CASE("flags override the config file") {
  auto path = temp_file("dcq_prec.cfg");
  {
    std::ofstream f(path);
    f << "spec = x1-Px1\nconvention = full\n";
  }
  std::string out;
  REQUIRE(run_args({"bound", "--config", path.string()}, &out) == 0);
  CHECK(nlohmann::json::parse(out)["result"]["value"].get<double>() == doctest::Approx(0.225625));
  REQUIRE(run_args({"bound", "--config", path.string(), "--reduced"}, &out) == 0);
  CHECK(nlohmann::json::parse(out)["result"]["value"].get<double>() == doctest::Approx(0.050625));
  std::filesystem::remove(path);
}

TEST_CASE("exit codes") {
  CHECK(run_args({"derive", "--k", "0"}) == kExitUsage);
  CHECK(run_args({"bound", "--spec", "nonsense"}) == kExitUsage);
  CHECK(run_args({"sweep", "--kind", "upper", "--grid-max", "0.5", "--grid-points", "10"}) == kExitDomain);
  CHECK(run_args({"frobnicate"}) == kExitUsage);
  CHECK(run_args({"bound", "--k", "x"}) == kExitUsage);
}

TEST_CASE("reports embed the resolved config and are deterministic") {
  RunConfig c;
  c.command = "bound";
  c.spec = "Px1-Py1";
  c.alpha = 0.4;
  auto a = run_command(c), b = run_command(c);
  REQUIRE(a.exit_code == 0);
  CHECK(a.report["config"]["alpha"].get<double>() == 0.4);
  CHECK(stable(a.report).dump() == stable(b.report).dump());
}

TEST_CASE("sweep report carries the grid as csv") {
  RunConfig c;
  c.command = "sweep";
  c.kind = "upper";
  auto r = run_command(c);
  REQUIRE(r.exit_code == 0);
  CHECK(r.report["result"]["a_star"].get<double>() == doctest::Approx(1.63).epsilon(0.03));
  CHECK(r.csv.rfind("A,B,bound,above\n", 0) == 0);
  CHECK(render(r, "csv") == r.csv);
}

TEST_CASE("energy command") {
  RunConfig c;
  c.command = "energy";
  c.A = 0;
  auto r = run_command(c);
  REQUIRE(r.exit_code == 0);
  CHECK(r.report["result"]["shift"]["re"].get<double>() == doctest::Approx(0.00625));
}

TEST_CASE("atomic write replaces the target") {
  auto path = temp_file("dcq_atomic.json");
  write_atomic(path.string(), "first");
  write_atomic(path.string(), "second");
  std::ifstream f(path);
  std::string s((std::istreambuf_iterator<char>(f)), {});
  CHECK(s == "second");
  CHECK_FALSE(std::filesystem::exists(path.string() + ".tmp"));
  std::filesystem::remove(path);
  CHECK_THROWS(write_atomic("/nonexistent-dir/x.json", "x"));
}

TEST_CASE("half-up rounding at printed precision") {
  CHECK(rounds_to(0.050625, "0.05"));
  CHECK(rounds_to(1.8025, "1.80"));
  CHECK(rounds_to(0.325, "0.33"));
  CHECK_FALSE(rounds_to(0.3149, "0.32"));
  CHECK(rounds_to(11.2577, "11.26"));
}

TEST_CASE("reproduce subset") {
  auto r = reproduce({"brackets", 16, 512});
  CHECK_FALSE(r.rows.empty());
  for (const auto& row : r.rows) CHECK(row.group == "brackets");
  CHECK(r.all_pass);
  CHECK_THROWS_AS(reproduce({"nope", 16, 512}), std::invalid_argument);
  auto csv = to_csv(r);
  CHECK(csv.rfind("id,group,criterion", 0) == 0);
}
