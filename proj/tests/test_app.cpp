#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "latpack/cli.hpp"
#include "latpack/reference.hpp"
#include "latpack/report.hpp"

using namespace latpack;
using report::Json;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

Json outputs(const Run& r) { return Json::parse(r.out).at("outputs"); }

}  // namespace

TEST_CASE("report envelope round trip") {
  report::ReportEnvelope e;
  e.command = "demo";
  e.inputs = {{"n", 3}, {"x", 0.1}};
  e.outputs = {{"values", {1.0 / 3, 2e-300, 123456789.123}},
               {"big", report::big_to_json(BigInt("123456789012345678901234567890"))},
               {"flag", true}};
  e.meta.elapsed_ms = 1.5;
  e.meta.tolerances = {{"values", 1e-12}};
  const auto back = report::parse(report::emit(e));
  CHECK(back.command == e.command);
  CHECK(back.inputs == e.inputs);
  CHECK(back.outputs == e.outputs);
  CHECK(back.meta.tolerances == e.meta.tolerances);
  CHECK(report::to_json(back) == report::to_json(e));
  CHECK(report::big_from_json(back.outputs["big"]) == BigInt("123456789012345678901234567890"));
  CHECK(report::big_to_json(BigInt(42)) == Json(42));
  CHECK_THROWS(report::parse("{}"));
  CHECK_THROWS(report::big_from_json(Json(1.5)));
}

TEST_CASE("reference constants carry provenance") {
  for (const auto& c : reference::constants()) {
    CHECK(!c.provenance.empty());
    CHECK(c.center_density > 0);
  }
  CHECK(reference::center_density(2).center_density == doctest::Approx(1 / (2 * std::sqrt(3.0))));
  CHECK(reference::center_density(9).candidate);
  CHECK(reference::hermite(8) == doctest::Approx(2.0));
  CHECK(reference::hermite(24) == doctest::Approx(4.0));
  CHECK_THROWS(reference::center_density(40));
}

TEST_CASE("cli museq") {
  const auto g = run({"museq", "greedy", "--mu", "3", "--dim", "4"});
  REQUIRE(g.code == 0);
  CHECK(outputs(g)["s"] == Json({1, 2, 3, 4, 5}));
  CHECK(outputs(g)["certified"] == true);
  CHECK(Json::parse(g.out)["command"] == "museq greedy");

  const auto c = run({"museq", "certify", "--s", "1,2,3", "--mu", "3"});
  REQUIRE(c.code == 0);
  CHECK(outputs(c)["certified"] == true);
  CHECK(outputs(c)["minimum"] == 3);

  const auto o = run({"museq", "obstructions", "--s", "1,2", "--mu", "3", "--lo", "1", "--hi", "10"});
  REQUIRE(o.code == 0);
  CHECK(outputs(o)["union"] == Json({1, 2}));
  CHECK(outputs(o)["first_free"] == 3);

  CHECK(run({"museq", "certify", "--s", "2,3", "--mu", "3"}).code == cli::kInputError);
  CHECK(run({"museq", "certify", "--s", "1,x", "--mu", "3"}).code == cli::kInputError);
}

TEST_CASE("cli lattice and bounds") {
  const auto l = run({"lattice", "report", "--s", "1,2,3"});
  REQUIRE(l.code == 0);
  CHECK(outputs(l)["minimum"] == 3);
  CHECK(outputs(l)["determinant"] == 14);
  CHECK(outputs(l)["witness"] == Json({1, 1, -1}));

  const auto f = run({"bounds", "f", "--n", "2", "--x", "4", "--y", "1"});
  REQUIRE(f.code == 0);
  CHECK(outputs(f)["F"].get<double>() == doctest::Approx(std::sqrt(3.0)));

  const auto y = run({"bounds", "y", "--n", "2", "--x", "1"});
  CHECK(outputs(y)["Y"].get<double>() == doctest::Approx(2 / std::sqrt(3.0)));

  const auto cn = run({"bounds", "cn", "--n", "3", "--x", "1.15470054"});
  REQUIRE(cn.code == 0);
  CHECK(std::fabs(outputs(cn)["center_density_bound"].get<double>() - 0.1695) < 5e-4);

  const auto t = run({"bounds", "theorem1", "--n", "2", "--delta-prev", "0.5", "--delta", "0.28867513459481287",
                      "--form", "hermite"});
  REQUIRE(t.code == 0);
  CHECK(std::fabs(outputs(t)["residual"].get<double>()) < 1e-12);

  const auto m = run({"bounds", "mordell", "--n", "3", "--gamma", "1.1547005383792517"});
  CHECK(outputs(m)["gamma_upper"].get<double>() == doctest::Approx(4.0 / 3));

  CHECK(run({"bounds", "mordell", "--n", "2", "--gamma", "1"}).code == cli::kInputError);
  CHECK(run({"bounds", "theorem1", "--n", "3", "--delta-prev", "0.5", "--delta", "0.2", "--form", "x"}).code ==
        cli::kInputError);
}

TEST_CASE("cli theta") {
  const auto fp = run({"theta", "fixpoint"});
  REQUIRE(fp.code == 0);
  CHECK(std::fabs(outputs(fp)["xi"].get<double>() - 23.13882534) < 1e-7);

  const auto tab = run({"theta", "table", "--max-n", "16"});
  REQUIRE(tab.code == 0);
  const auto rows = outputs(tab)["rows"];
  REQUIRE(rows.size() == 5);
  CHECK(rows[3]["n"] == 8);
  CHECK(std::fabs(rows[3]["d"].get<double>() - 18.71971890) < 1e-6);
  CHECK(std::fabs(rows[4]["d"].get<double>() - 30.69030131) < 1e-6);

  const auto csv = run({"theta", "table", "--max-n", "4", "--csv"});
  REQUIRE(csv.code == 0);
  CHECK(csv.out.rfind("n,d_n,omega_n,scaled_diff,A_n\n", 0) == 0);
  CHECK(csv.out.find("2,3.62759873,3.99997210,") != std::string::npos);

  const auto fit = run({"theta", "fit", "--ladder", "128,256,512,1024"});
  REQUIRE(fit.code == 0);
  CHECK(outputs(fit)["c1"].get<double>() == doctest::Approx(119.58193).epsilon(0.01));
  CHECK(run({"theta", "fit", "--ladder", "128,128,512,1024"}).code == cli::kInputError);
}

TEST_CASE("cli approx") {
  const std::string path = "test_app_gram.json";
  {
    std::ofstream out(path);
    out << R"({"n": 2, "gram": [[1, 0], [0, 1]]})";
  }
  const auto a = run({"approx", "--gram", path, "--kappa", "100", "--verify"});
  REQUIRE(a.code == 0);
  CHECK(outputs(a)["s"] == Json({1, 100, 10000}));
  CHECK(outputs(a)["verification"]["kernel_ok"] == true);
  CHECK(run({"approx", "--gram", "/nonexistent.json", "--kappa", "10"}).code == cli::kInputError);
  std::remove(path.c_str());
}

TEST_CASE("cli usage errors and budget") {
  CHECK(run({}).code == cli::kInputError);
  CHECK(run({"museq", "greedy", "--mu"}).code == cli::kInputError);
  CHECK(run({"museq", "greedy", "--mu", "3", "--dim", "2", "--bogus"}).code == cli::kInputError);
  CHECK(run({"--help"}).code == 0);

  setenv(cli::kBudgetEnv, "1", 1);
  CHECK(run({"lattice", "report", "--s", "1,3,7,12,20,33"}).code == cli::kResourceError);
  setenv(cli::kBudgetEnv, "nope", 1);
  CHECK(run({"lattice", "report", "--s", "1,2,3"}).code == cli::kInputError);
  unsetenv(cli::kBudgetEnv);
}

TEST_CASE("verify output is deterministic apart from timings") {
  auto strip = [](const std::string& s) {
    Json j = Json::parse(s);
    j["meta"].erase("elapsed_ms");
    j["meta"].erase("extra");
    return j.dump();
  };
  const auto a = run({"verify", "paper", "--only", "10,11,13"});
  const auto b = run({"verify", "paper", "--only", "10,11,13"});
  CHECK(strip(a.out) == strip(b.out));
  CHECK(Json::parse(a.out)["outputs"]["criteria"].size() == 3);
}
