#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>
#include <json.hpp>

#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include "zetaband/cli.hpp"
#include "zetaband/errors.hpp"
#include "zetaband/interp.hpp"

using namespace zetaband;
using namespace zetaband::cli;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "zetaband");
  std::vector<char*> argv;
  for (auto& a : args) argv.push_back(a.data());
  std::ostringstream out, err;
  const int code = main_entry(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> v;
  std::istringstream in(s);
  for (std::string l; std::getline(in, l);) v.push_back(l);
  return v;
}

// Every row is an object keyed by exactly the declared columns, in order.
void check_schema(const nlohmann::json& doc, const std::string& command) {
  REQUIRE(doc.is_object());
  CHECK(doc.at("command") == command);
  REQUIRE(doc.at("columns").is_array());
  REQUIRE(doc.at("rows").is_array());
  for (const auto& row : doc.at("rows")) {
    REQUIRE(row.size() == doc.at("columns").size());
    for (const auto& c : doc.at("columns")) {
      REQUIRE(row.contains(c.get<std::string>()));
      const auto& v = row.at(c.get<std::string>());
      CHECK((v.is_number() || v.is_boolean() || v.is_string()));
    }
  }
}

const std::string kFixture = ZETABAND_FIXTURE;

}  // namespace

TEST_CASE("range parsing") {
  const auto r = Range::parse("0.6:0.9:0.05");
  CHECK(r.values().size() == 7);
  CHECK(r.values().back() == doctest::Approx(0.9));
  CHECK(Range::parse("1e4").values() == std::vector<double>{1e4});
  CHECK(Range::parse("2:2:1").values().size() == 1);
  CHECK_THROWS_AS(Range::parse("1:0:1"), DomainError);
  CHECK_THROWS_AS(Range::parse("0:1:0"), DomainError);
  CHECK_THROWS_AS(Range::parse("0:1:-1"), DomainError);
  CHECK_THROWS_AS(Range::parse("0:1"), DomainError);
  CHECK_THROWS_AS(Range::parse("abc"), DomainError);
  CHECK_THROWS_AS(Range::parse("1x"), DomainError);
  CHECK_THROWS_AS(Range::parse(""), DomainError);
}

TEST_CASE("constants") {
  const auto r = invoke({"constants", "--a", "1", "--delta", "0.3183098861837907"});
  REQUIRE(r.code == 0);
  const auto ls = lines(r.out);
  REQUIRE(ls.size() == 2);
  for (const char* col : {"lambda0", "lambda", "A", "B", "C", "D", "E", "branch", "minorant_mass", "majorant_mass"})
    CHECK(ls[0].find(col) != std::string::npos);
  CHECK(ls[1].find("0.77170231920910") != std::string::npos);
  CHECK(ls[1].find("-2.2747067948") != std::string::npos);
  CHECK(ls[1].find("1.319388306310") != std::string::npos);
  const auto c = invoke({"coeffs", "--a", "0.25:0.5:0.25", "--delta", "1"});
  REQUIRE(c.code == 0);
  CHECK(lines(c.out).size() == 3);
  CHECK(lines(c.out)[0].find("lambda0") == std::string::npos);
}

TEST_CASE("verify") {
  const auto r = invoke({"verify", "--kind", "majorant", "--a", "0.5", "--delta", "0.4", "--window", "20"});
  REQUIRE(r.code == 0);
  const auto ls = lines(r.out);
  REQUIRE(ls.size() == 2);
  CHECK(ls[1].rfind(",true") == ls[1].size() - 5);
  const auto j = invoke({"verify", "--a", "0.5", "--delta", "0.4", "--format", "json", "--points", "2001"});
  REQUIRE(j.code == 0);
  const auto doc = nlohmann::json::parse(j.out);
  check_schema(doc, "verify");
  CHECK(doc["rows"].size() == 2);
  for (const auto& row : doc["rows"]) {
    CHECK(row["max_violation"].get<double>() <= 1e-12);
    CHECK(row["ok"] == true);
  }
}

TEST_CASE("mass") {
  const auto r = invoke({"mass", "--a", "0.5", "--delta", "0.4", "--format", "json"});
  REQUIRE(r.code == 0);
  const auto doc = nlohmann::json::parse(r.out);
  check_schema(doc, "mass");
  const auto& row = doc["rows"][0];
  CHECK(row["node_kind"] == "b_zeros");
  CHECK(std::fabs(row["node_sum"].get<double>() - row["majorant_mass"].get<double>()) < 1e-8);
  CHECK(std::fabs(row["lattice_sum"].get<double>() - row["minorant_mass"].get<double>()) < 1e-8);
}

TEST_CASE("bounds table") {
  const auto r = invoke({"bounds", "--sigma", "0.6:0.9:0.05", "--t", "1e4"});
  REQUIRE(r.code == 0);
  const auto ls = lines(r.out);
  REQUIRE(ls.size() == 8);
  for (const char* col : {"B_sigma", "C_sigma", "realpart_coeff", "thm1_main", "thm1_error_shape", "thm2_main",
                          "thm3_upper_main", "thm3_lower_main", "thm3_error_shape"})
    CHECK(ls[0].find(col) != std::string::npos);
  const auto j = invoke({"bounds", "--sigma", "0.75", "--t", "1e4", "--format", "json"});
  const auto doc = nlohmann::json::parse(j.out);
  check_schema(doc, "bounds");
  CHECK(doc["rows"][0]["B_sigma"].get<double>() == doctest::Approx(interp::b_sigma(0.75)).epsilon(1e-15));
  CHECK(doc["rows"][0]["C_sigma"].get<double>() == doctest::Approx(interp::c_sigma(0.75)).epsilon(1e-15));
}

TEST_CASE("bounds with the empirical ratio") {
  const auto r = invoke({"bounds", "--sigma", "0.75", "--t", "1000:2000:1000", "--compare-empirical", "--format", "json"});
  REQUIRE(r.code == 0);
  const auto doc = nlohmann::json::parse(r.out);
  check_schema(doc, "bounds");
  for (const auto& row : doc["rows"]) {
    CHECK(row["abs_log_deriv"].get<double>() > 0.0);
    CHECK(row["ratio_to_thm1_main"].get<double>() > 0.0);
  }
}

TEST_CASE("huge values are emitted as strings in json") {
  const auto r = invoke({"bounds", "--sigma", "0.75", "--t", "1e300", "--format", "json"});
  REQUIRE(r.code == 0);
  const auto doc = nlohmann::json::parse(r.out);
  check_schema(doc, "bounds");
  CHECK(doc["rows"][0]["t"].is_number());
  const auto e = invoke({"bounds", "--sigma", "0.75", "--t", "1e308", "--format", "json"});
  REQUIRE(e.code == 0);
  CHECK(nlohmann::json::parse(e.out)["rows"][0]["t"].is_string());
}

TEST_CASE("gw and compare") {
  const auto g = invoke({"gw", "--sigma", "0.75", "--t", "500", "--format", "json"});
  REQUIRE(g.code == 0);
  check_schema(nlohmann::json::parse(g.out), "gw");
  const auto c = invoke({"compare", "--sigma", "0.75", "--t", "500", "--zeros", kFixture, "--format", "json"});
  REQUIRE(c.code == 0);
  const auto doc = nlohmann::json::parse(c.out);
  check_schema(doc, "compare");
  CHECK(doc["rows"][0]["gw_ok"] == true);
  CHECK(std::fabs(doc["rows"][0]["repr_residual"].get<double>()) <= doc["rows"][0]["repr_tail_bound"].get<double>() + 1e-7);
}

TEST_CASE("envelope") {
  const auto r = invoke({"envelope", "--sigma", "0.6:0.9:0.1", "--t", "1e10", "--format", "json"});
  REQUIRE(r.code == 0);
  const auto doc = nlohmann::json::parse(r.out);
  check_schema(doc, "envelope");
  CHECK(doc["rows"].size() == 4);
  for (const auto& row : doc["rows"])
    CHECK(row["leading_coefficient"].get<double>() ==
          doctest::Approx(row["c_sigma_coefficient"].get<double>()).epsilon(1e-10));
}

TEST_CASE("output is byte-identical across runs and thread counts") {
  const std::vector<std::string> args = {"verify", "--a", "0.25:1:0.25", "--delta", "0.5:1.5:0.5", "--points", "5001"};
  auto with = [&](const char* threads) {
    auto a = args;
    a.push_back("--threads");
    a.push_back(threads);
    return invoke(a).out;
  };
  const auto one = with("1");
  CHECK(one == with("1"));
  CHECK(one == with("4"));
  CHECK(one == with("7"));
  setenv("ZETA_TOOLKIT_THREADS", "3", 1);
  CHECK(one == invoke(args).out);
  unsetenv("ZETA_TOOLKIT_THREADS");
}

TEST_CASE("exit codes and error objects") {
  const auto missing = invoke({"compare", "--sigma", "0.75", "--t", "500"});
  CHECK(missing.code == 1);
  CHECK(missing.err.find("error (domain)") == 0);
  const auto missing_json = invoke({"compare", "--sigma", "0.75", "--t", "500", "--format", "json"});
  CHECK(missing_json.code == 1);
  const auto e = nlohmann::json::parse(missing_json.out);
  CHECK(e["error"]["kind"] == "domain");
  CHECK(e["error"]["exit_code"] == 1);
  CHECK(e["error"]["message"].is_string());

  CHECK(invoke({"compare", "--zeros", "/nonexistent/zeros.txt"}).code == 2);
  CHECK(invoke({"compare", "--zeros", kFixture, "--t", "80000"}).code == 1);
  CHECK(invoke({"bounds", "--sigma", "1.5"}).code == 1);
  CHECK(invoke({"verify", "--a", "0"}).code == 1);
  CHECK(invoke({"bounds", "--sigma", "0.9:0.6:0.1"}).code == 1);
  CHECK(invoke({"mass", "--tol", "0"}).code == 1);
  CHECK(invoke({"nonsense"}).code == 1);
  CHECK(invoke({"verify", "--format", "xml"}).code == 1);
  CHECK(invoke({}).code == 1);
}

TEST_CASE("malformed zero tables exit with code 2") {
  const std::string path = "/tmp/zetaband_test_bad_zeros.txt";
  {
    std::ofstream f(path);
    f << "14.134725\n21.022040\n18.0\n";
  }
  const auto r = invoke({"compare", "--zeros", path, "--format", "json"});
  CHECK(r.code == 2);
  CHECK(nlohmann::json::parse(r.out)["error"]["kind"] == "parse");
  std::remove(path.c_str());
}
