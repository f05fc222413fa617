// End-to-end checks of the command-line interface: flag handling, exit
// codes, and the JSON/CSV output contracts.

#include <doctest.h>

#include <json.hpp>

#include <array>
#include <cmath>
#include <cstdio>
#include <string>

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run(const std::string& args) {
  const std::string cmd = std::string(DERIVKIT_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

}  // namespace

TEST_CASE("coeffs csv rows") {
  const RunResult r = run("coeffs --max-m 5 --format csv");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("m,k,a,paper,agrees\n") == 0);
  CHECK(r.out.find("5,2,90,,\n") != std::string::npos);
  CHECK(r.out.find("1,0,1,,\n") != std::string::npos);
  CHECK(r.out.find("2,1,1,,\n") != std::string::npos);

  const RunResult cmp = run("coeffs --max-m 9 --format csv --compare-paper-form");
  CHECK(cmp.out.find("8,1,11025,33075/2,false\n") != std::string::npos);
  CHECK(cmp.out.find("5,2,90,90,true\n") != std::string::npos);
}

TEST_CASE("coeffs json round-trips") {
  const RunResult r = run("coeffs --max-m 6 --format json --compare-paper-form");
  CHECK(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j.dump() + "\n" == r.out);
  CHECK(j.at("max_m") == 6);
  bool found = false;
  for (const auto& row : j.at("rows")) {
    if (row.at("m") == 5 && row.at("k") == 2) {
      found = true;
      CHECK(row.at("a").at("num") == "90");
      CHECK(row.at("a").at("den") == "1");
      CHECK(row.at("agrees") == true);
    }
  }
  CHECK(found);
}

TEST_CASE("coeffs usage errors") {
  CHECK(run("coeffs --max-m 1").exit_code == 2);
  CHECK(run("coeffs").exit_code == 2);
  CHECK(run("coeffs --max-m 5 --format yaml").exit_code == 2);
}

TEST_CASE("bell outputs") {
  const RunResult poly = run("bell --n 4 --k 2");
  CHECK(poly.exit_code == 0);
  CHECK(poly.out == "4*x1*x3 + 3*x2^2\n");

  const RunResult special = run("bell --n 8 --k 4 --special");
  CHECK(special.out == "105\n");

  const RunResult value = run("bell --n 5 --k 2 --args 1,1,1,1");
  CHECK(value.out == "15\n");

  CHECK(run("bell --n 3 --k 4").exit_code == 2);
  CHECK(run("bell --n 3 --k 2 --args 1").exit_code == 2);

  const RunResult json = run("bell --n 4 --k 2 --format json");
  const auto j = nlohmann::json::parse(json.out);
  CHECK(j.at("polynomial").size() == 2);
}

TEST_CASE("derive expressions and evaluations") {
  const RunResult terms = run("derive --function arcsin --order 4 --format json");
  CHECK(terms.exit_code == 0);
  const auto j = nlohmann::json::parse(terms.out);
  CHECK(j.dump() + "\n" == terms.out);
  REQUIRE(j.at("terms").size() == 2);
  CHECK(j.at("terms").at(0).at("coeff").at("num") == "9");
  CHECK(j.at("terms").at(1).at("coeff").at("num") == "15");

  const RunResult at = run("derive --function log_ratio --order 1 --at 1/3");
  CHECK(at.out == "9/4\n");

  const RunResult exp0 = run("derive --function exp_sq_plus --order 2 --at 0");
  CHECK(exp0.out == "2\n");

  const RunResult numeric =
      run("derive --function log_ratio --order 1 --at 1/3 --numeric 64 --format json");
  const auto jn = nlohmann::json::parse(numeric.out);
  const std::string rendered = jn.at("numeric").get<std::string>();
  CHECK(rendered.find("2.25") == 0);
}

TEST_CASE("derive exit codes") {
  CHECK(run("derive --function nope --order 1").exit_code == 2);
  CHECK(run("derive --function arcsin --order 2 --at 2").exit_code == 3);
  CHECK(run("derive --function exp_recip_plus --order 1 --at 0").exit_code == 3);
  CHECK(run("derive --function cot --order 1 --at 0").exit_code == 3);
  CHECK(run("derive --function pow_1px2 --order 1 --alpha 3").exit_code == 2);
  CHECK(run("derive --function pow_1px2 --order 1").exit_code == 2);
  CHECK(run("derive --function arcsin --order 1 --alpha 1/2").exit_code == 2);
  CHECK(run("derive --function arcsin --order 1 --numeric 64").exit_code == 2);
  CHECK(run("derive --function arcsin --order 1 --at 1/0").exit_code == 2);
  CHECK(run("derive --function pow_1mx2 --order 3 --alpha -1/2 --at 1/4").exit_code == 0);
}

TEST_CASE("derive --at agrees with an independent evaluation of the term list") {
  // Evaluate the JSON term list with a tiny interpreter and compare with the
  // --at output for a family whose values are plain rationals.
  const RunResult terms = run("derive --function arctan --order 5 --format json");
  const auto j = nlohmann::json::parse(terms.out);
  const double x = 0.5;
  double total = 0.0;
  for (const auto& term : j.at("terms")) {
    double v = std::stod(term.at("coeff").at("num").get<std::string>()) /
               std::stod(term.at("coeff").at("den").get<std::string>());
    for (const auto& f : term.at("factors")) {
      const std::string atom = f.at("atom").get<std::string>();
      const double e = std::stod(f.at("exp").at("num").get<std::string>()) /
                       std::stod(f.at("exp").at("den").get<std::string>());
      double base = 0.0;
      if (atom == "x") base = x;
      else if (atom == "(1+x^2)") base = 1 + x * x;
      else FAIL("unexpected atom ", atom);
      v *= std::pow(base, e);
    }
    total += v;
  }
  const RunResult at = run("derive --function arctan --order 5 --at 1/2 --format json");
  const auto ja = nlohmann::json::parse(at.out);
  REQUIRE(ja.at("value").size() == 1);
  CHECK(ja.at("value").at(0).at("symbol") == "1");
  const double exact =
      std::stod(ja.at("value").at(0).at("coeff").at("num").get<std::string>()) /
      std::stod(ja.at("value").at(0).at("coeff").at("den").get<std::string>());
  CHECK(std::abs(total - exact) < 1e-9 * std::abs(exact));
}

TEST_CASE("verify json: schema, determinism, exit code") {
  const RunResult a = run("verify --suite coeffs --max-order 12 --format json");
  CHECK(a.exit_code == 0);
  const RunResult b = run("verify --suite coeffs --max-order 12 --format json");
  CHECK(a.out == b.out);

  const auto j = nlohmann::json::parse(a.out);
  CHECK(j.dump() + "\n" == a.out);
  CHECK(j.at("summary").at("fail") == 0);
  CHECK(j.at("summary").at("known").get<int>() >= 1);

  CHECK(run("verify --suite nothere --max-order 5").exit_code == 2);
  CHECK(run("verify --suite bell --max-order 0").exit_code == 2);
}

TEST_CASE("verify picks the seed from flag, environment, then default") {
  const RunResult flagged =
      run("verify --suite stirling --max-order 3 --seed 99 --format json");
  CHECK(nlohmann::json::parse(flagged.out).at("seed") == 99);

  const std::string cmd = "env DERIVKIT_SEED=123 " + std::string(DERIVKIT_CLI) +
                          " verify --suite stirling --max-order 3 --format json";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
  pclose(pipe);
  CHECK(nlohmann::json::parse(out).at("seed") == 123);

  const RunResult fallback = run("verify --suite stirling --max-order 3 --format json");
  CHECK(nlohmann::json::parse(fallback.out).at("seed") == 20140320);
}
