// Command-line front end: coefficient-table dumps, Bell polynomials,
// derivative expressions and exact evaluations, and the verification report.
//
// Exit codes: 0 success, 1 verification failures, 2 usage error, 3 domain
// violation.

#include "derivkit/bell.hpp"
#include "derivkit/closed_forms.hpp"
#include "derivkit/coeff_table.hpp"
#include "derivkit/numeric.hpp"
#include "derivkit/verifier.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

using namespace derivkit;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitDomain = 3;

nlohmann::json rational_json(const Rational& q) {
  return {{"num", num(q).str()}, {"den", den(q).str()}};
}

Rational parse_rational_or_exit(const std::string& text, const char* flag) {
  const auto q = parse_rational(text);
  if (!q) {
    std::cerr << "derivkit: invalid rational for " << flag << ": '" << text << "'\n";
    std::exit(kExitUsage);
  }
  return *q;
}

int run_coeffs(unsigned max_m, const std::string& format, bool compare) {
  if (max_m < 2) {
    std::cerr << "derivkit coeffs: --max-m must be >= 2\n";
    return kExitUsage;
  }
  const CoeffTable table(max_m);

  struct Row {
    unsigned m, k;
    Int a;
    std::optional<Rational> paper;
    bool agrees = true;
  };
  std::vector<Row> rows;
  for (unsigned m = 1; m <= max_m; ++m) {
    for (unsigned k = (m - 1) % 2; k < m; k += 2) {
      Row row{m, k, table.at(m, k), std::nullopt, true};
      if (compare && k >= 1 && m >= k + 2) {
        row.paper = paper_closed_form(m, k);
        row.agrees = *row.paper == Rational(row.a);
      }
      rows.push_back(std::move(row));
    }
  }

  if (format == "csv") {
    std::cout << "m,k,a,paper,agrees\n";
    for (const auto& r : rows) {
      std::cout << r.m << "," << r.k << "," << r.a.str() << ",";
      if (r.paper)
        std::cout << to_string(*r.paper) << "," << (r.agrees ? "true" : "false");
      else
        std::cout << ",";
      std::cout << "\n";
    }
    return kExitOk;
  }

  nlohmann::json j;
  j["max_m"] = max_m;
  nlohmann::json out_rows = nlohmann::json::array();
  for (const auto& r : rows) {
    nlohmann::json jr;
    jr["m"] = r.m;
    jr["k"] = r.k;
    jr["a"] = rational_json(Rational(r.a));
    if (r.paper) {
      jr["paper"] = rational_json(*r.paper);
      jr["agrees"] = r.agrees;
    }
    out_rows.push_back(std::move(jr));
  }
  j["rows"] = std::move(out_rows);
  std::cout << j.dump() << "\n";
  return kExitOk;
}

int run_bell(unsigned n, unsigned k, bool special, const std::string& args_csv,
             const std::string& format) {
  if (n < 1 || k < 1 || k > n) {
    std::cerr << "derivkit bell: need 1 <= k <= n\n";
    return kExitUsage;
  }
  std::vector<Rational> args;
  if (!args_csv.empty()) {
    std::size_t start = 0;
    while (start <= args_csv.size()) {
      const std::size_t comma = args_csv.find(',', start);
      const std::string piece =
          args_csv.substr(start, comma == std::string::npos ? std::string::npos
                                                            : comma - start);
      args.push_back(parse_rational_or_exit(piece, "--args"));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    if (args.size() < n - k + 1) {
      std::cerr << "derivkit bell: --args needs at least " << (n - k + 1)
                << " values\n";
      return kExitUsage;
    }
  }

  nlohmann::json j;
  j["n"] = n;
  j["k"] = k;
  std::string text;
  if (special) {
    const UnivariateMonomialForm m = bell_special(n, k);
    if (m.is_zero()) {
      text = "0";
    } else {
      text = to_string(m.coefficient);
      if (m.x_power == 1) text += "*x";
      if (m.x_power > 1) text += "*x^" + std::to_string(m.x_power);
    }
    j["special"] = {{"coeff", rational_json(m.coefficient)}, {"x_power", m.x_power}};
  } else if (!args.empty()) {
    const Rational value = bell_evaluate(bell_general(n, k), args);
    text = to_string(value);
    j["value"] = rational_json(value);
  } else {
    const BellPoly p = bell_general(n, k);
    text = to_string(p);
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [profile, coeff] : p.terms) {
      nlohmann::json t;
      t["coeff"] = rational_json(Rational(coeff));
      t["exponents"] = profile;
      terms.push_back(std::move(t));
    }
    j["polynomial"] = std::move(terms);
  }

  if (format == "json")
    std::cout << j.dump() << "\n";
  else
    std::cout << text << "\n";
  return kExitOk;
}

nlohmann::json expr_json(const ClosedFormExpr& expr) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [factors, coeff] : expr.terms()) {
    nlohmann::json t;
    t["coeff"] = rational_json(coeff);
    nlohmann::json fs = nlohmann::json::array();
    for (const auto& [atom, exponent] : factors) {
      fs.push_back({{"atom", atom.str()}, {"exp", rational_json(exponent)}});
    }
    t["factors"] = std::move(fs);
    terms.push_back(std::move(t));
  }
  return terms;
}

int run_derive(const std::string& name, unsigned order, const std::string& at,
               const std::string& alpha_text, unsigned numeric_bits,
               bool numeric_set, const std::string& format) {
  const FamilyInfo* family = find_family(name);
  if (family == nullptr) {
    std::cerr << "derivkit derive: unknown function '" << name << "'\n";
    return kExitUsage;
  }
  Rational alpha;
  if (family->takes_alpha) {
    if (alpha_text.empty()) {
      std::cerr << "derivkit derive: --alpha required for " << name << "\n";
      return kExitUsage;
    }
    alpha = parse_rational_or_exit(alpha_text, "--alpha");
    if (is_integer(alpha) && alpha >= 0) {
      std::cerr << "derivkit derive: alpha must lie outside {0} and the positive"
                   " integers\n";
      return kExitUsage;
    }
  } else if (!alpha_text.empty()) {
    std::cerr << "derivkit derive: --alpha is only valid for pow_* functions\n";
    return kExitUsage;
  }
  if (numeric_set && at.empty()) {
    std::cerr << "derivkit derive: --numeric requires --at\n";
    return kExitUsage;
  }

  const ClosedFormExpr expr = family->build(order, alpha);

  nlohmann::json j;
  j["function"] = name;
  j["order"] = order;
  if (family->takes_alpha) j["alpha"] = rational_json(alpha);
  j["terms"] = expr_json(expr);

  std::string text = expr.str();

  if (!at.empty()) {
    const Rational x0 = parse_rational_or_exit(at, "--at");
    try {
      family->check_domain(x0, alpha);
      const Evaluation value = evaluate_at(expr, x0);
      j["at"] = rational_json(x0);
      nlohmann::json vterms = nlohmann::json::array();
      for (const auto& [sym, coeff] : value.value.terms())
        vterms.push_back({{"symbol", sym.str()}, {"coeff", rational_json(coeff)}});
      j["value"] = std::move(vterms);
      text = value.value.str();
      if (value.divisor) {
        j["divisor"] = {{"symbol", value.divisor->str()},
                        {"power", value.divisor_power}};
        text = "(" + text + ") / " + value.divisor->str() + "^" +
               std::to_string(value.divisor_power);
      }
      if (numeric_set) {
        const std::string rendered = render_numeric(value, numeric_bits);
        j["numeric"] = rendered;
        text += "  ~  " + rendered;
      }
    } catch (const std::domain_error& e) {
      std::cerr << "derivkit derive: " << e.what() << "\n";
      return kExitDomain;
    }
  }

  if (format == "json")
    std::cout << j.dump() << "\n";
  else
    std::cout << text << "\n";
  return kExitOk;
}

int run_verify(const std::string& suite_text, unsigned max_order,
               std::optional<std::uint64_t> seed_flag, const std::string& format) {
  const auto suite = parse_suite(suite_text);
  if (!suite) {
    std::cerr << "derivkit verify: unknown suite '" << suite_text << "'\n";
    return kExitUsage;
  }
  if (max_order < 1) {
    std::cerr << "derivkit verify: --max-order must be >= 1\n";
    return kExitUsage;
  }
  std::uint64_t seed = kDefaultSeed;
  if (seed_flag) {
    seed = *seed_flag;
  } else if (const char* env = std::getenv("DERIVKIT_SEED")) {
    try {
      seed = std::stoull(env);
    } catch (const std::exception&) {
      std::cerr << "derivkit verify: DERIVKIT_SEED is not an integer\n";
      return kExitUsage;
    }
  }
  const Report report = run_suite(*suite, max_order, seed);
  if (format == "json")
    std::cout << report_json(report) << "\n";
  else
    std::cout << report_text(report);
  return report.fail == 0 ? kExitOk : kExitVerifyFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact derivative closed forms, Bell polynomials, and their"
               " machine verification"};
  app.require_subcommand(1);

  auto* coeffs = app.add_subcommand("coeffs", "dump the coefficient triangle a(m,k)");
  unsigned max_m = 0;
  std::string coeffs_format = "json";
  bool compare = false;
  coeffs->add_option("--max-m", max_m, "largest row to build")->required();
  coeffs->add_option("--format", coeffs_format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  coeffs->add_flag("--compare-paper-form", compare,
                   "add the as-published closed-form value and agreement flag");

  auto* bell = app.add_subcommand("bell", "partial Bell polynomial B(n,k)");
  unsigned bell_n = 0, bell_k = 0;
  bool special = false;
  std::string args_csv, bell_format = "text";
  bell->add_option("--n", bell_n, "degree n")->required();
  bell->add_option("--k", bell_k, "parts k")->required();
  bell->add_flag("--special", special, "closed form of B(n,k)(x,1,0,...,0)");
  bell->add_option("--args", args_csv, "comma-separated rationals to evaluate at");
  bell->add_option("--format", bell_format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  auto* derive = app.add_subcommand("derive", "nth derivative of a supported function");
  std::string fn_name, at_text, alpha_text, derive_format = "text";
  unsigned order = 0, numeric_bits = 256;
  bool numeric_set = false;
  derive->add_option("--function", fn_name, "function family name")->required();
  derive->add_option("--order", order, "derivative order")->required();
  derive->add_option("--at", at_text, "rational evaluation point P/Q");
  derive->add_option("--alpha", alpha_text, "exponent for pow_* families");
  derive->add_option("--numeric", numeric_bits,
                     "also print a float rendering at this precision (bits)");
  derive->add_option("--format", derive_format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  auto* verify = app.add_subcommand("verify", "run the cross-check suites");
  std::string suite_text = "all", verify_format = "text";
  unsigned max_order = 15;
  std::optional<std::uint64_t> seed_flag;
  verify->add_option("--suite", suite_text,
                     "all|coeffs|bell|trig|exp|log|power|stirling");
  verify->add_option("--max-order", max_order, "largest derivative order / row");
  verify->add_option("--seed", seed_flag, "seed for randomized property cases");
  verify->add_option("--format", verify_format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  numeric_set = derive->count("--numeric") > 0;

  try {
    if (coeffs->parsed()) return run_coeffs(max_m, coeffs_format, compare);
    if (bell->parsed()) return run_bell(bell_n, bell_k, special, args_csv, bell_format);
    if (derive->parsed())
      return run_derive(fn_name, order, at_text, alpha_text, numeric_bits,
                        numeric_set, derive_format);
    if (verify->parsed())
      return run_verify(suite_text, max_order, seed_flag, verify_format);
  } catch (const std::domain_error& e) {
    std::cerr << "derivkit: " << e.what() << "\n";
    return kExitDomain;
  } catch (const std::invalid_argument& e) {
    std::cerr << "derivkit: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
