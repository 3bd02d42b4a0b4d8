#include <CLI11.hpp>
#include <complex>
#include <cstdlib>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <string>

#include "modform/forms.hpp"
#include "modform/numeval.hpp"
#include "modform/series_json.hpp"
#include "modform/suite.hpp"

namespace {

using modform::Rational;
using modform::numeval::HalfPlanePoint;

constexpr int kExitPass = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

long default_order_from_env() {
  const char* env = std::getenv("MODFORM_DEFAULT_ORDER");
  if (env == nullptr) return modform::cli::kDefaultOrder;
  char* end = nullptr;
  long v = std::strtol(env, &end, 10);
  if (end == env || *end != '\0' || v < 0)
    throw std::invalid_argument("MODFORM_DEFAULT_ORDER must be a nonnegative integer");
  return v;
}

// "a+bi" / "a-bi" / "a" / "bi", e.g. "0.1+1.5i".
std::complex<double> parse_complex(const std::string& text) {
  const char* p = text.c_str();
  char* end = nullptr;
  double first = std::strtod(p, &end);
  if (end == p) throw std::invalid_argument("cannot parse complex number '" + text + "'");
  if (*end == '\0') return {first, 0.0};
  if (*end == 'i' && *(end + 1) == '\0') return {0.0, first};
  const char* q = end;
  double second = std::strtod(q, &end);
  if (end == q || *end != 'i' || *(end + 1) != '\0')
    throw std::invalid_argument("cannot parse complex number '" + text + "'");
  return {first, second};
}

HalfPlanePoint parse_point(const std::string& text) {
  std::complex<double> z = parse_complex(text);
  return {z.real(), z.imag()};
}

void print_json(const nlohmann::json& j) { std::cout << j.dump(2) << "\n"; }

int cmd_coeffs(const std::string& form_name, long order, const std::string& format) {
  auto form = modform::forms::NamedForm::parse(form_name);
  if (!form) {
    std::cerr << "unknown form '" << form_name
              << "' (expected E2, E4, E6, eta, delta or hauptmodul2..5)\n";
    return kExitUsage;
  }
  modform::PuiseuxSeries s = modform::forms::expand(*form, order);
  if (format == "csv") {
    std::cout << "exp,coeff\n";
    if (!s.is_zero()) {
      for (long j = s.valuation_index(); j <= s.truncation_index(); ++j) {
        const Rational& c = s.coeff_at(j);
        if (c.is_zero()) continue;
        std::cout << Rational(j, s.ramification()).str() << "," << c.str() << "\n";
      }
    }
  } else {
    print_json(modform::series_to_json(s));
  }
  return kExitPass;
}

int cmd_verify(const std::string& selector, std::optional<long> order, long default_order) {
  modform::cli::SuiteResult result = modform::cli::run_verify(selector, order, default_order);
  print_json(modform::cli::to_json(result));
  return result.all_passed() ? kExitPass : kExitCheckFailed;
}

int cmd_equivariance(std::size_t samples, std::uint64_t seed, long order) {
  modform::cli::SuiteResult result = modform::cli::run_equivariance(samples, seed, order);
  print_json(modform::cli::to_json(result));
  return result.all_passed() ? kExitPass : kExitCheckFailed;
}

int cmd_schwarzian(int level, const std::string& z_text, double h, long order) {
  modform::cli::SuiteResult result =
      modform::cli::run_schwarzian_fd(level, parse_point(z_text), h, order);
  print_json(modform::cli::to_json(result));
  return result.all_passed() ? kExitPass : kExitCheckFailed;
}

int cmd_integrate(int k, const std::string& from_text, const std::string& to_text, long steps,
                  long order) {
  namespace nv = modform::numeval;
  nv::OdePath path{parse_point(from_text), parse_point(to_text), steps};
  modform::odecheck::RiccatiProblem problem(k);
  nlohmann::json out = {{"k", k},
                        {"from", {path.start.re, path.start.im}},
                        {"to", {path.end.re, path.end.im}},
                        {"steps", steps},
                        {"order", order}};
  bool passed = true;
  if (nv::has_closed_form(k)) {
    nv::InitialData start = nv::closed_form_state(k, path.start, order);
    nv::OdeEndpoint end = nv::integrate_ode(problem, path, start.y, start.dy, order);
    nv::InitialData ref = nv::closed_form_state(k, path.end, order);
    double scale = std::max(std::abs(ref.y), std::abs(ref.dy));
    double defect = std::max(std::abs(end.y - ref.y), std::abs(end.dy - ref.dy)) / scale;
    out["y"] = {end.y.real(), end.y.imag()};
    out["dy"] = {end.dy.real(), end.dy.imag()};
    out["reference_defect"] = defect;
    out["tolerance"] = modform::cli::kIntegrateDefectTol;
    passed = defect < modform::cli::kIntegrateDefectTol;
  } else {
    nv::OdeEndpoint end = nv::integrate_ode(problem, path, {1.0, 0.0}, {0.0, 0.0}, order);
    out["y"] = {end.y.real(), end.y.imag()};
    out["dy"] = {end.dy.real(), end.dy.imag()};
  }
  out["passed"] = passed;
  print_json(out);
  return passed ? kExitPass : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact q-expansions, differential-identity verification and numeric checks for "
               "Eisenstein-series ODEs"};
  app.require_subcommand(1);

  std::string form_name, format = "json", selector = "all";
  std::string z_text = "0.1+1.3i", from_text = "0.1+1.5i", to_text = "0.3+0.9i";
  std::optional<long> order_opt;
  long steps = 10000;
  long numeric_order = 80;
  int level = 0, k = 6;
  std::size_t samples = 20;
  std::uint64_t seed = 7;

  auto* coeffs = app.add_subcommand("coeffs", "print exact expansion coefficients of a form");
  coeffs->add_option("form", form_name, "E2 | E4 | E6 | eta | delta | hauptmodul2..5")
      ->required();
  coeffs->add_option("--order", order_opt, "highest exponent to expand to (default 200)")
      ->check(CLI::NonNegativeNumber);
  coeffs->add_option("--format", format, "json | csv")
      ->check(CLI::IsMember({"json", "csv"}));

  auto* verify = app.add_subcommand("verify", "verify differential identities exactly");
  verify->add_option("selector", selector, "all or one identity name (see --list)");
  verify->add_option("--order", order_opt, "verification order override")
      ->check(CLI::PositiveNumber);
  bool list_names = false;
  verify->add_flag("--list", list_names, "list identity names and exit");

  auto* equi = app.add_subcommand("equivariance", "seeded grid check of the equivariant f");
  equi->add_option("--samples", samples, "number of grid points (default 20)")
      ->check(CLI::PositiveNumber);
  equi->add_option("--seed", seed, "RNG seed (default 7)");
  equi->add_option("--order", numeric_order, "evaluation order (default 80)")
      ->check(CLI::PositiveNumber);

  auto* schw = app.add_subcommand("schwarzian",
                                  "finite-difference Schwarzian cross-check of a Hauptmodul");
  schw->add_option("--n", level, "level 2..5; 0 runs all (default)")
      ->check(CLI::Range(0, 5));
  schw->add_option("--z", z_text, "base point a+bi (default 0.1+1.3i)");
  double h = 2.5e-4;
  schw->add_option("--step", h, "finite-difference step (default 2.5e-4)")
      ->check(CLI::PositiveNumber);
  schw->add_option("--order", numeric_order, "evaluation order (default 80)")
      ->check(CLI::PositiveNumber);

  auto* integ = app.add_subcommand("integrate", "RK4 integration of y'' + (pi^2/k^2) E4 y = 0");
  integ->add_option("--k", k, "family index 1..6")->required()->check(CLI::Range(1, 6));
  integ->add_option("--from", from_text, "start point a+bi (default 0.1+1.5i)");
  integ->add_option("--to", to_text, "end point a+bi (default 0.3+0.9i)");
  integ->add_option("--steps", steps, "RK4 steps, at least 100 (default 10000)");
  integ->add_option("--order", numeric_order, "E4 evaluation order (default 80)")
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitPass : kExitUsage;
  }

  try {
    long default_order = default_order_from_env();
    if (coeffs->parsed()) return cmd_coeffs(form_name, order_opt.value_or(default_order), format);
    if (verify->parsed()) {
      if (list_names) {
        for (const auto& n : modform::cli::identity_names()) std::cout << n << "\n";
        return kExitPass;
      }
      return cmd_verify(selector, order_opt, default_order);
    }
    if (equi->parsed()) return cmd_equivariance(samples, seed, numeric_order);
    if (schw->parsed()) return cmd_schwarzian(level, z_text, h, numeric_order);
    if (integ->parsed()) return cmd_integrate(k, from_text, to_text, steps, numeric_order);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCheckFailed;
  }
  return kExitUsage;
}
