#include "modform/suite.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

#include "modform/series_json.hpp"

namespace modform {

nlohmann::json series_to_json(const PuiseuxSeries& s) {
  nlohmann::json terms = nlohmann::json::array();
  if (!s.is_zero()) {
    for (long j = s.valuation_index(); j <= s.truncation_index(); ++j) {
      const Rational& c = s.coeff_at(j);
      if (c.is_zero()) continue;
      terms.push_back({{"exp", Rational(j, s.ramification()).str()}, {"coeff", c.str()}});
    }
  }
  return {{"ramification", s.ramification()},
          {"terms", std::move(terms)},
          {"truncation", s.truncation_order().str()}};
}

PuiseuxSeries series_from_json(const nlohmann::json& j) {
  long ram = j.at("ramification").get<long>();
  if (ram < 1) throw std::invalid_argument("series_from_json: bad ramification");
  auto to_index = [ram](const Rational& e) {
    Rational scaled = e * Rational(ram);
    if (!scaled.is_integer())
      throw std::invalid_argument("series_from_json: exponent not representable");
    return scaled.to_long();
  };
  long trunc = to_index(Rational(j.at("truncation").get<std::string>()));
  std::map<long, Rational> entries;
  for (const auto& term : j.at("terms")) {
    long idx = to_index(Rational(term.at("exp").get<std::string>()));
    entries[idx] = Rational(term.at("coeff").get<std::string>());
  }
  if (entries.empty()) return PuiseuxSeries::zero(ram, trunc);
  long lo = entries.begin()->first;
  std::vector<Rational> coeffs(static_cast<std::size_t>(trunc - lo + 1));
  for (const auto& [idx, c] : entries) {
    if (idx > trunc) throw std::invalid_argument("series_from_json: term beyond truncation");
    coeffs[static_cast<std::size_t>(idx - lo)] = c;
  }
  return PuiseuxSeries(ram, lo, std::move(coeffs));
}

}  // namespace modform

namespace modform::cli {

bool SuiteResult::all_passed() const {
  return std::all_of(reports.begin(), reports.end(),
                     [](const auto& r) { return r.passed; }) &&
         std::all_of(numeric_checks.begin(), numeric_checks.end(),
                     [](const auto& c) { return c.passed; });
}

namespace {

struct IdentityEntry {
  std::string name;
  std::optional<long> fixed_default;  // set when the identity has its own default order
  std::function<void(long, SuiteResult&)> run;
};

const std::vector<IdentityEntry>& registry() {
  static const std::vector<IdentityEntry> entries = [] {
    std::vector<IdentityEntry> v;
    v.push_back({"ramanujan", std::nullopt, [](long n, SuiteResult& out) {
                   for (auto& r : odecheck::ramanujan_residuals(n))
                     out.reports.push_back(std::move(r));
                 }});
    v.push_back({"riccati-k6", std::nullopt, [](long n, SuiteResult& out) {
                   out.reports.push_back(odecheck::riccati_residual(
                       odecheck::riccati_solution_k6(n), odecheck::RiccatiProblem(6), n));
                 }});
    v.push_back({"linear-k6", std::nullopt, [](long n, SuiteResult& out) {
                   out.reports.push_back(odecheck::linear_residual(
                       odecheck::linear_solution_k6(n), odecheck::RiccatiProblem(6), n));
                 }});
    for (int level = 2; level <= 5; ++level)
      v.push_back({"schwarzian-n" + std::to_string(level), 40L * level,
                   [level](long n, SuiteResult& out) {
                     out.reports.push_back(odecheck::schwarzian_residual(level, n));
                   }});
    v.push_back({"linear-k1", std::nullopt, [](long n, SuiteResult& out) {
                   out.reports.push_back(odecheck::linear_residual(
                       odecheck::linear_solution_k1(n), odecheck::RiccatiProblem(1), n));
                 }});
    v.push_back({"riccati-k1", std::nullopt, [](long n, SuiteResult& out) {
                   out.reports.push_back(odecheck::riccati_residual(
                       odecheck::riccati_solution_k1(n), odecheck::RiccatiProblem(1), n));
                 }});
    v.push_back({"k1-master", std::nullopt, [](long n, SuiteResult& out) {
                   out.reports.push_back(odecheck::k1_master_identity(n));
                 }});
    v.push_back({"fprime", std::nullopt, [](long n, SuiteResult& out) {
                   out.reports.push_back(odecheck::fprime_identity(n));
                 }});
    v.push_back({"derivative-closures", std::nullopt, [](long n, SuiteResult& out) {
                   out.reports.push_back(odecheck::derivative_closures(n));
                 }});
    return v;
  }();
  return entries;
}

}  // namespace

const std::vector<std::string>& identity_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& e : registry()) v.push_back(e.name);
    return v;
  }();
  return names;
}

SuiteResult run_verify(const std::string& selector, std::optional<long> order,
                       long default_order) {
  SuiteResult result;
  bool matched = false;
  for (const auto& entry : registry()) {
    if (selector != "all" && selector != entry.name) continue;
    matched = true;
    long n = order.value_or(entry.fixed_default.value_or(default_order));
    entry.run(n, result);
  }
  if (!matched) throw std::invalid_argument("unknown identity selector '" + selector + "'");
  return result;
}

SuiteResult run_equivariance(std::size_t samples, std::uint64_t seed, long order) {
  if (samples < 1) throw std::invalid_argument("equivariance: need at least one sample");
  double inversion = 0.0, translation = 0.0;
  for (const auto& z : numeval::sample_box(samples, seed)) {
    auto d = numeval::equivariance_defects(z, order);
    inversion = std::max(inversion, d.inversion);
    translation = std::max(translation, d.translation);
  }
  SuiteResult result;
  result.numeric_checks.push_back({"equivariance-inversion", inversion,
                                   kEquivarianceInversionTol,
                                   inversion < kEquivarianceInversionTol});
  result.numeric_checks.push_back({"equivariance-translation", translation,
                                   kEquivarianceTranslationTol,
                                   translation < kEquivarianceTranslationTol});
  return result;
}

SuiteResult run_weight_laws(std::size_t samples, std::uint64_t seed, long order) {
  if (samples < 1) throw std::invalid_argument("weight laws: need at least one sample");
  double d4 = 0.0, d12 = 0.0;
  for (const auto& z : numeval::sample_box(samples, seed)) {
    d4 = std::max(d4, numeval::check_weight_law(forms::NamedForm::e4(), z, order));
    d12 = std::max(d12, numeval::check_weight_law(forms::NamedForm::delta(), z, order));
  }
  SuiteResult result;
  result.numeric_checks.push_back({"weight-law-E4", d4, kWeightLawTol, d4 < kWeightLawTol});
  result.numeric_checks.push_back({"weight-law-delta", d12, kWeightLawTol, d12 < kWeightLawTol});
  return result;
}

SuiteResult run_schwarzian_fd(int level, numeval::HalfPlanePoint z, double h, long order) {
  if (level != 0 && (level < 2 || level > 5))
    throw std::invalid_argument("schwarzian: level must be 0 (all) or 2..5");
  SuiteResult result;
  for (int n = 2; n <= 5; ++n) {
    if (level != 0 && level != n) continue;
    double defect = numeval::numeric_schwarzian_crosscheck(n, z, h, order);
    result.numeric_checks.push_back({"schwarzian-fd-n" + std::to_string(n), defect,
                                     kSchwarzianFdTol, defect < kSchwarzianFdTol});
  }
  return result;
}

nlohmann::json to_json(const odecheck::VerificationReport& r) {
  nlohmann::json j = {{"identity", r.identity},
                      {"verified_order", r.verified_order.str()},
                      {"passed", r.passed}};
  if (r.first_failure)
    j["first_failure"] = {{"exp", r.first_failure->first.str()},
                          {"coeff", r.first_failure->second.str()}};
  return j;
}

nlohmann::json to_json(const NumericCheck& c) {
  return {{"name", c.name}, {"defect", c.defect}, {"tolerance", c.tolerance},
          {"passed", c.passed}};
}

nlohmann::json to_json(const SuiteResult& s) {
  nlohmann::json reports = nlohmann::json::array();
  for (const auto& r : s.reports) reports.push_back(to_json(r));
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : s.numeric_checks) checks.push_back(to_json(c));
  return {{"reports", std::move(reports)},
          {"numeric_checks", std::move(checks)},
          {"passed", s.all_passed()}};
}

}  // namespace modform::cli
