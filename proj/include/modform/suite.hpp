#pragma once

#include <cstdint>
#include <json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "modform/numeval.hpp"
#include "modform/odecheck.hpp"

namespace modform::cli {

inline constexpr double kEquivarianceInversionTol = 1e-8;
inline constexpr double kEquivarianceTranslationTol = 1e-10;
inline constexpr double kWeightLawTol = 1e-8;
inline constexpr double kSchwarzianFdTol = 1e-5;
inline constexpr double kIntegrateDefectTol = 1e-6;
inline constexpr long kDefaultOrder = 200;

struct NumericCheck {
  std::string name;
  double defect = 0.0;
  double tolerance = 0.0;
  bool passed = false;
};

struct SuiteResult {
  std::vector<odecheck::VerificationReport> reports;
  std::vector<NumericCheck> numeric_checks;
  bool all_passed() const;
};

/// Names accepted by run_verify besides "all".
const std::vector<std::string>& identity_names();

/// Runs the selected exact identities. `order` overrides every per-identity
/// default (200 for weight-graded checks, 40*n for schwarzian-n). Throws
/// std::invalid_argument for an unknown selector.
SuiteResult run_verify(const std::string& selector, std::optional<long> order,
                       long default_order = kDefaultOrder);

/// Seeded equivariance grid: max |f(-1/z) + 1/f(z)| and |f(z+1) - f(z) - 1|.
SuiteResult run_equivariance(std::size_t samples, std::uint64_t seed, long order);

/// Weight-law defects of E4 and Delta on the same seeded grid.
SuiteResult run_weight_laws(std::size_t samples, std::uint64_t seed, long order);

/// Finite-difference Schwarzian cross-check; level 0 means all of 2..5.
SuiteResult run_schwarzian_fd(int level, numeval::HalfPlanePoint z, double h, long order);

nlohmann::json to_json(const odecheck::VerificationReport& r);
nlohmann::json to_json(const NumericCheck& c);
nlohmann::json to_json(const SuiteResult& s);

}  // namespace modform::cli
