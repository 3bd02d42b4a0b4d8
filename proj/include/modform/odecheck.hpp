#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>

#include "modform/forms.hpp"
#include "modform/puiseux.hpp"

namespace modform::odecheck {

// Every identity here is stated for the logarithmic derivation D = q*d/dq,
// which equals (1/2pi*i) d/dz on q-expansions. In that normalization:
//   Riccati family:    2k*Du + u^2 = E4,                 k = 1..6
//   linear family:     D^2 y = E4*y / (4k^2)
//   Schwarzian:        S_D(f) = 2*D(D^2f/Df) - (D^2f/Df)^2, and the classical
//                      {f,z} = 2(f''/f')' - (f''/f')^2 equals -4pi^2 * S_D(f).
// The constants below (2k, 1/(4k^2), -1/n^2, 960, 5/36, 5/72) are the
// converted forms of the z-coordinate equations, each confirmed against an
// independent expansion oracle in the test suite before being frozen.

/// Outcome of one coefficient-by-coefficient identity check.
struct VerificationReport {
  std::string identity;
  Rational verified_order;  // highest exponent actually compared
  bool passed = false;
  std::optional<std::pair<Rational, Rational>> first_failure;  // exponent, residual coefficient
};

/// Index k of the family 2k*Du + u^2 = E4; valid range 1..6.
struct RiccatiProblem {
  explicit RiccatiProblem(int k_) : k(k_) {
    if (k < 1 || k > 6) throw std::invalid_argument("RiccatiProblem: k must be 1..6");
  }
  int k;
};

/// Report that a residual series vanishes identically on its known range.
VerificationReport report_zero_series(std::string identity, const PuiseuxSeries& residual);

struct EisensteinTriple {
  PuiseuxSeries e2, e4, e6;
};
EisensteinTriple eisenstein_triple(long order);

/// D(E2) = (E2^2 - E4)/12, D(E4) = (E2*E4 - E6)/3, D(E6) = (E2*E6 - E4^2)/2.
std::array<VerificationReport, 3> ramanujan_residuals(long order);
std::array<VerificationReport, 3> ramanujan_residuals(const EisensteinTriple& g);

/// 2k*Du + u^2 - E4.
VerificationReport riccati_residual(const PuiseuxSeries& u, RiccatiProblem k, long order);
VerificationReport riccati_residual(const PuiseuxSeries& u, RiccatiProblem k,
                                    const PuiseuxSeries& e4);

/// D^2 y - E4*y/(4k^2).
VerificationReport linear_residual(const PuiseuxSeries& y, RiccatiProblem k, long order);
VerificationReport linear_residual(const PuiseuxSeries& y, RiccatiProblem k,
                                   const PuiseuxSeries& e4);

/// S_D(f) = 2*D(D^2f/Df) - (D^2f/Df)^2. Invariant under post-composition
/// with linear fractional maps; requires Df != 0.
PuiseuxSeries schwarzian_d(const PuiseuxSeries& f);

/// S_D(hauptmodul(n)) + E4/n^2, checked to exponent `order` in ramification n.
VerificationReport schwarzian_residual(int level, long order);
VerificationReport schwarzian_residual(int level, const PuiseuxSeries& f,
                                       const PuiseuxSeries& e4);

/// u = 2k * Dy / y: maps solutions of the linear equation to solutions of the
/// Riccati equation.
PuiseuxSeries riccati_from_linear(const PuiseuxSeries& y, RiccatiProblem k);

/// 5(DE4)^2 - 4 E4 D^2E4 + 960*Delta (the weight-12 cusp form identity).
VerificationReport k1_master_identity(long order);
VerificationReport k1_master_identity(const PuiseuxSeries& e4, const PuiseuxSeries& delta);

/// 1 + 4*D(E4/DE4) + 960*Delta/(DE4)^2 (the closed form of f' for the
/// equivariant solution at k = 1).
VerificationReport fprime_identity(long order);
VerificationReport fprime_identity(const PuiseuxSeries& e4, const PuiseuxSeries& delta);
PuiseuxSeries fprime_residual_series(const PuiseuxSeries& e4, const PuiseuxSeries& delta);

/// DE4 = (E2 E4 - E6)/3, D^2E4 = (5/36)(E2^2 E4 - 2 E2 E6 + E4^2),
/// D^3E4 = (5/72)(E2^3 E4 + 3 E2 E4^2 - 3 E2^2 E6 - E4 E6).
VerificationReport derivative_closures(long order);
VerificationReport derivative_closures(const EisensteinTriple& g);

/// Known closed-form solutions, expanded to exponent `order`:
/// k = 6: y = Delta^(-1/12) = eta^(-2) (ramification 12), u = -E2;
/// k = 1: y = DE4 * Delta^(-1/2) (ramification 2), u = 2 D^2E4/DE4 - E2.
PuiseuxSeries linear_solution_k6(long order);
PuiseuxSeries linear_solution_k1(long order);
PuiseuxSeries riccati_solution_k6(long order);
PuiseuxSeries riccati_solution_k1(long order);

}  // namespace modform::odecheck
