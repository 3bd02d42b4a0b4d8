#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "modform/forms.hpp"
#include "modform/odecheck.hpp"
#include "modform/puiseux.hpp"

namespace modform::numeval {

/// Point of the upper half-plane (im > 0).
struct HalfPlanePoint {
  double re = 0.0;
  double im = 1.0;
};

inline std::complex<double> to_complex(HalfPlanePoint z) { return {z.re, z.im}; }

/// Value of a truncated series at a point, together with a geometric-tail
/// heuristic for the dropped terms. Not a proven bound; it is reliable on the
/// evaluation domain im(z) >= 0.3 enforced below.
struct ComplexEval {
  std::complex<double> value;
  double tail_estimate = 0.0;
};

/// Straight integration segment; must stay inside the upper half-plane.
struct OdePath {
  HalfPlanePoint start;
  HalfPlanePoint end;
  long steps = 10000;
};

inline constexpr double kDefaultImFloor = 0.3;

/// Evaluates s at z by substituting w = e^(2*pi*i*z/m) (principal branch,
/// single-valued in z) and summing by Horner's rule.
ComplexEval eval_series(const PuiseuxSeries& s, HalfPlanePoint z,
                        double im_floor = kDefaultImFloor);

/// eval_series over the canonical expansion; series are cached per
/// (form, order) and safe for concurrent readers.
ComplexEval eval_named(const forms::NamedForm& form, HalfPlanePoint z, long order);

/// f(z) = z + (4/(2*pi*i)) * E4(z)/DE4(z): the equivariant solution attached
/// to k = 1. Requires DE4(z) away from zero.
ComplexEval eval_equivariant_f(HalfPlanePoint z, long order);

/// Relative defect of g(-1/z) = z^w g(z) for g = E4 (w = 4) or Delta (w = 12).
double check_weight_law(const forms::NamedForm& form, HalfPlanePoint z, long order);

struct OdeEndpoint {
  std::complex<double> y;
  std::complex<double> dy;  // derivative with respect to z
};

/// Classical fixed-step RK4 for y'' + (pi^2/k^2) E4(z) y = 0 along the
/// straight segment of `path`, with E4 evaluated from its order-`order`
/// expansion at every stage point. Requires steps >= 100.
OdeEndpoint integrate_ode(odecheck::RiccatiProblem k, const OdePath& path,
                          std::complex<double> y0, std::complex<double> dy0, long order);

struct InitialData {
  std::complex<double> y;
  std::complex<double> dy;
};

/// Integrates two solutions and returns the maximal relative drift of the
/// Wronskian y1*y2' - y2*y1' (a constant of the motion for this equation).
double wronskian_drift(odecheck::RiccatiProblem k, const OdePath& path, const InitialData& a,
                       const InitialData& b, long order);

/// Schwarzian derivative 2(f''/f')' - (f''/f')^2 of the level-n Hauptmodul by
/// five-point central differences in z, compared against (4*pi^2/n^2) E4(z);
/// returns the relative defect.
double numeric_schwarzian_crosscheck(int level, HalfPlanePoint z, double h, long order);

/// Closed-form reference state (y, dy/dz) at z for k = 6 (y = eta^(-2)) and
/// k = 1 (y = DE4 * Delta^(-1/2)).
bool has_closed_form(int k);
InitialData closed_form_state(int k, HalfPlanePoint z, long order);

/// Deterministic sample box re in [-0.5, 0.5], im in [0.9, 1.1]; points near
/// the unit circle so that -1/z keeps an acceptable height.
std::vector<HalfPlanePoint> sample_box(std::size_t count, std::uint64_t seed);

struct EquivarianceDefects {
  double inversion;    // |f(-1/z) + 1/f(z)|
  double translation;  // |f(z+1) - f(z) - 1|
};
EquivarianceDefects equivariance_defects(HalfPlanePoint z, long order);

}  // namespace modform::numeval
