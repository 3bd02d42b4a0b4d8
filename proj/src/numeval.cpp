#include "modform/numeval.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <random>
#include <stdexcept>
#include <tuple>

namespace modform::numeval {

namespace {

using cplx = std::complex<double>;
constexpr double kPi = std::numbers::pi;
constexpr cplx kTwoPiI{0.0, 2.0 * kPi};

// Double-precision image of a series, for the evaluation hot paths.
struct RealizedSeries {
  long ram = 1;
  long val = 0;
  std::vector<double> coeff;  // index val .. val + size - 1
};

RealizedSeries realize(const PuiseuxSeries& s) {
  RealizedSeries r;
  r.ram = s.ramification();
  if (s.is_zero()) return r;
  r.val = s.valuation_index();
  r.coeff.resize(static_cast<std::size_t>(s.truncation_index() - r.val + 1));
  for (long j = r.val; j <= s.truncation_index(); ++j)
    r.coeff[static_cast<std::size_t>(j - r.val)] = s.coeff_at(j).to_double();
  return r;
}

void require_floor(HalfPlanePoint z, double im_floor) {
  if (!(z.im >= im_floor))
    throw std::domain_error("evaluation point too low; tail bound unreliable");
}

ComplexEval eval_realized(const RealizedSeries& s, HalfPlanePoint z) {
  if (s.coeff.empty()) return {cplx(0.0, 0.0), 0.0};
  cplx zc = to_complex(z);
  cplx w = std::exp(kTwoPiI * zc / static_cast<double>(s.ram));
  cplx acc(0.0, 0.0);
  for (std::size_t i = s.coeff.size(); i-- > 0;) acc = acc * w + s.coeff[i];
  acc *= std::exp(kTwoPiI * zc * (static_cast<double>(s.val) / static_cast<double>(s.ram)));
  double rho = std::abs(w);
  std::size_t last = s.coeff.size();
  while (last > 0 && s.coeff[last - 1] == 0.0) --last;
  double tail = 0.0;
  if (last > 0) {
    long j = s.val + static_cast<long>(last) - 1;
    double term = std::abs(s.coeff[last - 1]) *
                  std::exp(-2.0 * kPi * z.im * static_cast<double>(j) / static_cast<double>(s.ram));
    tail = term * rho / (1.0 - rho);
  }
  return {acc, tail};
}

// Cache of canonical expansions keyed by (tag, level, order).
class SeriesCache {
 public:
  const PuiseuxSeries& get(const forms::NamedForm& form, long order) {
    std::lock_guard<std::mutex> lock(mu_);
    auto key = std::make_tuple(static_cast<int>(form.tag()), form.level(), order);
    auto it = cache_.find(key);
    if (it == cache_.end()) it = cache_.emplace(key, forms::expand(form, order)).first;
    return it->second;
  }

 private:
  std::mutex mu_;
  std::map<std::tuple<int, int, long>, PuiseuxSeries> cache_;
};

SeriesCache& series_cache() {
  static SeriesCache cache;
  return cache;
}

RealizedSeries realized_named(const forms::NamedForm& form, long order) {
  return realize(series_cache().get(form, order));
}

// E4 and DE4 realized once per (order).
std::pair<RealizedSeries, RealizedSeries> e4_pair(long order) {
  const PuiseuxSeries& e4 = series_cache().get(forms::NamedForm::e4(), order);
  return {realize(e4), realize(derive(e4))};
}

cplx equivariant_value(const RealizedSeries& e4, const RealizedSeries& de4, HalfPlanePoint z) {
  require_floor(z, kDefaultImFloor);
  cplx a = eval_realized(e4, z).value;
  cplx b = eval_realized(de4, z).value;
  if (std::abs(b) < 1e-12) throw std::domain_error("zero of E4' too close");
  return to_complex(z) + 4.0 * a / (kTwoPiI * b);
}

HalfPlanePoint neg_inv(HalfPlanePoint z) {
  cplx w = -1.0 / to_complex(z);
  return {w.real(), w.imag()};
}

struct OdeSystem {
  RealizedSeries e4;
  cplx alpha;  // -pi^2 / k^2
  cplx z0, dz;

  cplx coeff_at(double t) const {
    HalfPlanePoint z{(z0 + t * dz).real(), (z0 + t * dz).imag()};
    require_floor(z, kDefaultImFloor);
    return alpha * eval_realized(e4, z).value;
  }
};

struct State {
  cplx y, v;
};

// One RK4 step of y' = dz*v, v' = dz*a(z)*y with the three stage coefficients
// precomputed (a at t, t+h/2, t+h).
State rk4_step(const State& s, double h, cplx dz, cplx a0, cplx am, cplx a1) {
  auto f = [dz](const State& st, cplx a) { return State{dz * st.v, dz * a * st.y}; };
  State k1 = f(s, a0);
  State k2 = f({s.y + 0.5 * h * k1.y, s.v + 0.5 * h * k1.v}, am);
  State k3 = f({s.y + 0.5 * h * k2.y, s.v + 0.5 * h * k2.v}, am);
  State k4 = f({s.y + h * k3.y, s.v + h * k3.v}, a1);
  return {s.y + h / 6.0 * (k1.y + 2.0 * k2.y + 2.0 * k3.y + k4.y),
          s.v + h / 6.0 * (k1.v + 2.0 * k2.v + 2.0 * k3.v + k4.v)};
}

OdeSystem make_system(odecheck::RiccatiProblem k, const OdePath& path, long order) {
  if (path.steps < 100) throw std::invalid_argument("integrate_ode: need at least 100 steps");
  if (!(path.start.im > 0.0) || !(path.end.im > 0.0))
    throw std::domain_error("integrate_ode: path leaving upper half-plane");
  OdeSystem sys;
  sys.e4 = realized_named(forms::NamedForm::e4(), order);
  double kk = static_cast<double>(k.k);
  sys.alpha = cplx(-kPi * kPi / (kk * kk), 0.0);
  sys.z0 = to_complex(path.start);
  sys.dz = to_complex(path.end) - sys.z0;
  return sys;
}

}  // namespace

ComplexEval eval_series(const PuiseuxSeries& s, HalfPlanePoint z, double im_floor) {
  require_floor(z, im_floor);
  return eval_realized(realize(s), z);
}

ComplexEval eval_named(const forms::NamedForm& form, HalfPlanePoint z, long order) {
  require_floor(z, kDefaultImFloor);
  return eval_realized(realized_named(form, order), z);
}

ComplexEval eval_equivariant_f(HalfPlanePoint z, long order) {
  require_floor(z, kDefaultImFloor);
  auto [e4, de4] = e4_pair(order);
  ComplexEval a = eval_realized(e4, z);
  ComplexEval b = eval_realized(de4, z);
  if (std::abs(b.value) < 1e-12) throw std::domain_error("zero of E4' too close");
  double babs = std::abs(b.value);
  double tail =
      (4.0 / (2.0 * kPi)) * (a.tail_estimate / babs +
                             std::abs(a.value) * b.tail_estimate / (babs * babs));
  return {to_complex(z) + 4.0 * a.value / (kTwoPiI * b.value), tail};
}

double check_weight_law(const forms::NamedForm& form, HalfPlanePoint z, long order) {
  int weight;
  switch (form.tag()) {
    case forms::FormTag::E4: weight = 4; break;
    case forms::FormTag::Delta: weight = 12; break;
    default:
      throw std::invalid_argument("check_weight_law: only E4 and delta carry a weight law here");
  }
  RealizedSeries g = realized_named(form, order);
  cplx zc = to_complex(z);
  cplx lhs = eval_realized(g, neg_inv(z)).value;
  cplx rhs = std::pow(zc, weight) * eval_realized(g, z).value;
  return std::abs(lhs - rhs) / std::abs(rhs);
}

OdeEndpoint integrate_ode(odecheck::RiccatiProblem k, const OdePath& path, cplx y0, cplx dy0,
                          long order) {
  OdeSystem sys = make_system(k, path, order);
  double h = 1.0 / static_cast<double>(path.steps);
  State s{y0, dy0};
  cplx a0 = sys.coeff_at(0.0);
  for (long i = 0; i < path.steps; ++i) {
    double t = static_cast<double>(i) * h;
    cplx am = sys.coeff_at(t + 0.5 * h);
    cplx a1 = sys.coeff_at(t + h);
    s = rk4_step(s, h, sys.dz, a0, am, a1);
    a0 = a1;
  }
  return {s.y, s.v};
}

double wronskian_drift(odecheck::RiccatiProblem k, const OdePath& path, const InitialData& a,
                       const InitialData& b, long order) {
  OdeSystem sys = make_system(k, path, order);
  State s1{a.y, a.dy}, s2{b.y, b.dy};
  cplx w0 = s1.y * s2.v - s2.y * s1.v;
  if (std::abs(w0) == 0.0) throw std::domain_error("wronskian_drift: degenerate basis");
  double h = 1.0 / static_cast<double>(path.steps);
  double drift = 0.0;
  cplx a0 = sys.coeff_at(0.0);
  for (long i = 0; i < path.steps; ++i) {
    double t = static_cast<double>(i) * h;
    cplx am = sys.coeff_at(t + 0.5 * h);
    cplx a1 = sys.coeff_at(t + h);
    s1 = rk4_step(s1, h, sys.dz, a0, am, a1);
    s2 = rk4_step(s2, h, sys.dz, a0, am, a1);
    a0 = a1;
    cplx w = s1.y * s2.v - s2.y * s1.v;
    drift = std::max(drift, std::abs(w - w0) / std::abs(w0));
  }
  return drift;
}

double numeric_schwarzian_crosscheck(int level, HalfPlanePoint z, double h, long order) {
  if (!(h > 0.0)) throw std::invalid_argument("numeric_schwarzian_crosscheck: h must be positive");
  RealizedSeries f = realized_named(forms::NamedForm::hauptmodul(level), order);
  for (double offset : {-2.0, -1.0, 0.0, 1.0, 2.0}) {
    HalfPlanePoint p{z.re + offset * h, z.im};
    if (!(p.im >= kDefaultImFloor))
      throw std::domain_error("stencil leaving evaluation domain");
  }
  auto at = [&](double offset) {
    return eval_realized(f, {z.re + offset * h, z.im}).value;
  };
  cplx f0 = at(0.0), fp1 = at(1.0), fm1 = at(-1.0), fp2 = at(2.0), fm2 = at(-2.0);
  cplx d1 = (fp1 - fm1) / (2.0 * h);
  cplx d2 = (fp1 - 2.0 * f0 + fm1) / (h * h);
  cplx d3 = (fp2 - 2.0 * fp1 + 2.0 * fm1 - fm2) / (2.0 * h * h * h);
  cplx u = d2 / d1;
  cplx schwarzian = 2.0 * d3 / d1 - 3.0 * u * u;
  cplx ref = (4.0 * kPi * kPi / static_cast<double>(level * level)) *
             eval_named(forms::NamedForm::e4(), z, order).value;
  return std::abs(schwarzian - ref) / std::abs(ref);
}

bool has_closed_form(int k) { return k == 1 || k == 6; }

InitialData closed_form_state(int k, HalfPlanePoint z, long order) {
  if (!has_closed_form(k))
    throw std::invalid_argument("closed_form_state: only k = 1 and k = 6 have one");
  require_floor(z, kDefaultImFloor);
  static std::mutex mu;
  static std::map<std::pair<int, long>, std::pair<RealizedSeries, RealizedSeries>> cache;
  std::pair<RealizedSeries, RealizedSeries>* entry;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(k, order);
    auto it = cache.find(key);
    if (it == cache.end()) {
      PuiseuxSeries y = k == 6 ? odecheck::linear_solution_k6(order)
                               : odecheck::linear_solution_k1(order);
      it = cache.emplace(key, std::make_pair(realize(y), realize(derive(y)))).first;
    }
    entry = &it->second;
  }
  cplx y = eval_realized(entry->first, z).value;
  cplx dy = kTwoPiI * eval_realized(entry->second, z).value;  // d/dz = 2*pi*i*D
  return {y, dy};
}

std::vector<HalfPlanePoint> sample_box(std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto unit = [&rng]() {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;  // uniform in [0,1)
  };
  std::vector<HalfPlanePoint> pts;
  pts.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    double re = -0.5 + unit();
    double im = 0.9 + 0.2 * unit();
    pts.push_back({re, im});
  }
  return pts;
}

EquivarianceDefects equivariance_defects(HalfPlanePoint z, long order) {
  auto [e4, de4] = e4_pair(order);
  cplx fz = equivariant_value(e4, de4, z);
  cplx fz1 = equivariant_value(e4, de4, {z.re + 1.0, z.im});
  cplx fneg = equivariant_value(e4, de4, neg_inv(z));
  return {std::abs(fneg + 1.0 / fz), std::abs(fz1 - fz - 1.0)};
}

}  // namespace modform::numeval
