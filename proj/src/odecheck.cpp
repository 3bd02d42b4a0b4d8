#include "modform/odecheck.hpp"

#include <stdexcept>

namespace modform::odecheck {

namespace {

PuiseuxSeries zero_like(const PuiseuxSeries& s) {
  return PuiseuxSeries::zero(s.ramification(), s.truncation_index());
}

}  // namespace

VerificationReport report_zero_series(std::string identity, const PuiseuxSeries& residual) {
  VerificationReport r;
  r.identity = std::move(identity);
  r.verified_order = residual.truncation_order();
  auto bad = first_disagreement(residual, zero_like(residual));
  r.passed = !bad.has_value();
  r.first_failure = bad;
  return r;
}

EisensteinTriple eisenstein_triple(long order) {
  return {forms::eisenstein(2, order), forms::eisenstein(4, order), forms::eisenstein(6, order)};
}

std::array<VerificationReport, 3> ramanujan_residuals(long order) {
  if (order < 1) throw std::invalid_argument("ramanujan_residuals: order must be >= 1");
  return ramanujan_residuals(eisenstein_triple(order));
}

std::array<VerificationReport, 3> ramanujan_residuals(const EisensteinTriple& g) {
  PuiseuxSeries r2 = derive(g.e2) - Rational(1, 12) * (g.e2 * g.e2 - g.e4);
  PuiseuxSeries r4 = derive(g.e4) - Rational(1, 3) * (g.e2 * g.e4 - g.e6);
  PuiseuxSeries r6 = derive(g.e6) - Rational(1, 2) * (g.e2 * g.e6 - g.e4 * g.e4);
  return {report_zero_series("ramanujan-E2", r2), report_zero_series("ramanujan-E4", r4),
          report_zero_series("ramanujan-E6", r6)};
}

VerificationReport riccati_residual(const PuiseuxSeries& u, RiccatiProblem k, long order) {
  return riccati_residual(u, k, forms::eisenstein(4, order));
}

VerificationReport riccati_residual(const PuiseuxSeries& u, RiccatiProblem k,
                                    const PuiseuxSeries& e4) {
  PuiseuxSeries res = Rational(2 * k.k) * derive(u) + u * u - e4;
  return report_zero_series("riccati-k" + std::to_string(k.k), res);
}

VerificationReport linear_residual(const PuiseuxSeries& y, RiccatiProblem k, long order) {
  return linear_residual(y, k, forms::eisenstein(4, order));
}

VerificationReport linear_residual(const PuiseuxSeries& y, RiccatiProblem k,
                                   const PuiseuxSeries& e4) {
  PuiseuxSeries res = derive(derive(y)) - Rational(1, 4 * k.k * k.k) * (e4 * y);
  return report_zero_series("linear-k" + std::to_string(k.k), res);
}

PuiseuxSeries schwarzian_d(const PuiseuxSeries& f) {
  PuiseuxSeries df = derive(f);
  if (df.is_zero()) throw std::domain_error("constant input");
  PuiseuxSeries g = derive(df) / df;
  return Rational(2) * derive(g) - g * g;
}

VerificationReport schwarzian_residual(int level, long order) {
  if (level < 2 || level > 5)
    throw std::invalid_argument("schwarzian_residual: level must be 2..5");
  // One extra order of input slack absorbs the index lost to the division.
  PuiseuxSeries f = forms::hauptmodul(level, order + 1);
  PuiseuxSeries e4 = forms::eisenstein(4, order + 1);
  PuiseuxSeries res = schwarzian_d(f) + Rational(1, level * level) * e4;
  return report_zero_series("schwarzian-n" + std::to_string(level),
                            truncated(res, Rational(order)));
}

VerificationReport schwarzian_residual(int level, const PuiseuxSeries& f,
                                       const PuiseuxSeries& e4) {
  if (level < 2 || level > 5)
    throw std::invalid_argument("schwarzian_residual: level must be 2..5");
  PuiseuxSeries res = schwarzian_d(f) + Rational(1, level * level) * e4;
  return report_zero_series("schwarzian-n" + std::to_string(level), res);
}

PuiseuxSeries riccati_from_linear(const PuiseuxSeries& y, RiccatiProblem k) {
  if (y.is_zero()) throw std::domain_error("riccati_from_linear: zero solution");
  return Rational(2 * k.k) * (derive(y) / y);
}

VerificationReport k1_master_identity(long order) {
  if (order < 2) throw std::invalid_argument("k1_master_identity: order must be >= 2");
  return k1_master_identity(forms::eisenstein(4, order), forms::delta(order));
}

VerificationReport k1_master_identity(const PuiseuxSeries& e4, const PuiseuxSeries& delta) {
  PuiseuxSeries de4 = derive(e4);
  PuiseuxSeries d2e4 = derive(de4);
  PuiseuxSeries res =
      Rational(5) * (de4 * de4) - Rational(4) * (e4 * d2e4) + Rational(960) * delta;
  return report_zero_series("k1-master", res);
}

VerificationReport fprime_identity(long order) {
  if (order < 2) throw std::invalid_argument("fprime_identity: order must be >= 2");
  PuiseuxSeries e4 = forms::eisenstein(4, order + 2);
  PuiseuxSeries delta = forms::delta(order + 2);
  PuiseuxSeries res = fprime_residual_series(e4, delta);
  return report_zero_series("fprime", truncated(res, Rational(order)));
}

PuiseuxSeries fprime_residual_series(const PuiseuxSeries& e4, const PuiseuxSeries& delta) {
  PuiseuxSeries de4 = derive(e4);
  return PuiseuxSeries::constant(Rational(1), e4.truncation_index()) +
         Rational(4) * derive(e4 / de4) + Rational(960) * (delta / (de4 * de4));
}

VerificationReport fprime_identity(const PuiseuxSeries& e4, const PuiseuxSeries& delta) {
  return report_zero_series("fprime", fprime_residual_series(e4, delta));
}

VerificationReport derivative_closures(long order) {
  if (order < 3) throw std::invalid_argument("derivative_closures: order must be >= 3");
  return derivative_closures(eisenstein_triple(order));
}

VerificationReport derivative_closures(const EisensteinTriple& g) {
  PuiseuxSeries de4 = derive(g.e4);
  PuiseuxSeries d2e4 = derive(de4);
  PuiseuxSeries d3e4 = derive(d2e4);
  PuiseuxSeries e2sq = g.e2 * g.e2;
  PuiseuxSeries r1 = de4 - Rational(1, 3) * (g.e2 * g.e4 - g.e6);
  PuiseuxSeries r2 =
      d2e4 - Rational(5, 36) * (e2sq * g.e4 - Rational(2) * (g.e2 * g.e6) + g.e4 * g.e4);
  PuiseuxSeries r3 =
      d3e4 - Rational(5, 72) * (e2sq * (g.e2 * g.e4) + Rational(3) * (g.e2 * (g.e4 * g.e4)) -
                                Rational(3) * (e2sq * g.e6) - g.e4 * g.e6);
  VerificationReport a = report_zero_series("derivative-closures", r1);
  VerificationReport b = report_zero_series("derivative-closures", r2);
  VerificationReport c = report_zero_series("derivative-closures", r3);
  VerificationReport out;
  out.identity = "derivative-closures";
  out.verified_order = a.verified_order;
  if (b.verified_order < out.verified_order) out.verified_order = b.verified_order;
  if (c.verified_order < out.verified_order) out.verified_order = c.verified_order;
  out.passed = a.passed && b.passed && c.passed;
  for (const auto* r : {&a, &b, &c}) {
    if (!r->first_failure) continue;
    if (!out.first_failure || r->first_failure->first < out.first_failure->first)
      out.first_failure = r->first_failure;
  }
  return out;
}

PuiseuxSeries linear_solution_k6(long order) {
  // Delta^(-1/12) = eta^(-2) = q^(-1/12) prod (1-q^n)^(-2), ramification 12.
  PuiseuxSeries y = forms::eta_quotient({{Rational(1), -2}}, order + 1);
  y = rebase(reduce(y), 12);
  return truncated_index(y, order * 12);
}

PuiseuxSeries linear_solution_k1(long order) {
  PuiseuxSeries de4 = derive(forms::eisenstein(4, order + 2));
  PuiseuxSeries half_inv = invert(sqrt(forms::delta(order + 2)));
  return truncated(de4 * half_inv, Rational(order));
}

PuiseuxSeries riccati_solution_k6(long order) { return -forms::eisenstein(2, order); }

PuiseuxSeries riccati_solution_k1(long order) {
  PuiseuxSeries e4 = forms::eisenstein(4, order + 1);
  PuiseuxSeries de4 = derive(e4);
  PuiseuxSeries u = Rational(2) * (derive(de4) / de4) - forms::eisenstein(2, order + 1);
  return truncated(u, Rational(order));
}

}  // namespace modform::odecheck
