#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "modform/odecheck.hpp"

using namespace modform;
using namespace modform::odecheck;

namespace {

// Adds delta * q^(index/ram) to a stored coefficient.
PuiseuxSeries perturbed(const PuiseuxSeries& s, long index, const Rational& delta) {
  return s + PuiseuxSeries::monomial(delta, index, s.ramification(), s.truncation_index());
}

PuiseuxSeries mobius(const PuiseuxSeries& f, long a, long b, long c, long d) {
  PuiseuxSeries num = Rational(a) * f + PuiseuxSeries::constant(Rational(b), f.truncation_index());
  PuiseuxSeries den = Rational(c) * f + PuiseuxSeries::constant(Rational(d), f.truncation_index());
  return num / den;
}

}  // namespace

TEST_CASE("ramanujan residuals vanish") {
  for (const auto& r : ramanujan_residuals(10)) {
    CHECK(r.passed);
    CHECK(r.verified_order >= Rational(10));
    CHECK(!r.first_failure.has_value());
  }
}

TEST_CASE("ramanujan q^1 coefficient balances by hand") {
  // D(E2) at q: -24; (E2^2 - E4)/12 at q: (-48 - 240)/12 = -24.
  EisensteinTriple g = eisenstein_triple(1);
  CHECK(derive(g.e2).coeff_at(1) == Rational(-24));
  CHECK((Rational(1, 12) * (g.e2 * g.e2 - g.e4)).coeff_at(1) == Rational(-24));
}

TEST_CASE("corrupting E4 is detected at the right exponent") {
  EisensteinTriple g = eisenstein_triple(12);
  g.e4 = perturbed(g.e4, 1, Rational(1));
  auto reports = ramanujan_residuals(g);
  CHECK(!reports[0].passed);
  REQUIRE(reports[0].first_failure.has_value());
  CHECK(reports[0].first_failure->first == Rational(1));
  CHECK(!reports[1].passed);
}

TEST_CASE("riccati solutions") {
  CHECK(riccati_residual(riccati_solution_k6(30), RiccatiProblem(6), 30).passed);
  CHECK(riccati_residual(riccati_solution_k1(30), RiccatiProblem(1), 30).passed);

  VerificationReport zero_fails =
      riccati_residual(PuiseuxSeries::zero(1, 10), RiccatiProblem(6), 10);
  CHECK(!zero_fails.passed);
  REQUIRE(zero_fails.first_failure.has_value());
  CHECK(zero_fails.first_failure->first == Rational(0));
  CHECK(zero_fails.first_failure->second == Rational(-1));

  // -E2 does not solve the k=1 equation
  CHECK(!riccati_residual(riccati_solution_k6(10), RiccatiProblem(1), 10).passed);
  CHECK_THROWS_AS(RiccatiProblem(0), std::invalid_argument);
  CHECK_THROWS_AS(RiccatiProblem(7), std::invalid_argument);
}

TEST_CASE("linear solutions") {
  PuiseuxSeries y6 = linear_solution_k6(30);
  CHECK(y6.ramification() == 12);
  CHECK(y6.valuation() == Rational(-1, 12));
  // eta^(-2) = q^(-1/12)(1 + 2q + 5q^2 + 10q^3 + 20q^4 + ...)
  CHECK(y6.coeff(Rational(-1, 12)) == Rational(1));
  CHECK(y6.coeff(Rational(11, 12)) == Rational(2));
  CHECK(y6.coeff(Rational(23, 12)) == Rational(5));
  CHECK(y6.coeff(Rational(35, 12)) == Rational(10));
  CHECK(y6.coeff(Rational(47, 12)) == Rational(20));
  CHECK(linear_residual(y6, RiccatiProblem(6), 30).passed);

  PuiseuxSeries y1 = linear_solution_k1(30);
  CHECK(y1.ramification() == 2);
  CHECK(y1.valuation() == Rational(1, 2));
  // DE4 * Delta^(-1/2) = 240 q^(1/2) + 7200 q^(3/2) + 93600 q^(5/2) + ...
  CHECK(y1.coeff(Rational(1, 2)) == Rational(240));
  CHECK(y1.coeff(Rational(3, 2)) == Rational(7200));
  CHECK(y1.coeff(Rational(5, 2)) == Rational(93600));
  CHECK(y1.coeff(Rational(7, 2)) == Rational(825600));
  CHECK(linear_residual(y1, RiccatiProblem(1), 30).passed);

  VerificationReport const_fails =
      linear_residual(PuiseuxSeries::constant(Rational(1), 10), RiccatiProblem(3), 10);
  CHECK(!const_fails.passed);
  REQUIRE(const_fails.first_failure.has_value());
  CHECK(const_fails.first_failure->first == Rational(0));
  CHECK(const_fails.first_failure->second == Rational(-1, 36));
}

TEST_CASE("schwarzian in the logarithmic variable") {
  PuiseuxSeries f5 = forms::hauptmodul(5, 13);
  PuiseuxSeries e4 = forms::eisenstein(4, 12);
  CHECK(schwarzian_d(f5) == Rational(-1, 25) * e4);

  for (int n = 2; n <= 5; ++n) {
    PuiseuxSeries s = schwarzian_d(forms::hauptmodul(n, 9));
    CHECK(s.coeff(Rational(0)) == Rational(-1, n * n));
  }

  CHECK_THROWS_AS(schwarzian_d(PuiseuxSeries::constant(Rational(3), 10)), std::domain_error);
}

TEST_CASE("schwarzian is invariant under linear fractional maps") {
  PuiseuxSeries f3 = forms::hauptmodul(3, 11);
  CHECK(agree(schwarzian_d(f3), schwarzian_d(invert(f3))));

  PuiseuxSeries f2 = forms::hauptmodul(2, 11);
  PuiseuxSeries base = schwarzian_d(f2);
  CHECK(agree(base, schwarzian_d(f2 + PuiseuxSeries::constant(Rational(7), f2.truncation_index()))));
  // unimodular integer matrices
  CHECK(agree(base, schwarzian_d(mobius(f2, 1, 1, 0, 1))));
  CHECK(agree(base, schwarzian_d(mobius(f2, 2, 1, 1, 1))));
  CHECK(agree(base, schwarzian_d(mobius(f2, 1, 0, 1, 1))));
  CHECK(agree(base, schwarzian_d(mobius(f2, 3, 2, 1, 1))));
}

TEST_CASE("schwarzian residuals for all levels") {
  for (int n = 2; n <= 5; ++n) {
    VerificationReport r = schwarzian_residual(n, 40);
    CHECK(r.passed);
    CHECK(r.verified_order >= Rational(40));
  }
  // weight mismatch: E6 in place of E4 must fail
  PuiseuxSeries f2 = forms::hauptmodul(2, 21);
  CHECK(!schwarzian_residual(2, f2, forms::eisenstein(6, 20)).passed);
  CHECK_THROWS_AS(schwarzian_residual(1, 40), std::invalid_argument);
}

TEST_CASE("riccati_from_linear reproduces the closed forms") {
  long N = 25;
  PuiseuxSeries u6 = riccati_from_linear(linear_solution_k6(N), RiccatiProblem(6));
  CHECK(u6 == riccati_solution_k6(N));

  PuiseuxSeries u1 = riccati_from_linear(linear_solution_k1(N), RiccatiProblem(1));
  CHECK(u1 == riccati_solution_k1(N));

  // constant solutions map to u = 0, which is no Riccati solution
  PuiseuxSeries u0 =
      riccati_from_linear(PuiseuxSeries::constant(Rational(2), 10), RiccatiProblem(4));
  CHECK(u0.is_zero());
  CHECK(!riccati_residual(u0, RiccatiProblem(4), 10).passed);

  CHECK_THROWS_AS(riccati_from_linear(PuiseuxSeries::zero(1, 5), RiccatiProblem(2)),
                  std::domain_error);
}

TEST_CASE("chain consistency for k = 6 and k = 1") {
  long N = 40;
  for (int k : {6, 1}) {
    PuiseuxSeries y = k == 6 ? linear_solution_k6(N) : linear_solution_k1(N);
    RiccatiProblem prob(k);
    CHECK(linear_residual(y, prob, N).passed);
    CHECK(riccati_residual(riccati_from_linear(y, prob), prob, N).passed);
  }
}

TEST_CASE("k1 master identity") {
  VerificationReport r = k1_master_identity(60);
  CHECK(r.passed);
  CHECK(r.verified_order >= Rational(60));

  // both sides at q^0 and q^1: the combination is a cusp form equal to -960*Delta
  PuiseuxSeries e4 = forms::eisenstein(4, 3);
  PuiseuxSeries de4 = derive(e4), d2e4 = derive(derive(e4));
  PuiseuxSeries lhs = Rational(5) * (de4 * de4) - Rational(4) * (e4 * d2e4);
  CHECK(lhs.coeff(Rational(0)) == Rational(0));
  CHECK(lhs.coeff(Rational(1)) == Rational(-960));
  CHECK((Rational(-960) * forms::delta(1)).coeff(Rational(1)) == Rational(-960));

  // fault injection via the explicit-series entry point
  PuiseuxSeries delta = forms::delta(20);
  PuiseuxSeries bad = delta + PuiseuxSeries::monomial(Rational(1), 3, 1, 20);
  CHECK(!k1_master_identity(forms::eisenstein(4, 20), bad).passed);
}

TEST_CASE("fprime identity") {
  VerificationReport r = fprime_identity(60);
  CHECK(r.passed);
  CHECK(r.verified_order >= Rational(60));

  // 960*Delta/(DE4)^2 = (1/60) q^(-1) - 1 + 32 q + ...
  PuiseuxSeries e4 = forms::eisenstein(4, 12);
  PuiseuxSeries de4 = derive(e4);
  PuiseuxSeries quotient = Rational(960) * (forms::delta(12) / (de4 * de4));
  CHECK(quotient.coeff(Rational(-1)) == Rational(1, 60));
  CHECK(quotient.coeff(Rational(0)) == Rational(-1));
  CHECK(quotient.coeff(Rational(1)) == Rational(32));

  // dropping the constant 1 fails at exponent 0
  PuiseuxSeries res = fprime_residual_series(e4, forms::delta(12)) -
                      PuiseuxSeries::constant(Rational(1), 10);
  VerificationReport broken = report_zero_series("fprime-minus-one", res);
  CHECK(!broken.passed);
  REQUIRE(broken.first_failure.has_value());
  CHECK(broken.first_failure->first == Rational(0));
  CHECK(broken.first_failure->second == Rational(-1));
}

TEST_CASE("derivative closures") {
  VerificationReport r = derivative_closures(50);
  CHECK(r.passed);
  CHECK(r.verified_order >= Rational(50));

  // constant terms of the second closure: (5/36)(1 - 2 + 1) = 0 = D^2E4 at q^0
  EisensteinTriple g = eisenstein_triple(5);
  PuiseuxSeries rhs = Rational(5, 36) *
                      (g.e2 * g.e2 * g.e4 - Rational(2) * (g.e2 * g.e6) + g.e4 * g.e4);
  CHECK(rhs.coeff(Rational(0)) == Rational(0));
  CHECK(derive(derive(g.e4)).coeff(Rational(0)) == Rational(0));

  EisensteinTriple bad = eisenstein_triple(20);
  bad.e6 = bad.e6 + PuiseuxSeries::monomial(Rational(1), 2, 1, 20);
  CHECK(!derivative_closures(bad).passed);
}

TEST_CASE("every report states the verified order") {
  CHECK(k1_master_identity(25).verified_order == Rational(25));
  CHECK(fprime_identity(25).verified_order == Rational(25));
  CHECK(schwarzian_residual(3, 12).verified_order == Rational(12));
  for (const auto& r : ramanujan_residuals(17)) CHECK(r.verified_order == Rational(17));
}
