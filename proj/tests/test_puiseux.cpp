#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <vector>

#include "modform/forms.hpp"
#include "modform/puiseux.hpp"
#include "modform/series_json.hpp"

using modform::PuiseuxSeries;
using modform::Rational;

namespace {

PuiseuxSeries q_pow(long exp_index, long ram, long trunc_index) {
  return PuiseuxSeries::monomial(Rational(1), exp_index, ram, trunc_index);
}

PuiseuxSeries one(long trunc_index) { return PuiseuxSeries::constant(Rational(1), trunc_index); }

// Random nonzero series with small rational coefficients.
PuiseuxSeries random_series(std::mt19937& rng, bool nonzero_lead = true) {
  std::uniform_int_distribution<long> ram(1, 6), val(-5, 5), len(1, 12);
  std::uniform_int_distribution<long> num(-9, 9), den(1, 9);
  long m = ram(rng), v = val(rng), n = len(rng);
  std::vector<Rational> c(static_cast<std::size_t>(n));
  for (auto& x : c) x = Rational(num(rng), den(rng));
  if (nonzero_lead && c[0].is_zero()) c[0] = Rational(1);
  return PuiseuxSeries(m, v, std::move(c));
}

}  // namespace

TEST_CASE("rebase re-indexes without changing the exponent set") {
  // 1 + q at ramification 1 -> ramification 2
  PuiseuxSeries s(1, 0, {Rational(1), Rational(1)});
  PuiseuxSeries r = rebase(s, 2);
  CHECK(r.ramification() == 2);
  CHECK(r.coeff_at(0) == Rational(1));
  CHECK(r.coeff_at(1) == Rational(0));
  CHECK(r.coeff_at(2) == Rational(1));
  // the half-integer slot above the old boundary is structurally zero, so it
  // stays known
  CHECK(r.truncation_index() == 3);
  CHECK(r.coeff_at(3) == Rational(0));

  PuiseuxSeries fifth = q_pow(1, 5, 1);  // q^(1/5)
  PuiseuxSeries tenth = rebase(fifth, 10);
  CHECK(tenth.valuation_index() == 2);
  CHECK(tenth.coeff_at(2) == Rational(1));

  CHECK(rebase(s, 1) == s);
  CHECK_THROWS_AS(rebase(fifth, 7), std::domain_error);
}

TEST_CASE("rebase then reduce is the identity") {
  std::mt19937 rng(7);
  for (int i = 0; i < 50; ++i) {
    PuiseuxSeries s = reduce(random_series(rng));
    long m = s.ramification();
    PuiseuxSeries round = reduce(rebase(s, 4 * m));
    CHECK(round.ramification() == s.ramification());
    CHECK(round.valuation_index() == s.valuation_index());
    CHECK(agree(round, s));
  }
}

TEST_CASE("add and mul basics") {
  long N = 20;
  PuiseuxSeries geom(1, 0, std::vector<Rational>(static_cast<std::size_t>(N + 1), Rational(1)));
  PuiseuxSeries lhs = (one(N) - q_pow(1, 1, N)) * geom;
  CHECK(lhs == one(N));

  PuiseuxSeries e4 = modform::forms::eisenstein(4, 10);
  PuiseuxSeries z = e4 - e4;
  CHECK(z.is_zero());
  CHECK(z.truncation_index() == 10);

  PuiseuxSeries p = q_pow(1, 2, 4) * q_pow(1, 3, 4);  // q^(1/2)*q^(1/3)
  CHECK(p.ramification() == 6);
  CHECK(p.valuation() == Rational(5, 6));
}

TEST_CASE("mul truncation follows min(Ta + vb, Tb + va)") {
  PuiseuxSeries a(1, 1, {Rational(1), Rational(2), Rational(3)});   // v=1, T=3
  PuiseuxSeries b(1, 2, {Rational(1), Rational(1)});                // v=2, T=3
  PuiseuxSeries p = a * b;
  CHECK(p.truncation_index() == std::min(3 + 2, 3 + 1));
  CHECK(p.valuation_index() == 3);
}

TEST_CASE("invert and div") {
  long N = 16;
  PuiseuxSeries inv = invert(one(N) - q_pow(1, 1, N));
  for (long j = 0; j <= N; ++j) CHECK(inv.coeff_at(j) == Rational(1));

  PuiseuxSeries qinv = invert(q_pow(1, 1, 1));
  CHECK(qinv.valuation_index() == -1);
  CHECK(qinv.coeff_at(-1) == Rational(1));

  PuiseuxSeries de4 = derive(modform::forms::eisenstein(4, 12));
  CHECK(de4 / de4 == one(1));

  CHECK_THROWS_AS(invert(PuiseuxSeries::zero(1, 5)), std::domain_error);
}

TEST_CASE("mul by inverse returns one for randomized series") {
  std::mt19937 rng(20240901);
  for (int i = 0; i < 50; ++i) {
    PuiseuxSeries s = random_series(rng);
    PuiseuxSeries p = s * invert(s);
    REQUIRE(!p.is_zero());
    CHECK(p.valuation_index() == 0);
    CHECK(p.coeff_at(0) == Rational(1));
    for (long j = 1; j <= p.truncation_index(); ++j) CHECK(p.coeff_at(j) == Rational(0));
  }
}

TEST_CASE("ring laws hold on retained terms") {
  std::mt19937 rng(99);
  for (int i = 0; i < 50; ++i) {
    PuiseuxSeries a = random_series(rng), b = random_series(rng), c = random_series(rng);
    CHECK(agree(a + b, b + a));
    CHECK(agree(a * b, b * a));
    CHECK(agree((a + b) + c, a + (b + c)));
    CHECK(agree((a * b) * c, a * (b * c)));
    CHECK(agree(a * (b + c), a * b + a * c));
  }
}

TEST_CASE("derive satisfies the Leibniz rule") {
  std::mt19937 rng(41);
  for (int i = 0; i < 50; ++i) {
    PuiseuxSeries a = random_series(rng), b = random_series(rng);
    CHECK(agree(derive(a * b), derive(a) * b + a * derive(b)));
  }
}

TEST_CASE("derive on monomials and constants") {
  PuiseuxSeries m = q_pow(7, 1, 10);
  CHECK(derive(m).coeff_at(7) == Rational(7));
  CHECK(derive(PuiseuxSeries::constant(Rational(5), 10)).is_zero());
  PuiseuxSeries frac = q_pow(3, 4, 8);  // q^(3/4)
  CHECK(derive(frac).coeff_at(3) == Rational(3, 4));

  // D(E2) = (E2^2 - E4)/12
  PuiseuxSeries e2 = modform::forms::eisenstein(2, 30);
  PuiseuxSeries e4 = modform::forms::eisenstein(4, 30);
  CHECK(derive(e2) == Rational(1, 12) * (e2 * e2 - e4));
}

TEST_CASE("power_int") {
  long N = 10;
  PuiseuxSeries p = power_int(one(N) + q_pow(1, 1, N), 2);
  CHECK(p.coeff_at(0) == Rational(1));
  CHECK(p.coeff_at(1) == Rational(2));
  CHECK(p.coeff_at(2) == Rational(1));

  PuiseuxSeries s = modform::forms::eisenstein(6, 8);
  CHECK(power_int(s, 0) == one(0));

  CHECK(power_int(q_pow(1, 24, 24), 24) == q_pow(1, 1, 1));

  PuiseuxSeries neg = power_int(one(N) - q_pow(1, 1, N), -1);
  CHECK(neg.coeff_at(5) == Rational(1));
  CHECK_THROWS_AS(power_int(PuiseuxSeries::zero(1, 3), -2), std::domain_error);
}

TEST_CASE("sqrt on exact squares") {
  long N = 12;
  PuiseuxSeries sq(1, 0, {Rational(1), Rational(2), Rational(1)});
  PuiseuxSeries r = sqrt(sq);
  CHECK(r.coeff_at(0) == Rational(1));
  CHECK(r.coeff_at(1) == Rational(1));

  CHECK(sqrt(q_pow(2, 1, 4)) == q_pow(1, 1, 2));

  PuiseuxSeries bad(1, 0, {Rational(2), Rational(1)});
  CHECK_THROWS_AS(sqrt(bad), std::domain_error);
  PuiseuxSeries negz(1, 0, {Rational(-1)});
  CHECK_THROWS_AS(sqrt(negz), std::domain_error);

  std::mt19937 rng(5150);
  for (int i = 0; i < 50; ++i) {
    PuiseuxSeries s = random_series(rng);
    PuiseuxSeries square = s * s;
    PuiseuxSeries root = sqrt(square);
    CHECK(agree(root * root, square));
    REQUIRE(!root.is_zero());
    CHECK(root.coeff_at(root.valuation_index()).sign() > 0);
  }
  (void)N;
}

TEST_CASE("sqrt of the discriminant squares back") {
  PuiseuxSeries delta = modform::forms::delta(50);
  PuiseuxSeries root = sqrt(delta);
  CHECK(root.ramification() == 2);
  CHECK(root.valuation() == Rational(1, 2));
  CHECK(root.coeff(Rational(1, 2)) == Rational(1));
  CHECK(root.coeff(Rational(3, 2)) == Rational(-12));
  CHECK(root.coeff(Rational(5, 2)) == Rational(54));
  CHECK(agree(root * root, delta));
}

TEST_CASE("equality compares mutually known coefficients") {
  PuiseuxSeries a(1, 0, {Rational(1), Rational(2), Rational(3)});
  PuiseuxSeries b(1, 0, {Rational(1), Rational(2)});
  CHECK(a == b);  // agree up to the smaller truncation
  PuiseuxSeries c(1, 0, {Rational(1), Rational(5)});
  CHECK(a != c);
  auto d = first_disagreement(a, c);
  REQUIRE(d.has_value());
  CHECK(d->first == Rational(1));
  CHECK(d->second == Rational(-3));
  // different ramifications of the same series
  CHECK(rebase(a, 3) == a);
}

TEST_CASE("coefficient access beyond the truncation throws") {
  PuiseuxSeries a(1, 0, {Rational(1), Rational(2)});
  CHECK(a.coeff(Rational(1)) == Rational(2));
  CHECK(a.coeff(Rational(1, 2)) == Rational(0));  // unrepresentable but below T
  CHECK_THROWS_AS(a.coeff(Rational(2)), std::out_of_range);
  CHECK_THROWS_AS(a.coeff_at(2), std::out_of_range);
  CHECK(a.coeff_at(-3) == Rational(0));
}

TEST_CASE("zero series bookkeeping") {
  PuiseuxSeries z = PuiseuxSeries::zero(4, 11);
  CHECK(z.is_zero());
  CHECK(z.truncation_index() == 11);
  CHECK_THROWS_AS(z.valuation(), std::domain_error);
  PuiseuxSeries all_zero(2, 3, {Rational(0), Rational(0)});
  CHECK(all_zero.is_zero());
  CHECK(all_zero.truncation_index() == 4);
}

TEST_CASE("series JSON round trip and schema") {
  PuiseuxSeries root = sqrt(modform::forms::delta(6));
  nlohmann::json j = modform::series_to_json(root);
  CHECK(j["ramification"] == 2);
  CHECK(j["truncation"] == "11/2");
  CHECK(j["terms"][0]["exp"] == "1/2");
  CHECK(j["terms"][0]["coeff"] == "1");
  CHECK(j["terms"][1]["exp"] == "3/2");
  CHECK(j["terms"][1]["coeff"] == "-12");
  CHECK(modform::series_from_json(j) == root);
  CHECK(modform::series_from_json(j).truncation_index() == root.truncation_index());

  std::mt19937 rng(313);
  for (int i = 0; i < 30; ++i) {
    PuiseuxSeries s = random_series(rng);
    PuiseuxSeries back = modform::series_from_json(modform::series_to_json(s));
    CHECK(back.ramification() == s.ramification());
    CHECK(back.truncation_index() == s.truncation_index());
    CHECK(agree(back, s));
  }
}
