#include "modform/forms.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>

namespace modform::forms {

namespace {

// Sieved table of sigma_k(1..n_max).
std::vector<mpz_class> sigma_table(unsigned k, unsigned long n_max) {
  std::vector<mpz_class> table(n_max + 1, mpz_class(0));
  mpz_class dk;
  for (unsigned long d = 1; d <= n_max; ++d) {
    mpz_ui_pow_ui(dk.get_mpz_t(), d, k);
    for (unsigned long n = d; n <= n_max; n += d) table[n] += dk;
  }
  return table;
}

// Series in x = q^c from a series in integer powers of x: index j becomes
// exponent c*j, placed at ramification 24*den(c) together with an index shift.
PuiseuxSeries substitute_scaled(const PuiseuxSeries& s, long stretch, long shift, long ram) {
  if (s.ramification() != 1) throw std::logic_error("substitute_scaled: expects ramification 1");
  std::vector<Rational> c;
  long v = s.valuation_index() * stretch + shift;
  long t = s.truncation_index() * stretch + shift;
  if (s.is_zero()) return PuiseuxSeries::zero(ram, t);
  c.assign(static_cast<std::size_t>(t - v + 1), Rational());
  for (long j = s.valuation_index(); j <= s.truncation_index(); ++j) {
    const Rational& x = s.coeff_at(j);
    if (!x.is_zero()) c[static_cast<std::size_t>((j - s.valuation_index()) * stretch)] = x;
  }
  return PuiseuxSeries(ram, v, std::move(c));
}

}  // namespace

NamedForm NamedForm::hauptmodul(int level) {
  if (level < 2 || level > 5)
    throw std::invalid_argument("NamedForm: hauptmodul level must be 2..5");
  return NamedForm(FormTag::Hauptmodul, level);
}

std::string NamedForm::name() const {
  switch (tag_) {
    case FormTag::E2: return "E2";
    case FormTag::E4: return "E4";
    case FormTag::E6: return "E6";
    case FormTag::Eta: return "eta";
    case FormTag::Delta: return "delta";
    case FormTag::Hauptmodul: return "hauptmodul" + std::to_string(level_);
  }
  return "?";
}

std::optional<NamedForm> NamedForm::parse(std::string_view text) {
  std::string t(text);
  std::transform(t.begin(), t.end(), t.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (t == "e2") return e2();
  if (t == "e4") return e4();
  if (t == "e6") return e6();
  if (t == "eta") return eta();
  if (t == "delta") return delta();
  if (t.rfind("hauptmodul", 0) == 0 && t.size() == 11 && t[10] >= '2' && t[10] <= '5')
    return hauptmodul(t[10] - '0');
  return std::nullopt;
}

mpz_class sigma(unsigned k, unsigned long n) {
  if (n == 0) throw std::invalid_argument("sigma: n must be positive");
  mpz_class total(0), dk;
  for (unsigned long d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    mpz_ui_pow_ui(dk.get_mpz_t(), d, k);
    total += dk;
    unsigned long e = n / d;
    if (e != d) {
      mpz_ui_pow_ui(dk.get_mpz_t(), e, k);
      total += dk;
    }
  }
  return total;
}

PuiseuxSeries eisenstein(int weight, long order) {
  if (weight != 2 && weight != 4 && weight != 6)
    throw std::invalid_argument("eisenstein: weight must be 2, 4 or 6");
  if (order < 0) throw std::invalid_argument("eisenstein: negative order");
  long c = weight == 2 ? -24 : weight == 4 ? 240 : -504;
  auto sig = sigma_table(static_cast<unsigned>(weight - 1), static_cast<unsigned long>(order));
  std::vector<Rational> coeffs(static_cast<std::size_t>(order) + 1);
  coeffs[0] = Rational(1);
  for (long n = 1; n <= order; ++n)
    coeffs[static_cast<std::size_t>(n)] = Rational(mpz_class(sig[static_cast<std::size_t>(n)] * c));
  return PuiseuxSeries(1, 0, std::move(coeffs));
}

PuiseuxSeries euler_product(long order) {
  if (order < 0) throw std::invalid_argument("euler_product: negative order");
  std::vector<Rational> coeffs(static_cast<std::size_t>(order) + 1);
  coeffs[0] = Rational(1);
  for (long k = 1;; ++k) {
    long e1 = k * (3 * k - 1) / 2;
    long e2 = k * (3 * k + 1) / 2;
    if (e1 > order) break;
    Rational sign(k % 2 == 0 ? 1 : -1);
    coeffs[static_cast<std::size_t>(e1)] = sign;
    if (e2 <= order) coeffs[static_cast<std::size_t>(e2)] = sign;
  }
  return PuiseuxSeries(1, 0, std::move(coeffs));
}

PuiseuxSeries eta_quotient(const std::vector<EtaFactor>& factors, long order) {
  if (factors.empty()) throw std::invalid_argument("eta_quotient: empty factor list");
  Rational valuation;
  long ram = 1;
  for (const auto& f : factors) {
    if (f.scale.sign() <= 0) throw std::invalid_argument("eta_quotient: scale must be positive");
    if (!f.scale.num().fits_slong_p() || !f.scale.den().fits_slong_p())
      throw std::invalid_argument("eta_quotient: scale out of range");
    valuation += Rational(f.exponent) * f.scale / Rational(24);
    ram = std::lcm(ram, 24 * f.scale.den().get_si());
  }
  // Each factor needs the same relative precision as the final series.
  Rational rel = Rational(order) - valuation;
  if (rel.sign() < 0) rel = Rational();
  PuiseuxSeries result;
  bool first = true;
  for (const auto& f : factors) {
    long a = f.scale.num().get_si();
    long b = f.scale.den().get_si();
    long euler_order = floor_long(rel / f.scale) + 2;
    PuiseuxSeries pe = power_int(euler_product(euler_order), f.exponent);
    // x^j -> q^(a j / b); prefactor q^(a e / (24 b)). Factor ramification 24b.
    PuiseuxSeries factor = substitute_scaled(pe, 24 * a, a * f.exponent, 24 * b);
    result = first ? factor : result * factor;
    first = false;
  }
  result = rebase(result, ram);
  return truncated_index(result, order * ram);
}

int legendre_5(long n) {
  long m = ((n % 5) + 5) % 5;
  if (m == 0) return 0;
  return (m == 1 || m == 4) ? 1 : -1;
}

PuiseuxSeries hauptmodul(int level, long order) {
  if (level < 2 || level > 5) throw std::invalid_argument("hauptmodul: level must be 2..5");
  if (order < 1) throw std::invalid_argument("hauptmodul: order must be at least 1");
  PuiseuxSeries f;
  if (level == 5) {
    // q^(1/5) prod (1-q^n)^((n/5)), assembled as a quotient of sparse products.
    long n_max = order + 1;
    PuiseuxSeries num = PuiseuxSeries::constant(Rational(1), n_max);
    PuiseuxSeries den = num;
    for (long n = 1; n <= n_max; ++n) {
      int chi = legendre_5(n);
      if (chi == 0) continue;
      PuiseuxSeries factor =
          PuiseuxSeries::constant(Rational(1), n_max) - PuiseuxSeries::monomial(Rational(1), n, 1, n_max);
      if (chi == 1)
        num = truncated_index(num * factor, n_max);
      else
        den = truncated_index(den * factor, n_max);
    }
    PuiseuxSeries prod = num * invert(den);
    f = substitute_scaled(prod, 5, 1, 5);
  } else if (level == 2) {
    f = eta_quotient({{Rational(2), 8}, {Rational(1, 2), -8}}, order + 1);
  } else if (level == 3) {
    f = eta_quotient({{Rational(3), 3}, {Rational(1, 3), -3}}, order + 1);
  } else {
    f = eta_quotient({{Rational(1, 2), 1}, {Rational(4), 2}, {Rational(1, 4), -2}, {Rational(2), -1}},
                     order + 1);
  }
  f = rebase(reduce(f), level);
  f = truncated_index(f, order * level);
  if (f.is_zero() || f.valuation() != Rational(1, level) ||
      f.coeff_at(f.valuation_index()) != Rational(1))
    throw std::logic_error("hauptmodul: expansion lost its normalization");
  return f;
}

PuiseuxSeries eta(long order) {
  if (order < 0) throw std::invalid_argument("eta: negative order");
  PuiseuxSeries p = euler_product(order);
  return truncated_index(substitute_scaled(p, 24, 1, 24), order * 24);
}

PuiseuxSeries delta(long order) { return reduce(eta_quotient({{Rational(1), 24}}, order)); }

PuiseuxSeries expand(const NamedForm& form, long order) {
  switch (form.tag()) {
    case FormTag::E2: return eisenstein(2, order);
    case FormTag::E4: return eisenstein(4, order);
    case FormTag::E6: return eisenstein(6, order);
    case FormTag::Eta: return eta(order);
    case FormTag::Delta: return delta(order);
    case FormTag::Hauptmodul: return hauptmodul(form.level(), order);
  }
  throw std::logic_error("expand: unhandled form");
}

}  // namespace modform::forms
