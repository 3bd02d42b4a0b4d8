#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "modform/puiseux.hpp"

namespace modform::forms {

enum class FormTag { E2, E4, E6, Eta, Delta, Hauptmodul };

/// One of the named q-expansions the library can generate. Hauptmodul levels
/// are restricted to 2..5 (the genus-zero principal congruence groups with no
/// elliptic points).
class NamedForm {
 public:
  static NamedForm e2() { return NamedForm(FormTag::E2, 0); }
  static NamedForm e4() { return NamedForm(FormTag::E4, 0); }
  static NamedForm e6() { return NamedForm(FormTag::E6, 0); }
  static NamedForm eta() { return NamedForm(FormTag::Eta, 0); }
  static NamedForm delta() { return NamedForm(FormTag::Delta, 0); }
  static NamedForm hauptmodul(int level);

  FormTag tag() const { return tag_; }
  int level() const { return level_; }
  std::string name() const;
  static std::optional<NamedForm> parse(std::string_view text);

  friend bool operator==(const NamedForm& a, const NamedForm& b) {
    return a.tag_ == b.tag_ && a.level_ == b.level_;
  }

 private:
  NamedForm(FormTag tag, int level) : tag_(tag), level_(level) {}
  FormTag tag_;
  int level_;
};

/// Sum of the k-th powers of the positive divisors of n (n >= 1).
mpz_class sigma(unsigned k, unsigned long n);

/// E2, E4 or E6 to order q^N: 1 + c_w * sum sigma_{w-1}(n) q^n with
/// c_2 = -24, c_4 = 240, c_6 = -504.
PuiseuxSeries eisenstein(int weight, long order);

/// prod_{n>=1} (1 - q^n) to order q^N via the pentagonal number theorem.
PuiseuxSeries euler_product(long order);

/// One factor eta(c z)^e of an eta quotient; c = a/b positive in lowest terms.
struct EtaFactor {
  Rational scale;
  long exponent;
};

/// Product over factors of [q^(c/24) prod (1 - q^(c n))]^e, known to exponent
/// `order`; the ramification is the lcm of 24*denominator(c) over the factors.
PuiseuxSeries eta_quotient(const std::vector<EtaFactor>& factors, long order);

/// Legendre symbol (n/5): 0, +1 or -1.
int legendre_5(long n);

/// Hauptmodul of Gamma(n), n in 2..5, normalized to valuation 1/n with
/// leading coefficient 1, returned in ramification n.
PuiseuxSeries hauptmodul(int level, long order);

/// q^(1/24) prod (1 - q^n), ramification 24.
PuiseuxSeries eta(long order);
/// q prod (1 - q^n)^24.
PuiseuxSeries delta(long order);

/// Canonical expansion of a named form, known to exponent `order`.
PuiseuxSeries expand(const NamedForm& form, long order);

}  // namespace modform::forms
