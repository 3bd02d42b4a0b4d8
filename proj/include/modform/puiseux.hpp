#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "modform/rational.hpp"

namespace modform {

/// Truncated Puiseux series over Rational.
///
/// A series with ramification m stores coefficients of q^(j/m) for the index
/// range j = valuation_index() .. truncation_index(); exponents above
/// truncation_order() = T/m are unknown. A nonzero series keeps its leading
/// stored coefficient nonzero (tight valuation); the zero series stores no
/// coefficients and has valuation_index() == truncation_index() + 1.
class PuiseuxSeries {
 public:
  /// Zero series known up to exponent trunc_index/ram.
  PuiseuxSeries() = default;
  static PuiseuxSeries zero(long ram = 1, long trunc_index = 0);
  static PuiseuxSeries constant(const Rational& c, long trunc_index);
  static PuiseuxSeries monomial(const Rational& c, long exp_index, long ram, long trunc_index);
  /// coeffs[i] is the coefficient of q^((val_index+i)/ram).
  PuiseuxSeries(long ram, long val_index, std::vector<Rational> coeffs);

  long ramification() const { return ram_; }
  bool is_zero() const { return c_.empty(); }
  long valuation_index() const { return val_; }
  long truncation_index() const { return trunc_; }
  Rational valuation() const;
  Rational truncation_order() const { return Rational(trunc_, ram_); }
  std::size_t term_count() const { return c_.size(); }

  /// Stored coefficient by index; zero below the valuation, throws above the
  /// truncation (those terms are unknown).
  const Rational& coeff_at(long index) const;
  /// Coefficient at exponent e. Exponents not representable in the
  /// ramification are structurally zero; beyond the truncation throws.
  Rational coeff(const Rational& e) const;

 private:
  long ram_ = 1;
  long val_ = 1;
  long trunc_ = 0;
  std::vector<Rational> c_;
  void normalize();
  friend PuiseuxSeries rebase(const PuiseuxSeries&, long);
  friend PuiseuxSeries reduce(const PuiseuxSeries&);
  friend PuiseuxSeries truncated_index(const PuiseuxSeries&, long);
  friend PuiseuxSeries operator+(const PuiseuxSeries&, const PuiseuxSeries&);
  friend PuiseuxSeries operator*(const PuiseuxSeries&, const PuiseuxSeries&);
  friend PuiseuxSeries operator*(const Rational&, const PuiseuxSeries&);
  friend PuiseuxSeries invert(const PuiseuxSeries&);
  friend PuiseuxSeries sqrt(const PuiseuxSeries&);
  friend PuiseuxSeries derive(const PuiseuxSeries&);
};

/// Re-indexes to a ramification that is a multiple of the current one; the
/// exponent set and the truncation bound T/m are unchanged.
PuiseuxSeries rebase(const PuiseuxSeries& s, long new_ram);
/// Smallest ramification representing the stored exponents; inverse of rebase.
PuiseuxSeries reduce(const PuiseuxSeries& s);
/// Lowers the truncation to the given index (no-op when already lower).
PuiseuxSeries truncated_index(const PuiseuxSeries& s, long trunc_index);
/// Lowers the truncation to exponent bound e.
PuiseuxSeries truncated(const PuiseuxSeries& s, const Rational& e);

PuiseuxSeries operator+(const PuiseuxSeries& a, const PuiseuxSeries& b);
PuiseuxSeries operator-(const PuiseuxSeries& a);
PuiseuxSeries operator-(const PuiseuxSeries& a, const PuiseuxSeries& b);
PuiseuxSeries operator*(const PuiseuxSeries& a, const PuiseuxSeries& b);
PuiseuxSeries operator*(const Rational& c, const PuiseuxSeries& s);
PuiseuxSeries operator*(const PuiseuxSeries& s, const Rational& c);

/// Formal inverse of a nonzero series; the result has valuation -v and
/// truncation index T - 2v (same relative precision).
PuiseuxSeries invert(const PuiseuxSeries& s);
PuiseuxSeries operator/(const PuiseuxSeries& a, const PuiseuxSeries& b);
/// Integer power by square-and-multiply; negative exponents invert first.
PuiseuxSeries power_int(const PuiseuxSeries& s, long e);
/// Square root with positive leading coefficient; the leading coefficient
/// must be the square of a rational. Odd leading indices double the
/// ramification.
PuiseuxSeries sqrt(const PuiseuxSeries& s);
/// Logarithmic derivation D = q*d/dq: multiplies the q^(j/m) term by j/m.
PuiseuxSeries derive(const PuiseuxSeries& s);

/// True when the series agree on every exponent up to the smaller truncation.
bool agree(const PuiseuxSeries& a, const PuiseuxSeries& b);
inline bool operator==(const PuiseuxSeries& a, const PuiseuxSeries& b) { return agree(a, b); }
/// Lowest exponent where the series disagree, with the coefficient of a - b;
/// nullopt when they agree on all mutually known exponents.
std::optional<std::pair<Rational, Rational>> first_disagreement(const PuiseuxSeries& a,
                                                                const PuiseuxSeries& b);
/// Leading term (exponent, coefficient) of a nonzero series.
std::optional<std::pair<Rational, Rational>> leading_term(const PuiseuxSeries& s);

std::string to_string(const PuiseuxSeries& s);
std::ostream& operator<<(std::ostream& os, const PuiseuxSeries& s);

}  // namespace modform
