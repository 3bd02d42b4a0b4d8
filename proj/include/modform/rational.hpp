#pragma once

#include <gmpxx.h>

#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>

namespace modform {

/// Exact rational scalar: always in lowest terms with a positive denominator.
/// Arithmetic never rounds.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(static_cast<signed long>(n)) {}  // NOLINT: implicit by design
  Rational(long num, long den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    v_ = mpq_class(static_cast<signed long>(num), 1);
    v_ /= mpq_class(static_cast<signed long>(den), 1);
  }
  explicit Rational(const mpz_class& n) : v_(n) {}
  Rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
  }
  explicit Rational(mpq_class v) : v_(std::move(v)) {
    if (v_.get_den() == 0) throw std::domain_error("Rational: zero denominator");
    v_.canonicalize();
  }
  /// Parses "p" or "p/q" in base 10.
  explicit Rational(const std::string& text) : v_(0) {
    mpq_class parsed;
    if (parsed.set_str(text, 10) != 0)
      throw std::invalid_argument("Rational: cannot parse '" + text + "'");
    if (parsed.get_den() == 0) throw std::domain_error("Rational: zero denominator");
    parsed.canonicalize();
    v_ = std::move(parsed);
  }

  mpz_class num() const { return v_.get_num(); }
  mpz_class den() const { return v_.get_den(); }
  const mpq_class& raw() const { return v_; }

  bool is_zero() const { return mpq_sgn(v_.get_mpq_t()) == 0; }
  bool is_integer() const { return mpz_cmp_ui(mpq_denref(v_.get_mpq_t()), 1) == 0; }
  int sign() const { return mpq_sgn(v_.get_mpq_t()); }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const { Rational r; r.v_ = -v_; return r; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return mpq_equal(a.v_.get_mpq_t(), b.v_.get_mpq_t()) != 0;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) < 0; }
  friend bool operator<=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) <= 0; }
  friend bool operator>(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) > 0; }
  friend bool operator>=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) >= 0; }

  /// "p" or "p/q", lowest terms.
  std::string str() const { return v_.get_str(); }
  double to_double() const { return v_.get_d(); }

  /// Integer value; requires an integral rational that fits in long.
  long to_long() const {
    if (!is_integer()) throw std::domain_error("Rational: not an integer");
    if (!v_.get_num().fits_slong_p()) throw std::overflow_error("Rational: out of long range");
    return v_.get_num().get_si();
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  mpq_class v_;
};

/// Exact square root, or nullopt when the value is not the square of a rational.
inline std::optional<Rational> exact_sqrt(const Rational& x) {
  if (x.sign() < 0) return std::nullopt;
  mpz_class n = x.num(), d = x.den();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t()))
    return std::nullopt;
  mpz_class sn, sd;
  mpz_sqrt(sn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(sd.get_mpz_t(), d.get_mpz_t());
  return Rational(sn, sd);
}

/// floor(x), as a long.
inline long floor_long(const Rational& x) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), x.num().get_mpz_t(), x.den().get_mpz_t());
  if (!q.fits_slong_p()) throw std::overflow_error("Rational: floor out of long range");
  return q.get_si();
}

}  // namespace modform
