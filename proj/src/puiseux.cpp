#include "modform/puiseux.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace modform {

namespace {

const Rational kZero{};

long lcm_long(long a, long b) { return std::lcm(a, b); }

long floor_div(long a, long b) {
  long q = a / b, r = a % b;
  return (r != 0 && ((r < 0) != (b < 0))) ? q - 1 : q;
}

}  // namespace

void PuiseuxSeries::normalize() {
  if (ram_ < 1) throw std::invalid_argument("PuiseuxSeries: ramification must be positive");
  std::size_t lead = 0;
  while (lead < c_.size() && c_[lead].is_zero()) ++lead;
  if (lead == c_.size()) {
    c_.clear();
    val_ = trunc_ + 1;
    return;
  }
  if (lead > 0) {
    c_.erase(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(lead));
    val_ += static_cast<long>(lead);
  }
}

PuiseuxSeries PuiseuxSeries::zero(long ram, long trunc_index) {
  PuiseuxSeries s;
  s.ram_ = ram;
  s.trunc_ = trunc_index;
  s.val_ = trunc_index + 1;
  if (ram < 1) throw std::invalid_argument("PuiseuxSeries: ramification must be positive");
  return s;
}

PuiseuxSeries PuiseuxSeries::constant(const Rational& c, long trunc_index) {
  return monomial(c, 0, 1, trunc_index);
}

PuiseuxSeries PuiseuxSeries::monomial(const Rational& c, long exp_index, long ram,
                                      long trunc_index) {
  if (trunc_index < exp_index || c.is_zero()) return zero(ram, trunc_index);
  PuiseuxSeries s;
  s.ram_ = ram;
  s.val_ = exp_index;
  s.trunc_ = trunc_index;
  s.c_.assign(static_cast<std::size_t>(trunc_index - exp_index + 1), Rational());
  s.c_[0] = c;
  s.normalize();
  return s;
}

PuiseuxSeries::PuiseuxSeries(long ram, long val_index, std::vector<Rational> coeffs)
    : ram_(ram), val_(val_index), c_(std::move(coeffs)) {
  trunc_ = val_ + static_cast<long>(c_.size()) - 1;
  normalize();
}

Rational PuiseuxSeries::valuation() const {
  if (is_zero()) throw std::domain_error("PuiseuxSeries: zero series has no valuation");
  return Rational(val_, ram_);
}

const Rational& PuiseuxSeries::coeff_at(long index) const {
  if (index > trunc_)
    throw std::out_of_range("PuiseuxSeries: coefficient beyond truncation is unknown");
  if (index < val_ || c_.empty()) return kZero;
  return c_[static_cast<std::size_t>(index - val_)];
}

Rational PuiseuxSeries::coeff(const Rational& e) const {
  Rational scaled = e * Rational(ram_);
  if (!scaled.is_integer()) {
    if (e > truncation_order())
      throw std::out_of_range("PuiseuxSeries: coefficient beyond truncation is unknown");
    return Rational();
  }
  return coeff_at(scaled.to_long());
}

PuiseuxSeries rebase(const PuiseuxSeries& s, long new_ram) {
  if (new_ram < 1 || new_ram % s.ram_ != 0)
    throw std::domain_error("incompatible ramification");
  long k = new_ram / s.ram_;
  if (k == 1) return s;
  PuiseuxSeries r;
  r.ram_ = new_ram;
  // Exponents strictly between the old gridpoints are structurally zero, so
  // the knowledge boundary extends to just below the next old exponent.
  r.trunc_ = s.trunc_ * k + (k - 1);
  if (s.is_zero()) {
    r.val_ = r.trunc_ + 1;
    return r;
  }
  r.val_ = s.val_ * k;
  r.c_.assign(static_cast<std::size_t>(r.trunc_ - r.val_ + 1), Rational());
  for (std::size_t i = 0; i < s.c_.size(); ++i) r.c_[i * static_cast<std::size_t>(k)] = s.c_[i];
  return r;
}

PuiseuxSeries reduce(const PuiseuxSeries& s) {
  if (s.is_zero()) {
    PuiseuxSeries r = PuiseuxSeries::zero(1, floor_div(s.trunc_, s.ram_));
    return r;
  }
  long g = s.ram_;
  for (long j = s.val_; j <= s.trunc_ && g > 1; ++j)
    if (!s.coeff_at(j).is_zero()) g = std::gcd(g, j < 0 ? -j : j);
  if (g == 1) return s;
  PuiseuxSeries r;
  r.ram_ = s.ram_ / g;
  r.val_ = s.val_ / g;  // g divides every nonzero index, val included
  r.trunc_ = floor_div(s.trunc_, g);
  r.c_.assign(static_cast<std::size_t>(r.trunc_ - r.val_ + 1), Rational());
  for (long j = s.val_; j <= s.trunc_; ++j)
    if (!s.coeff_at(j).is_zero()) r.c_[static_cast<std::size_t>(j / g - r.val_)] = s.coeff_at(j);
  r.normalize();
  return r;
}

PuiseuxSeries truncated_index(const PuiseuxSeries& s, long trunc_index) {
  if (trunc_index >= s.trunc_) return s;
  PuiseuxSeries r;
  r.ram_ = s.ram_;
  r.trunc_ = trunc_index;
  if (s.is_zero() || trunc_index < s.val_) {
    r.val_ = trunc_index + 1;
    return r;
  }
  r.val_ = s.val_;
  r.c_.assign(s.c_.begin(), s.c_.begin() + static_cast<std::ptrdiff_t>(trunc_index - s.val_ + 1));
  r.normalize();
  return r;
}

PuiseuxSeries truncated(const PuiseuxSeries& s, const Rational& e) {
  return truncated_index(s, floor_long(e * Rational(s.ramification())));
}

PuiseuxSeries operator+(const PuiseuxSeries& a, const PuiseuxSeries& b) {
  long m = lcm_long(a.ram_, b.ram_);
  PuiseuxSeries x = rebase(a, m), y = rebase(b, m);
  long t = std::min(x.trunc_, y.trunc_);
  long lo = std::min(x.is_zero() ? t + 1 : x.val_, y.is_zero() ? t + 1 : y.val_);
  PuiseuxSeries r;
  r.ram_ = m;
  r.trunc_ = t;
  if (lo > t) {
    r.val_ = t + 1;
    return r;
  }
  r.val_ = lo;
  r.c_.assign(static_cast<std::size_t>(t - lo + 1), Rational());
  for (long j = lo; j <= t; ++j)
    r.c_[static_cast<std::size_t>(j - lo)] = x.coeff_at(j) + y.coeff_at(j);
  r.normalize();
  return r;
}

PuiseuxSeries operator-(const PuiseuxSeries& a) { return Rational(-1) * a; }

PuiseuxSeries operator-(const PuiseuxSeries& a, const PuiseuxSeries& b) { return a + (-b); }

PuiseuxSeries operator*(const Rational& c, const PuiseuxSeries& s) {
  if (c.is_zero()) return PuiseuxSeries::zero(s.ramification(), s.truncation_index());
  PuiseuxSeries r = s;
  for (auto& v : r.c_) v *= c;
  return r;
}

PuiseuxSeries operator*(const PuiseuxSeries& s, const Rational& c) { return c * s; }

PuiseuxSeries operator*(const PuiseuxSeries& a, const PuiseuxSeries& b) {
  long m = lcm_long(a.ram_, b.ram_);
  PuiseuxSeries x = rebase(a, m), y = rebase(b, m);
  long vx = x.is_zero() ? x.trunc_ + 1 : x.val_;
  long vy = y.is_zero() ? y.trunc_ + 1 : y.val_;
  long t = std::min(x.trunc_ + vy, y.trunc_ + vx);
  if (x.is_zero() || y.is_zero() || t < vx + vy) return PuiseuxSeries::zero(m, t);
  PuiseuxSeries r;
  r.ram_ = m;
  r.val_ = vx + vy;
  r.trunc_ = t;
  r.c_.assign(static_cast<std::size_t>(t - r.val_ + 1), Rational());
  long span = t - r.val_;
  for (std::size_t i = 0; i < x.c_.size(); ++i) {
    if (x.c_[i].is_zero()) continue;
    long imax = std::min<long>(static_cast<long>(y.c_.size()) - 1, span - static_cast<long>(i));
    for (long j = 0; j <= imax; ++j) {
      const Rational& yc = y.c_[static_cast<std::size_t>(j)];
      if (yc.is_zero()) continue;
      r.c_[i + static_cast<std::size_t>(j)] += x.c_[i] * yc;
    }
  }
  r.normalize();
  return r;
}

PuiseuxSeries invert(const PuiseuxSeries& s) {
  if (s.is_zero()) throw std::domain_error("division by zero series");
  long L = s.trunc_ - s.val_;
  const Rational& lead = s.c_[0];
  // s = lead * q^(v/m) * (1 + u); expand (1+u)^(-1) by the usual recurrence.
  std::vector<Rational> b(static_cast<std::size_t>(L) + 1);
  b[0] = Rational(1);
  for (long k = 1; k <= L; ++k) {
    Rational acc;
    for (long j = 1; j <= k; ++j) {
      const Rational& u = s.c_[static_cast<std::size_t>(j)];
      if (u.is_zero() || b[static_cast<std::size_t>(k - j)].is_zero()) continue;
      acc += u * b[static_cast<std::size_t>(k - j)];
    }
    if (!acc.is_zero()) b[static_cast<std::size_t>(k)] = -(acc / lead);
  }
  PuiseuxSeries r;
  r.ram_ = s.ram_;
  r.val_ = -s.val_;
  r.trunc_ = s.trunc_ - 2 * s.val_;
  r.c_.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) r.c_[i] = b[i] / lead;
  r.normalize();
  return r;
}

PuiseuxSeries operator/(const PuiseuxSeries& a, const PuiseuxSeries& b) { return a * invert(b); }

PuiseuxSeries power_int(const PuiseuxSeries& s, long e) {
  if (e < 0) return power_int(invert(s), -e);
  if (e == 0) {
    long rel = s.is_zero() ? std::max<long>(s.truncation_index(), 0)
                           : s.truncation_index() - s.valuation_index();
    return PuiseuxSeries::constant(Rational(1), rel);
  }
  PuiseuxSeries base = s;
  PuiseuxSeries acc;
  bool have = false;
  while (e > 0) {
    if (e & 1) {
      acc = have ? acc * base : base;
      have = true;
    }
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return acc;
}

PuiseuxSeries sqrt(const PuiseuxSeries& s) {
  if (s.is_zero()) return s;
  auto lead_root = exact_sqrt(s.c_[0]);
  if (!lead_root) throw std::domain_error("no rational square root");
  long L = s.trunc_ - s.val_;
  // (1+u)^(1/2) coefficients.
  std::vector<Rational> b(static_cast<std::size_t>(L) + 1);
  b[0] = Rational(1);
  for (long k = 1; k <= L; ++k) {
    Rational acc = s.c_[static_cast<std::size_t>(k)] / s.c_[0];
    for (long i = 1; i < k; ++i) {
      if (b[static_cast<std::size_t>(i)].is_zero() || b[static_cast<std::size_t>(k - i)].is_zero())
        continue;
      acc -= b[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(k - i)];
    }
    if (!acc.is_zero()) b[static_cast<std::size_t>(k)] = acc / Rational(2);
  }
  PuiseuxSeries r;
  bool odd = (s.val_ % 2) != 0;
  if (!odd) {
    r.ram_ = s.ram_;
    r.val_ = s.val_ / 2;
    r.trunc_ = r.val_ + L;
    r.c_.resize(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) r.c_[i] = *lead_root * b[i];
  } else {
    r.ram_ = 2 * s.ram_;
    r.val_ = s.val_;
    r.trunc_ = s.val_ + 2 * L;
    r.c_.assign(static_cast<std::size_t>(2 * L + 1), Rational());
    for (std::size_t i = 0; i < b.size(); ++i) r.c_[2 * i] = *lead_root * b[i];
  }
  r.normalize();
  return r;
}

PuiseuxSeries derive(const PuiseuxSeries& s) {
  PuiseuxSeries r = s;
  for (std::size_t i = 0; i < r.c_.size(); ++i)
    r.c_[i] *= Rational(r.val_ + static_cast<long>(i), r.ram_);
  r.normalize();
  return r;
}

std::optional<std::pair<Rational, Rational>> first_disagreement(const PuiseuxSeries& a,
                                                                const PuiseuxSeries& b) {
  long m = lcm_long(a.ramification(), b.ramification());
  PuiseuxSeries x = rebase(a, m), y = rebase(b, m);
  long t = std::min(x.truncation_index(), y.truncation_index());
  long lo = std::min(x.is_zero() ? t + 1 : x.valuation_index(),
                     y.is_zero() ? t + 1 : y.valuation_index());
  for (long j = lo; j <= t; ++j) {
    Rational d = x.coeff_at(j) - y.coeff_at(j);
    if (!d.is_zero()) return std::make_pair(Rational(j, m), d);
  }
  return std::nullopt;
}

bool agree(const PuiseuxSeries& a, const PuiseuxSeries& b) {
  return !first_disagreement(a, b).has_value();
}

std::optional<std::pair<Rational, Rational>> leading_term(const PuiseuxSeries& s) {
  if (s.is_zero()) return std::nullopt;
  return std::make_pair(s.valuation(), s.coeff_at(s.valuation_index()));
}

std::string to_string(const PuiseuxSeries& s) {
  std::ostringstream os;
  bool first = true;
  for (long j = s.is_zero() ? s.truncation_index() + 1 : s.valuation_index();
       j <= s.truncation_index(); ++j) {
    const Rational& c = s.coeff_at(j);
    if (c.is_zero()) continue;
    if (!first) os << " + ";
    os << c.str() << "*q^(" << Rational(j, s.ramification()).str() << ")";
    first = false;
  }
  if (first) os << "0";
  os << " + O(q^(" << (s.truncation_order() + Rational(1, s.ramification())).str() << "))";
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const PuiseuxSeries& s) { return os << to_string(s); }

}  // namespace modform
