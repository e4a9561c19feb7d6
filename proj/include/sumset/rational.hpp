#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>

namespace sumset {

// Exact rational scalar, a thin checked wrapper over GMP's mpq_class.
// Values are always kept canonical (lowest terms, positive denominator);
// the undefined corners of raw mpq (zero denominators, division by zero)
// throw instead.
class Rational {
 public:
  Rational() : q_(0) {}
  Rational(int n) : q_(n) {}  // implicit by design: lets integer literals flow
  Rational(long n) : q_(static_cast<signed long>(n)) {}
  Rational(long num, long den);
  explicit Rational(const mpz_class& n) : q_(n) {}
  Rational(const mpz_class& num, const mpz_class& den);
  explicit Rational(const mpq_class& q);

  // Parses "p", "-p" or "p/q" (decimal digits, optional leading sign on the
  // numerator). Anything else — whitespace, empty parts, a zero denominator —
  // is rejected with std::invalid_argument.
  static Rational parse(const std::string& text);

  mpz_class num() const { return q_.get_num(); }
  mpz_class den() const { return q_.get_den(); }

  int sign() const { return sgn(q_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return q_.get_den() == 1; }

  // Largest integer <= value.
  mpz_class floor() const;

  // "p/q" in lowest terms, or just "p" for integers.
  std::string str() const { return q_.get_str(); }
  // Fixed-point decimal rendering with `digits` fractional digits
  // (round half away from zero). Display only; never used in computations.
  std::string decimal(int digits) const;
  double to_double() const { return q_.get_d(); }

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

 private:
  struct AlreadyCanonical {};
  Rational(mpq_class q, AlreadyCanonical) : q_(std::move(q)) {}

  mpq_class q_;
};

Rational abs(const Rational& x);
Rational min(const Rational& a, const Rational& b);
Rational max(const Rational& a, const Rational& b);

// base^exp with integer exp; negative exp requires a nonzero base.
Rational pow_int(const Rational& base, long exp);

std::ostream& operator<<(std::ostream& os, const Rational& x);

}  // namespace sumset
