#include "sumset/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace sumset {

namespace {

void require_nonzero_den(const mpz_class& den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
}

}  // namespace

Rational::Rational(long num, long den) : Rational(mpz_class(num), mpz_class(den)) {}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  require_nonzero_den(den);
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational::Rational(const mpq_class& q) : q_(q) {
  require_nonzero_den(q_.get_den());
  q_.canonicalize();
}

Rational Rational::parse(const std::string& text) {
  const auto bad = [&text]() {
    return std::invalid_argument("bad rational literal: \"" + text + "\"");
  };
  const auto digits_ok = [](const std::string& s, std::size_t from) {
    if (from >= s.size()) return false;
    for (std::size_t i = from; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
  };

  const std::size_t slash = text.find('/');
  std::string num_part = text.substr(0, slash);
  std::string den_part = slash == std::string::npos ? "" : text.substr(slash + 1);
  if (den_part.find('/') != std::string::npos) throw bad();

  std::size_t num_from = (!num_part.empty() && (num_part[0] == '-' || num_part[0] == '+')) ? 1 : 0;
  if (!digits_ok(num_part, num_from)) throw bad();

  if (num_part[0] == '+') num_part.erase(0, 1);
  mpz_class num(num_part, 10);
  mpz_class den(1);
  if (slash != std::string::npos) {
    if (!digits_ok(den_part, 0)) throw bad();
    den = mpz_class(den_part, 10);
    if (den == 0) throw std::invalid_argument("bad rational literal (zero denominator): \"" + text + "\"");
  }
  return Rational(num, den);
}

mpz_class Rational::floor() const {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), q_.get_num().get_mpz_t(), q_.get_den().get_mpz_t());
  return q;
}

std::string Rational::decimal(int digits) const {
  if (digits < 0) throw std::invalid_argument("decimal(): digits must be >= 0");
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  // round(|num| * scale / den), half away from zero
  mpz_class an(q_.get_num());
  if (an < 0) an = -an;
  mpz_class r = (2 * an * scale + q_.get_den()) / (2 * q_.get_den());
  std::string body = r.get_str();
  if (digits > 0) {
    if (body.size() <= static_cast<std::size_t>(digits))
      body.insert(0, static_cast<std::size_t>(digits) + 1 - body.size(), '0');
    body.insert(body.size() - static_cast<std::size_t>(digits), ".");
  }
  if (sign() < 0 && r != 0) body.insert(0, "-");
  return body;
}

Rational Rational::operator-() const { return Rational(mpq_class(-q_), AlreadyCanonical{}); }

Rational& Rational::operator+=(const Rational& o) { q_ += o.q_; return *this; }
Rational& Rational::operator-=(const Rational& o) { q_ -= o.q_; return *this; }
Rational& Rational::operator*=(const Rational& o) { q_ *= o.q_; return *this; }
Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("rational division by zero");
  q_ /= o.q_;
  return *this;
}

Rational operator+(const Rational& a, const Rational& b) {
  return Rational(mpq_class(a.q_ + b.q_), Rational::AlreadyCanonical{});
}
Rational operator-(const Rational& a, const Rational& b) {
  return Rational(mpq_class(a.q_ - b.q_), Rational::AlreadyCanonical{});
}
Rational operator*(const Rational& a, const Rational& b) {
  return Rational(mpq_class(a.q_ * b.q_), Rational::AlreadyCanonical{});
}
Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw std::domain_error("rational division by zero");
  return Rational(mpq_class(a.q_ / b.q_), Rational::AlreadyCanonical{});
}

Rational abs(const Rational& x) { return x.sign() < 0 ? -x : x; }
Rational min(const Rational& a, const Rational& b) { return b < a ? b : a; }
Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

Rational pow_int(const Rational& base, long exp) {
  if (exp < 0) {
    if (base.is_zero()) throw std::domain_error("pow_int: zero base with negative exponent");
    return pow_int(Rational(1) / base, -exp);
  }
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), base.num().get_mpz_t(), static_cast<unsigned long>(exp));
  mpz_pow_ui(d.get_mpz_t(), base.den().get_mpz_t(), static_cast<unsigned long>(exp));
  return Rational(n, d);  // already coprime, ctor just re-canonicalizes cheaply
}

std::ostream& operator<<(std::ostream& os, const Rational& x) { return os << x.str(); }

}  // namespace sumset
