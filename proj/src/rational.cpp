#include "arcfan/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace arcfan {

namespace mp = boost::multiprecision;

Rational::Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) {
  if (den_ == 0) throw std::domain_error("rational with zero denominator");
  normalize();
}

void Rational::normalize() {
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  if (num_ == 0) {
    den_ = 1;
    return;
  }
  BigInt g = mp::gcd(mp::abs(num_), den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
}

Rational Rational::operator-() const {
  Rational r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

Rational& Rational::operator+=(const Rational& r) {
  num_ = num_ * r.den_ + r.num_ * den_;
  den_ *= r.den_;
  normalize();
  return *this;
}

Rational& Rational::operator-=(const Rational& r) {
  num_ = num_ * r.den_ - r.num_ * den_;
  den_ *= r.den_;
  normalize();
  return *this;
}

Rational& Rational::operator*=(const Rational& r) {
  num_ *= r.num_;
  den_ *= r.den_;
  normalize();
  return *this;
}

Rational& Rational::operator/=(const Rational& r) {
  if (r.num_ == 0) throw std::domain_error("rational division by zero");
  num_ *= r.den_;
  den_ *= r.num_;
  normalize();
  return *this;
}

Rational Rational::inverse() const {
  if (num_ == 0) throw std::domain_error("rational division by zero");
  return Rational(den_, num_);
}

Rational Rational::pow(long long e) const {
  if (e < 0) return inverse().pow(-e);
  Rational base = *this;
  Rational acc(1);
  unsigned long long k = static_cast<unsigned long long>(e);
  while (k) {
    if (k & 1) acc *= base;
    base *= base;
    k >>= 1;
  }
  return acc;
}

double Rational::to_double() const {
  return num_.convert_to<double>() / den_.convert_to<double>();
}

std::string Rational::str() const {
  if (den_ == 1) return num_.str();
  return num_.str() + "/" + den_.str();
}

Rational Rational::parse(std::string_view text) {
  auto strip = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
  };
  auto parse_int = [&strip](std::string_view s) -> BigInt {
    s = strip(s);
    bool neg = false;
    if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
      neg = s.front() == '-';
      s.remove_prefix(1);
    }
    if (s.empty()) throw std::invalid_argument("empty integer literal");
    for (char c : s)
      if (c < '0' || c > '9') throw std::invalid_argument("bad integer literal");
    BigInt v{std::string(s)};
    return neg ? BigInt(-v) : v;
  };

  text = strip(text);
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  BigInt n = parse_int(text.substr(0, slash));
  BigInt d = parse_int(text.substr(slash + 1));
  if (d == 0) throw std::invalid_argument("rational literal with zero denominator");
  return Rational(std::move(n), std::move(d));
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

// gcd(a/b, c/d) = gcd(a,c)/lcm(b,d); handy for polynomial content.
Rational rational_gcd(const Rational& a, const Rational& b) {
  if (a.is_zero()) return b.abs();
  if (b.is_zero()) return a.abs();
  BigInt n = mp::gcd(mp::abs(a.num()), mp::abs(b.num()));
  BigInt l = a.den() / mp::gcd(a.den(), b.den()) * b.den();
  return Rational(std::move(n), std::move(l));
}

}  // namespace arcfan
