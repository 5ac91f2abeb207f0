#ifndef ARCFAN_RATIONAL_HPP
#define ARCFAN_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <iosfwd>
#include <string>
#include <string_view>

namespace arcfan {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational number in canonical form: denominator > 0 and
/// gcd(|numerator|, denominator) = 1, enforced at construction.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(int n) : num_(n), den_(1) {}
  Rational(long long n) : num_(n), den_(1) {}
  Rational(BigInt n) : num_(std::move(n)), den_(1) {}
  Rational(BigInt n, BigInt d);  // throws std::domain_error if d == 0

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_one() const { return num_ == 1 && den_ == 1; }
  bool is_integer() const { return den_ == 1; }
  int sign() const { return num_ == 0 ? 0 : (num_ > 0 ? 1 : -1); }

  Rational operator-() const;
  Rational& operator+=(const Rational& r);
  Rational& operator-=(const Rational& r);
  Rational& operator*=(const Rational& r);
  Rational& operator/=(const Rational& r);  // throws std::domain_error on r == 0

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    return a.num_ * b.den_ < b.num_ * a.den_;
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  Rational inverse() const;        // throws std::domain_error on 0
  Rational pow(long long e) const; // negative e requires a nonzero value
  Rational abs() const { return num_ >= 0 ? *this : -*this; }

  double to_double() const;

  /// "a" for integers, "a/b" otherwise.
  std::string str() const;
  /// Parses "a" or "a/b" with optional leading sign; throws std::invalid_argument.
  static Rational parse(std::string_view text);

 private:
  BigInt num_;
  BigInt den_;
  void normalize();
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

Rational rational_gcd(const Rational& a, const Rational& b);

}  // namespace arcfan

#endif
