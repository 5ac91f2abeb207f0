#ifndef ARCFAN_QUADEXT_HPP
#define ARCFAN_QUADEXT_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "arcfan/rational.hpp"

namespace arcfan {

/// Element a + b*sqrt(d) of a real quadratic extension of the rationals.
/// Canonical form: d is square-free and >= 2 whenever b != 0; purely rational
/// values carry d = 0, b = 0. Square parts of the radicand are extracted at
/// construction, so equal values have equal representations.
///
/// Arithmetic between two irrational values is only defined inside one
/// extension; mismatched radicands throw std::domain_error.
class QuadExt {
 public:
  QuadExt() = default;
  QuadExt(int n) : a_(n) {}
  QuadExt(long long n) : a_(n) {}
  QuadExt(Rational r) : a_(std::move(r)) {}
  QuadExt(Rational a, Rational b, BigInt d);

  const Rational& rational_part() const { return a_; }
  const Rational& radical_part() const { return b_; }
  const BigInt& radicand() const { return d_; }

  bool is_rational() const { return b_.is_zero(); }
  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
  bool is_one() const { return a_.is_one() && b_.is_zero(); }

  /// Exact sign of the real value a + b*sqrt(d).
  int sign() const;

  QuadExt conj() const { return QuadExt(a_, -b_, d_, raw_tag{}); }
  Rational norm() const { return a_ * a_ - Rational(d_) * b_ * b_; }

  QuadExt operator-() const { return QuadExt(-a_, -b_, d_, raw_tag{}); }
  QuadExt& operator+=(const QuadExt& r);
  QuadExt& operator-=(const QuadExt& r);
  QuadExt& operator*=(const QuadExt& r);
  QuadExt& operator/=(const QuadExt& r);

  friend QuadExt operator+(QuadExt a, const QuadExt& b) { return a += b; }
  friend QuadExt operator-(QuadExt a, const QuadExt& b) { return a -= b; }
  friend QuadExt operator*(QuadExt a, const QuadExt& b) { return a *= b; }
  friend QuadExt operator/(QuadExt a, const QuadExt& b) { return a /= b; }

  friend bool operator==(const QuadExt& x, const QuadExt& y) {
    return x.a_ == y.a_ && x.b_ == y.b_ && x.d_ == y.d_;
  }
  friend bool operator!=(const QuadExt& x, const QuadExt& y) { return !(x == y); }
  // Value order; defined within one extension (or against rationals).
  friend bool operator<(const QuadExt& x, const QuadExt& y) { return (x - y).sign() < 0; }
  friend bool operator>(const QuadExt& x, const QuadExt& y) { return y < x; }
  friend bool operator<=(const QuadExt& x, const QuadExt& y) { return !(y < x); }
  friend bool operator>=(const QuadExt& x, const QuadExt& y) { return !(x < y); }

  QuadExt inverse() const;  // throws std::domain_error on 0
  QuadExt pow(long long e) const;
  QuadExt abs() const { return sign() < 0 ? -*this : *this; }

  /// Exact square root inside Q(sqrt(field_d)), if one exists there.
  /// field_d = 0 restricts the root to the rationals.
  std::optional<QuadExt> sqrt_in(const BigInt& field_d) const;

  /// Rational value accessor; throws std::domain_error when irrational.
  const Rational& as_rational() const;

  double to_double() const;

  /// "a/b", "c/e*sqrt(d)" or "a/b+c/e*sqrt(d)" (minus signs folded in).
  std::string str() const;
  static QuadExt parse(std::string_view text);

  /// Componentwise key order (d, a, b); a total order usable for sets,
  /// unrelated to the value order.
  static bool key_less(const QuadExt& x, const QuadExt& y);

 private:
  struct raw_tag {};
  QuadExt(Rational a, Rational b, BigInt d, raw_tag)
      : a_(std::move(a)), b_(std::move(b)), d_(std::move(d)) {}

  Rational a_;
  Rational b_;
  BigInt d_ = 0;
};

std::ostream& operator<<(std::ostream& os, const QuadExt& q);

/// Splits n >= 1 into s^2 * m with m square-free (trial division).
struct SquareSplit {
  BigInt square_root;  // s
  BigInt square_free;  // m
};
SquareSplit extract_square_part(const BigInt& n);

/// Builds i^(1/m) / j exactly for m in {1,2}; requires 1 <= i < j^m.
/// Returns a rational value whenever the radical collapses.
QuadExt rationalize_radicand(const BigInt& i, const BigInt& j, int m);

}  // namespace arcfan

#endif
