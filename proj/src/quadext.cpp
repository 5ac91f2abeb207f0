#include "arcfan/quadext.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>

namespace arcfan {

namespace mp = boost::multiprecision;

SquareSplit extract_square_part(const BigInt& n) {
  if (n < 1) throw std::domain_error("square part of a non-positive integer");
  BigInt rest = n;
  BigInt root = 1;
  BigInt free = 1;
  for (BigInt p = 2; p * p <= rest; ++p) {
    if (rest % p != 0) continue;
    unsigned e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    for (unsigned t = 0; t < e / 2; ++t) root *= p;
    if (e & 1) free *= p;
  }
  free *= rest;  // leftover factor is prime, exponent 1
  return {root, free};
}

QuadExt::QuadExt(Rational a, Rational b, BigInt d)
    : a_(std::move(a)), b_(std::move(b)), d_(std::move(d)) {
  if (b_.is_zero()) {
    d_ = 0;
    return;
  }
  if (d_ < 1) throw std::domain_error("radicand must be a positive integer");
  SquareSplit split = extract_square_part(d_);
  b_ *= Rational(split.square_root);
  d_ = split.square_free;
  if (d_ == 1) {
    a_ += b_;
    b_ = Rational(0);
    d_ = 0;
  }
}

int QuadExt::sign() const {
  if (b_.is_zero()) return a_.sign();
  if (a_.is_zero()) return b_.sign();
  int sa = a_.sign();
  int sb = b_.sign();
  if (sa == sb) return sa;
  // Signs differ: compare a^2 against d*b^2 (equality impossible, sqrt(d) irrational).
  return (a_ * a_ > Rational(d_) * b_ * b_) ? sa : sb;
}

QuadExt& QuadExt::operator+=(const QuadExt& r) {
  if (!b_.is_zero() && !r.b_.is_zero() && d_ != r.d_)
    throw std::domain_error("mismatched radicands");
  if (b_.is_zero()) d_ = r.d_;
  a_ += r.a_;
  b_ += r.b_;
  if (b_.is_zero()) d_ = 0;
  return *this;
}

QuadExt& QuadExt::operator-=(const QuadExt& r) { return *this += -r; }

QuadExt& QuadExt::operator*=(const QuadExt& r) {
  if (!b_.is_zero() && !r.b_.is_zero() && d_ != r.d_)
    throw std::domain_error("mismatched radicands");
  BigInt d = b_.is_zero() ? r.d_ : d_;
  Rational na = a_ * r.a_;
  if (!b_.is_zero() && !r.b_.is_zero()) na += Rational(d) * b_ * r.b_;
  Rational nb = a_ * r.b_ + b_ * r.a_;
  a_ = std::move(na);
  b_ = std::move(nb);
  d_ = b_.is_zero() ? BigInt(0) : d;
  return *this;
}

QuadExt QuadExt::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero");
  if (b_.is_zero()) return QuadExt(a_.inverse());
  Rational n = norm();  // nonzero: sqrt(d) is irrational
  return QuadExt(a_ / n, -b_ / n, d_, raw_tag{});
}

QuadExt& QuadExt::operator/=(const QuadExt& r) { return *this *= r.inverse(); }

QuadExt QuadExt::pow(long long e) const {
  if (e < 0) return inverse().pow(-e);
  QuadExt base = *this;
  QuadExt acc(1);
  unsigned long long k = static_cast<unsigned long long>(e);
  while (k) {
    if (k & 1) acc *= base;
    base *= base;
    k >>= 1;
  }
  return acc;
}

namespace {

// Exact rational square root, if one exists.
std::optional<Rational> rational_sqrt(const Rational& r) {
  if (r.sign() < 0) return std::nullopt;
  if (r.is_zero()) return Rational(0);
  BigInt sn = mp::sqrt(r.num());
  BigInt sd = mp::sqrt(r.den());
  if (sn * sn != r.num() || sd * sd != r.den()) return std::nullopt;
  return Rational(sn, sd);
}

}  // namespace

std::optional<QuadExt> QuadExt::sqrt_in(const BigInt& field_d) const {
  if (is_zero()) return QuadExt(0);
  if (sign() < 0) return std::nullopt;
  if (is_rational()) {
    if (auto s = rational_sqrt(a_)) return QuadExt(*s);
    if (field_d >= 2) {
      // beta*sqrt(D) with beta^2 = a/D.
      if (auto beta = rational_sqrt(a_ / Rational(field_d)))
        return QuadExt(Rational(0), *beta, field_d);
    }
    return std::nullopt;
  }
  if (field_d != d_) return std::nullopt;
  // (alpha + beta*sqrt(d))^2 = a + b*sqrt(d): alpha^2 and d*beta^2 are the
  // roots of T^2 - a T + d b^2/4, whose discriminant is the norm.
  auto s = rational_sqrt(norm());
  if (!s) return std::nullopt;
  for (const Rational& t : {(a_ + *s) / Rational(2), (a_ - *s) / Rational(2)}) {
    auto alpha = rational_sqrt(t);
    if (!alpha || alpha->is_zero()) continue;
    Rational beta = b_ / (Rational(2) * *alpha);
    if (*alpha * *alpha + Rational(d_) * beta * beta == a_) {
      QuadExt root(*alpha, beta, d_, raw_tag{});
      return root.sign() > 0 ? root : -root;
    }
  }
  return std::nullopt;
}

const Rational& QuadExt::as_rational() const {
  if (!b_.is_zero()) throw std::domain_error("value is irrational");
  return a_;
}

double QuadExt::to_double() const {
  double v = a_.to_double();
  if (!b_.is_zero()) v += b_.to_double() * std::sqrt(d_.convert_to<double>());
  return v;
}

std::string QuadExt::str() const {
  if (b_.is_zero()) return a_.str();
  std::string rad;
  Rational babs = b_.abs();
  if (babs.is_one())
    rad = "sqrt(" + d_.str() + ")";
  else
    rad = babs.str() + "*sqrt(" + d_.str() + ")";
  if (a_.is_zero()) return (b_.sign() < 0 ? "-" : "") + rad;
  return a_.str() + (b_.sign() < 0 ? "-" : "+") + rad;
}

QuadExt QuadExt::parse(std::string_view text) {
  auto strip = [](std::string_view s) {
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
    return s;
  };
  text = strip(text);
  // Strip one pair of enclosing parentheses.
  while (text.size() >= 2 && text.front() == '(' && text.back() == ')') {
    int depth = 0;
    bool wraps = true;
    for (size_t i = 0; i + 1 < text.size(); ++i) {
      if (text[i] == '(') ++depth;
      if (text[i] == ')') --depth;
      if (depth == 0) {
        wraps = false;
        break;
      }
    }
    if (!wraps) break;
    text = strip(text.substr(1, text.size() - 2));
  }
  if (text.empty()) throw std::invalid_argument("empty scalar literal");

  QuadExt total(0);
  size_t pos = 0;
  int pending_sign = 1;
  if (text[pos] == '+' || text[pos] == '-') {
    pending_sign = text[pos] == '-' ? -1 : 1;
    ++pos;
  }
  while (pos < text.size()) {
    int depth = 0;
    size_t end = pos;
    while (end < text.size()) {
      char c = text[end];
      if (c == '(') ++depth;
      if (c == ')') --depth;
      if (depth == 0 && (c == '+' || c == '-') && end > pos) break;
      ++end;
    }
    std::string_view part = strip(text.substr(pos, end - pos));
    if (part.empty()) throw std::invalid_argument("bad scalar literal");

    auto sq = part.find("sqrt(");
    QuadExt piece;
    if (sq == std::string_view::npos) {
      piece = QuadExt(Rational::parse(part));
    } else {
      Rational coef(1);
      if (sq > 0) {
        std::string_view head = strip(part.substr(0, sq));
        if (head.empty() || head.back() != '*')
          throw std::invalid_argument("expected '*' before sqrt");
        coef = Rational::parse(head.substr(0, head.size() - 1));
      }
      size_t close = part.find(')', sq);
      if (close == std::string_view::npos) throw std::invalid_argument("unterminated sqrt");
      Rational rad = Rational::parse(part.substr(sq + 5, close - sq - 5));
      if (!rad.is_integer() || rad.sign() <= 0)
        throw std::invalid_argument("radicand must be a positive integer");
      std::string_view tail = strip(part.substr(close + 1));
      if (!tail.empty()) {
        if (tail.front() != '/') throw std::invalid_argument("bad radical suffix");
        Rational div = Rational::parse(tail.substr(1));
        coef /= div;
      }
      piece = QuadExt(Rational(0), coef, rad.num());
    }
    if (pending_sign < 0) piece = -piece;
    total += piece;
    if (end < text.size()) {
      pending_sign = text[end] == '-' ? -1 : 1;
      ++end;
    }
    pos = end;
  }
  return total;
}

bool QuadExt::key_less(const QuadExt& x, const QuadExt& y) {
  if (x.d_ != y.d_) return x.d_ < y.d_;
  if (x.a_ != y.a_) return x.a_ < y.a_;
  return x.b_ < y.b_;
}

std::ostream& operator<<(std::ostream& os, const QuadExt& q) { return os << q.str(); }

QuadExt rationalize_radicand(const BigInt& i, const BigInt& j, int m) {
  if (m != 1 && m != 2) throw std::invalid_argument("exponent m must be 1 or 2");
  if (j < 1 || i < 1) throw std::invalid_argument("need 1 <= i and 1 <= j");
  if (i >= mp::pow(j, static_cast<unsigned>(m)))
    throw std::invalid_argument("need i < j^m");
  if (m == 1) return QuadExt(Rational(i, j));
  SquareSplit split = extract_square_part(i);
  if (split.square_free == 1) return QuadExt(Rational(split.square_root, j));
  return QuadExt(Rational(0), Rational(split.square_root, j), split.square_free);
}

}  // namespace arcfan
