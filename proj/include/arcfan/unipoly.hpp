#ifndef ARCFAN_UNIPOLY_HPP
#define ARCFAN_UNIPOLY_HPP

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "arcfan/quadext.hpp"

namespace arcfan {

/// Dense univariate polynomial over Q or Q(sqrt(d)).
/// Invariant: coefficient list is empty (zero polynomial) or ends with a
/// nonzero leading coefficient.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(char var) : var_(var) {}

  static UniPoly from_coeffs(char var, std::vector<QuadExt> coeffs);
  static UniPoly monomial(char var, QuadExt c, unsigned e);
  static UniPoly variable(char var) { return monomial(var, QuadExt(1), 1); }
  static UniPoly constant(QuadExt c, char var = 'x') { return monomial(var, std::move(c), 0); }

  char var() const { return var_; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const QuadExt& coeff(int e) const;
  const QuadExt& leading() const;  // throws std::domain_error on zero polynomial
  const std::vector<QuadExt>& coeffs() const { return coeffs_; }

  UniPoly operator-() const;
  UniPoly& operator+=(const UniPoly& r);
  UniPoly& operator-=(const UniPoly& r);
  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  UniPoly& operator*=(const UniPoly& r) { return *this = *this * r; }
  UniPoly scaled(const QuadExt& c) const;

  friend bool operator==(const UniPoly& a, const UniPoly& b);
  friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

  UniPoly derivative() const;
  QuadExt eval(const QuadExt& x) const;
  double eval_double(double x) const;

  std::string str() const;

 private:
  char var_ = 'x';
  std::vector<QuadExt> coeffs_;
  void trim();
  char merge_var(const UniPoly& other) const;  // throws on incompatible variables
};

std::ostream& operator<<(std::ostream& os, const UniPoly& p);

/// Quotient and remainder over the coefficient field.
std::pair<UniPoly, UniPoly> divmod_field(const UniPoly& a, const UniPoly& b);

/// Monic gcd over the coefficient field (Euclid).
UniPoly gcd_field(UniPoly a, UniPoly b);

bool is_rational_poly(const UniPoly& p);

struct PolySquareRoot {
  bool is_square = false;
  UniPoly witness;  // H with H^2 = P when is_square
};

/// Decides whether P is the square of a polynomial over its own coefficient
/// field (Q, or Q(sqrt(d)) when irrational coefficients occur).
PolySquareRoot poly_square_root(const UniPoly& p);

namespace detail {
// Appends one formatted polynomial term (sign, coefficient, monomial).
void append_term(std::string& out, const QuadExt& c, const std::string& mono);
}  // namespace detail

}  // namespace arcfan

#endif
