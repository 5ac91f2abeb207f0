#ifndef ARCFAN_MULTIPOLY_HPP
#define ARCFAN_MULTIPOLY_HPP

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "arcfan/unipoly.hpp"

namespace arcfan {

/// Display / tie-break precedence of variable symbols. The families built
/// here follow the order (y, z, w, x, u); anything else ranks after.
int var_rank(char v);

/// Exponent list of one monomial: (variable, exponent) pairs sorted by
/// var_rank, exponents > 0.
using Monomial = std::vector<std::pair<char, unsigned>>;

unsigned monomial_total_degree(const Monomial& m);

/// Strict order "a before b" = graded lexicographic, descending; map
/// iteration therefore yields the canonical display order.
struct MonomialOrder {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Sparse multivariate polynomial over Q or Q(sqrt(d)) in named variables.
/// No zero coefficients are stored; term order is canonical graded-lex, so
/// serialization is deterministic.
class MultiPoly {
 public:
  using TermMap = std::map<Monomial, QuadExt, MonomialOrder>;

  MultiPoly() = default;

  static MultiPoly constant(QuadExt c);
  static MultiPoly variable(char v);
  static MultiPoly monomial(Monomial m, QuadExt c);
  static MultiPoly from_unipoly(const UniPoly& p);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Value of a constant polynomial (zero for the empty one).
  QuadExt constant_value() const;
  size_t num_terms() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }
  QuadExt coeff(const Monomial& m) const;

  int degree_in(char v) const;     // -1 on the zero polynomial
  int total_degree() const;        // -1 on the zero polynomial
  std::vector<char> variables() const;

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& r);
  MultiPoly& operator-=(const MultiPoly& r);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  MultiPoly& operator*=(const MultiPoly& r) { return *this = *this * r; }
  MultiPoly scaled(const QuadExt& c) const;
  MultiPoly pow(unsigned e) const;

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

  /// Coefficients grouped by the exponent of v; values are free of v.
  std::map<unsigned, MultiPoly> coefficients_in(char v) const;

  /// Scalar bindings for a subset of the variables.
  MultiPoly substitute(const std::map<char, QuadExt>& bindings) const;
  /// Replaces v by an arbitrary polynomial.
  MultiPoly substitute(char v, const MultiPoly& replacement) const;
  /// Replaces v^2 by `replacement`; every exponent of v must be even.
  MultiPoly substitute_square(char v, const MultiPoly& replacement) const;

  double eval_double(const std::map<char, double>& values) const;

  /// Conversion to a univariate polynomial; requires at most one variable.
  UniPoly to_unipoly(char fallback_var = 'x') const;

  std::string str() const;
  static MultiPoly parse(std::string_view text);
  nlohmann::ordered_json to_json() const;
  static MultiPoly from_json(const nlohmann::json& j);

  void add_term(Monomial m, QuadExt c);

 private:
  TermMap terms_;
};

std::ostream& operator<<(std::ostream& os, const MultiPoly& p);

/// Exact quotient P / D, or nothing when D does not divide P.
std::optional<MultiPoly> try_divide_exact(const MultiPoly& p, const MultiPoly& d);

/// Polynomial gcd over the rationals, canonicalized to integer-primitive
/// form with a positive leading (graded-lex) coefficient.
MultiPoly multipoly_gcd(const MultiPoly& a, const MultiPoly& b);

/// Splits nonzero P as content * primitive with respect to main_var: the
/// content is free of main_var and carries any common polynomial factor of
/// the main_var coefficients (plus the integer gcd and sign when all
/// coefficients are integral); the primitive part has unit content.
std::pair<MultiPoly, MultiPoly> content_and_primitive(const MultiPoly& p, char main_var);

/// b^2 - 4ac of a polynomial that is quadratic in v.
MultiPoly quadratic_discriminant(const MultiPoly& p, char v);

}  // namespace arcfan

#endif
