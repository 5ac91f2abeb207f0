#ifndef ARCFAN_INTFACTOR_HPP
#define ARCFAN_INTFACTOR_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "arcfan/unipoly.hpp"

namespace arcfan {

/// Dense integer polynomial: index i holds the coefficient of x^i.
/// Empty vector = zero; otherwise the last entry is nonzero.
using ZPoly = std::vector<BigInt>;

int zz_degree(const ZPoly& f);
void zz_trim(ZPoly& f);
ZPoly zz_mul(const ZPoly& a, const ZPoly& b);
BigInt zz_eval(const ZPoly& f, const BigInt& x);
ZPoly zz_derivative(const ZPoly& f);
BigInt zz_content(const ZPoly& f);  // >= 0; 0 only for the zero polynomial
/// Content and sign removed: positive leading coefficient.
ZPoly zz_primitive(ZPoly f);
/// Exact quotient over Z, or nothing.
std::optional<ZPoly> zz_divide_exact(const ZPoly& a, const ZPoly& b);

/// Denominator-cleared form: p == constant * prim with prim primitive over Z
/// and a positive leading coefficient. Requires rational coefficients.
struct IntegerForm {
  Rational constant;
  ZPoly prim;
};
IntegerForm make_integer_primitive(const UniPoly& p);
UniPoly zz_to_unipoly(const ZPoly& f, char var);

/// True when deg(f mod p) == deg(f) and the reduction is irreducible over F_p.
/// A sufficient irreducibility condition for primitive f over Q.
bool irreducible_mod_p(const ZPoly& f, std::uint64_t p);

/// First `count` primes that do not divide `avoid`.
std::vector<std::uint64_t> primes_avoiding(const BigInt& avoid, size_t count);

/// Irreducible factorization of a primitive polynomial with positive leading
/// coefficient, deg >= 1. The product of poly^multiplicity over all entries
/// reproduces the input exactly; factors are primitive with positive leading
/// coefficients, sorted for determinism.
struct ZZFactor {
  ZPoly poly;
  int multiplicity;
};
std::vector<ZZFactor> factor_primitive_zz(const ZPoly& f);

}  // namespace arcfan

#endif
