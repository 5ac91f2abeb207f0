#ifndef ARCFAN_IRREDUCIBILITY_HPP
#define ARCFAN_IRREDUCIBILITY_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include <json.hpp>

#include "arcfan/multipoly.hpp"

namespace arcfan {

enum class Verdict { irreducible, reducible, inconclusive };

enum class Method {
  rational_root,
  mod_p_witness,
  full_factorization,
  discriminant_nonsquare,
  specialization,
};

std::string to_string(Verdict v);
std::string to_string(Method m);

/// Verdict plus the data needed to re-check it. For reducible verdicts,
/// constant * product(factors) reproduces the input exactly.
struct IrreducibilityEvidence {
  Verdict verdict = Verdict::inconclusive;
  Method method = Method::full_factorization;
  /// Coefficient ring the verdict refers to, e.g. "Q[x]" or "Z[y,z,x]".
  std::string field;
  std::uint64_t witness_prime = 0;
  QuadExt constant = QuadExt(1);
  std::vector<UniPoly> factors;
  MultiPoly discriminant;
  std::map<char, Rational> point;  // specialization route
  std::shared_ptr<IrreducibilityEvidence> sub;
  std::string note;

  nlohmann::ordered_json to_json() const;
};

/// Decisive irreducibility over Q for a rational-coefficient polynomial of
/// degree >= 1: rational-root filter, mod-p filter, then full factorization.
IrreducibilityEvidence univariate_irreducible_over_Q(const UniPoly& p);

/// Irreducibility over Q(sqrt(field_d)). Genuinely irrational inputs are
/// decided through the norm polynomial; rational inputs are decided where a
/// degree/discriminant argument settles the extension, else inconclusive.
IrreducibilityEvidence univariate_irreducible_quadext(const UniPoly& p, const BigInt& field_d);

/// Lemma-style one-directional criterion for a primitive quadratic in v:
/// a non-square discriminant certifies irreducibility; a square discriminant
/// is inconclusive. Throws on non-primitive input.
IrreducibilityEvidence quadratic_irreducible_by_discriminant(const MultiPoly& p, char v);

/// Degree-preserving irreducible specialization of a primitive multivariate
/// polynomial; irreducible only when both checks pass, else inconclusive.
IrreducibilityEvidence multivariate_irreducible_by_specialization(
    const MultiPoly& p, char main_var, const std::map<char, Rational>& point);

/// Fallback order for specialization points (y, z).
const std::vector<std::pair<int, int>>& specialization_fallback_points();

/// Runs multivariate_irreducible_by_specialization through the fallback
/// points until decisive; returns the last evidence when all are exhausted.
IrreducibilityEvidence specialize_with_fallback(const MultiPoly& p, char main_var);

/// Degree criterion: an irreducible witness polynomial whose degree is not a
/// power of two certifies non-constructibility of its root. A power-of-two
/// degree leaves the criterion inapplicable (never "constructible").
struct DegreeVerdict {
  int degree = 0;
  bool power_of_two = false;
  bool nonconstructible = false;
  std::string context;
  std::string text;  // "nonconstructible" or "criterion inapplicable"
};
DegreeVerdict power_of_two_verdict(int degree, const IrreducibilityEvidence& evidence,
                                   std::string context);
DegreeVerdict power_of_two_verdict(const UniPoly& p, const IrreducibilityEvidence& evidence,
                                   std::string context);

}  // namespace arcfan

#endif
