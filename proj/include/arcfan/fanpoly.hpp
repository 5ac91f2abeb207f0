#ifndef ARCFAN_FANPOLY_HPP
#define ARCFAN_FANPOLY_HPP

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "arcfan/irreducibility.hpp"
#include "arcfan/multipoly.hpp"

namespace arcfan {

/// Degree-k integer polynomial G_k with cos(k*t) = G_k(cos t); leading
/// coefficient 2^(k-1). Variable u.
UniPoly cos_multiple_angle(int k);

enum class Parity { even_case, odd_case };

/// One member of the two quadratic-in-y families attached to a fan whose
/// central distances are (1,...,1,c) or (1,...,1,c,c):
///   even: x^2*y^2 - 2p*x*G_k(x)*y + (G_k(x)^2 + p^2 - 1),    y = c
///   odd:  4x^4*y^2 - (4p*x^2*G_k(x) + 4x^2)*y + (p + G_k(x))^2,  y = c^2
/// with x standing for u = 1/r. Symbolic builds keep p as the variable w.
struct FanAnglePoly {
  int k = 0;
  Parity parity = Parity::even_case;
  std::optional<QuadExt> p;  // empty for the symbolic build
  MultiPoly poly;
};

FanAnglePoly build_even_poly(int k, const QuadExt& p);
FanAnglePoly build_even_poly_symbolic(int k);
FanAnglePoly build_odd_poly(int k, const QuadExt& p);
FanAnglePoly build_odd_poly_symbolic(int k);

/// 2-fan from central distances (1, c): u^2 = (1-p^2)/(c^2 - 2pc + 1),
/// u = 1/r. Requires p in (-1,1) and c > 0.
QuadExt two_fan_u_squared(const QuadExt& p, const QuadExt& c);

/// 2-fan from side lengths (1, a2): u^2 = (1-p^2)/(a2^2 + 2p*a2 + 1),
/// u = 1/(2r). Requires p in (-1,1) and a2 > 0.
QuadExt side_length_two_fan(const QuadExt& p, const QuadExt& a2);

/// The sextic-in-x elimination polynomial h(y,z,w,x) of the 3-fan with
/// central distances (y, z, 1) and w = cos(delta/2); x stands for u^2,
/// u = 1/r. Computed once and cached.
const MultiPoly& eliminate_three_fan();

/// True when every term of h carries an even power of v.
bool poly_even_in(const MultiPoly& p, char v);

enum class DataKind { central_distances, side_lengths };

/// Exact fan description for certification. A missing value is treated as a
/// general (indeterminate) parameter.
struct ExactFan {
  int n = 0;
  QuadExt p;  // cos(delta/2) in [-1, 1)
  DataKind kind = DataKind::central_distances;
  std::vector<std::optional<QuadExt>> values;
};

enum class CertVerdict { nonconstructible, constructible_with_construction, undecided };

std::string to_string(CertVerdict v);

struct Certificate {
  ExactFan fan;
  std::string witness_poly;
  std::string root_description;
  int degree = 0;
  IrreducibilityEvidence evidence;
  CertVerdict verdict = CertVerdict::undecided;
  std::string explanation;

  nlohmann::ordered_json to_json() const;
};

/// Builds a constructibility certificate for the supported fan patterns:
/// 1-fans and 2-fans (explicit linear/quadratic towers), equal-distance
/// fans, (1,...,1,c) with n even, (1,...,1,c,c) with n odd, and 3-fans
/// (d1,d2,1) with concrete or general distances. Anything else comes back
/// undecided with an explanation.
Certificate certify_nonconstructible(const ExactFan& fan);

}  // namespace arcfan

#endif
