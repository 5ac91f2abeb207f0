#ifndef ARCFAN_FANGEOM_HPP
#define ARCFAN_FANGEOM_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "arcfan/fanpoly.hpp"

namespace arcfan {

/// Numeric fan description: n positive central distances or side lengths
/// and a central angle delta in (0, 2*pi], kept as a float plus the exact
/// p = cos(delta/2) when the angle was given exactly.
struct FanSpec {
  int n = 0;
  DataKind kind = DataKind::central_distances;
  double delta = 0;
  std::optional<QuadExt> exact_p;
  std::vector<double> values;

  static FanSpec from_exact_angle(int n, DataKind kind, const QuadExt& p,
                                  std::vector<double> values);
  static FanSpec from_delta(int n, DataKind kind, double delta, std::vector<double> values);

  double p_double() const;
  /// Throws std::invalid_argument on malformed data and std::domain_error on
  /// the degenerate 1-/2-fan cases with delta = 2*pi and central distances.
  void validate() const;
};

struct FanSolution {
  double radius = 0;
  std::vector<double> half_angles;                 // alpha_i, sum = delta/2
  std::vector<std::array<double, 2>> vertices;     // A_0..A_n on the circle
};

/// Solves for the radius by bisection on the strictly monotone angle sum;
/// throws std::domain_error when no fan with these parameters exists.
/// Solutions matching one of the exact polynomial families are validated
/// against that polynomial to 1e-9.
FanSolution solve_radius(const FanSpec& spec, double tol = 1e-12);

/// A_0 at angle 0, A_i at cumulative angle 2*(alpha_1+...+alpha_i),
/// counterclockwise around the origin; closes the polygon exactly when
/// delta = 2*pi.
std::vector<std::array<double, 2>> fan_vertices(const FanSolution& sol, const FanSpec& spec);

/// Residual of the matching family polynomial at the numeric solution, when
/// the spec matches a family (2-fan, 3-fan, equal distances, (1,..,1,c),
/// (1,..,1,c,c), side-length 2-fan).
std::optional<double> exact_family_residual(const FanSpec& spec, const FanSolution& sol);

enum class RenderFormat { svg, csv };

std::string render(const FanSolution& sol, const FanSpec& spec, RenderFormat format);

}  // namespace arcfan

#endif
