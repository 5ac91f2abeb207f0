#include "arcfan/fangeom.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace arcfan {

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;

std::string fmt(double v, const char* spec = "%.12g") {
  char buf[64];
  std::snprintf(buf, sizeof buf, spec, v);
  return buf;
}
}  // namespace

FanSpec FanSpec::from_exact_angle(int n, DataKind kind, const QuadExt& p,
                                  std::vector<double> values) {
  FanSpec spec;
  spec.n = n;
  spec.kind = kind;
  spec.exact_p = p;
  spec.delta = 2.0 * std::acos(std::clamp(p.to_double(), -1.0, 1.0));
  spec.values = std::move(values);
  spec.validate();
  return spec;
}

FanSpec FanSpec::from_delta(int n, DataKind kind, double delta, std::vector<double> values) {
  FanSpec spec;
  spec.n = n;
  spec.kind = kind;
  spec.delta = delta;
  spec.values = std::move(values);
  spec.validate();
  return spec;
}

double FanSpec::p_double() const {
  return exact_p ? exact_p->to_double() : std::cos(delta / 2.0);
}

void FanSpec::validate() const {
  if (n < 1) throw std::invalid_argument("fan needs n >= 1");
  if (static_cast<int>(values.size()) != n)
    throw std::invalid_argument("fan needs exactly n values");
  for (double v : values)
    if (!(v > 0)) throw std::invalid_argument("fan values must be positive");
  if (!(delta > 0) || delta > 2 * kPi + 1e-12)
    throw std::invalid_argument("delta must lie in (0, 2*pi]");
  if (kind == DataKind::central_distances && n <= 2 && delta >= 2 * kPi - 1e-12)
    throw std::domain_error(
        "degenerate data: a 1-fan with delta = 2*pi is not determined uniquely and a "
        "2-fan with delta = 2*pi does not exist");
}

FanSolution solve_radius(const FanSpec& spec, double tol) {
  spec.validate();
  if (!(tol > 0)) throw std::invalid_argument("tolerance must be positive");

  const double target = spec.delta / 2.0;
  const double vmax = *std::max_element(spec.values.begin(), spec.values.end());
  const bool central = spec.kind == DataKind::central_distances;

  // Central distances: F(u) = sum acos(d_i*u), strictly decreasing on
  // (0, 1/max d). Side lengths: G(u) = sum asin(a_i*u), strictly increasing
  // on (0, 1/max a], u = 1/(2r).
  auto angle_sum = [&](double u) {
    double s = 0;
    for (double v : spec.values) {
      double t = std::clamp(v * u, -1.0, 1.0);
      s += central ? std::acos(t) : std::asin(t);
    }
    return s;
  };

  double lo = 0.0;
  double hi = 1.0 / vmax;
  if (central) {
    if (!(target < spec.n * kPi / 2.0) || !(target > angle_sum(hi)))
      throw std::domain_error("no fan with these parameters exists");
  } else {
    if (!(target <= angle_sum(hi)))
      throw std::domain_error("no fan with these parameters exists");
  }

  double mid = 0.5 * (lo + hi);
  for (int it = 0; it < 200; ++it) {
    mid = 0.5 * (lo + hi);
    double s = angle_sum(mid);
    if (std::abs(s - target) <= tol) break;
    bool go_right = central ? (s > target) : (s < target);
    (go_right ? lo : hi) = mid;
  }
  if (std::abs(angle_sum(mid) - target) > tol)
    throw std::runtime_error("bisection failed to reach the requested tolerance");

  FanSolution sol;
  sol.radius = central ? 1.0 / mid : 1.0 / (2.0 * mid);
  sol.half_angles.reserve(spec.values.size());
  for (double v : spec.values) {
    double t = std::clamp(v * mid, -1.0, 1.0);
    sol.half_angles.push_back(central ? std::acos(t) : std::asin(t));
  }
  sol.vertices = fan_vertices(sol, spec);

  if (auto residual = exact_family_residual(spec, sol); residual && !(*residual < 1e-9))
    throw std::runtime_error("numeric solution fails the exact family polynomial check");
  return sol;
}

std::vector<std::array<double, 2>> fan_vertices(const FanSolution& sol, const FanSpec& spec) {
  std::vector<std::array<double, 2>> pts;
  pts.reserve(sol.half_angles.size() + 1);
  double theta = 0;
  pts.push_back({sol.radius, 0.0});
  for (double a : sol.half_angles) {
    theta += 2.0 * a;
    pts.push_back({sol.radius * std::cos(theta), sol.radius * std::sin(theta)});
  }
  if (std::abs(spec.delta - 2 * kPi) < 1e-9) pts.back() = pts.front();
  return pts;
}

std::optional<double> exact_family_residual(const FanSpec& spec, const FanSolution& sol) {
  const double p = spec.p_double();
  const auto& v = spec.values;
  const double r = sol.radius;

  if (spec.kind == DataKind::side_lengths) {
    if (spec.n != 2) return std::nullopt;
    double a2 = v[1] / v[0];
    double x = v[0] / (2 * r);
    x *= x;
    return std::abs((a2 * a2 + 2 * p * a2 + 1) * x + p * p - 1);
  }

  if (spec.n == 2) {
    double c = v[1] / v[0];
    double u = v[0] / r;
    return std::abs((c * c - 2 * p * c + 1) * u * u + p * p - 1);
  }

  bool all_equal = std::all_of(v.begin(), v.end(), [&](double x) { return x == v[0]; });
  if (all_equal) {
    double t = v[0] / r;  // cos(alpha)
    return std::abs(cos_multiple_angle(spec.n).eval_double(t) - p);
  }

  if (spec.n == 3) {
    double scale = v[2];
    double u = scale / r;
    return std::abs(eliminate_three_fan().eval_double(
        {{'y', v[0] / scale}, {'z', v[1] / scale}, {'w', p}, {'x', u * u}}));
  }

  auto head_equal = [&](int count) {
    for (int i = 0; i < count; ++i)
      if (v[static_cast<size_t>(i)] != v[0]) return false;
    return true;
  };
  if (spec.n % 2 == 0 && spec.n >= 4 && head_equal(spec.n - 1)) {
    int k = spec.n - 1;
    double x = v[0] / r;
    double y = v.back() / v[0];
    return std::abs(build_even_poly_symbolic(k).poly.eval_double({{'x', x}, {'y', y}, {'w', p}}));
  }
  if (spec.n % 2 == 1 && spec.n >= 5 && head_equal(spec.n - 2) &&
      v[static_cast<size_t>(spec.n) - 2] == v.back()) {
    int k = spec.n - 2;
    double x = v[0] / r;
    double c = v.back() / v[0];
    return std::abs(
        build_odd_poly_symbolic(k).poly.eval_double({{'x', x}, {'y', c * c}, {'w', p}}));
  }
  return std::nullopt;
}

std::string render(const FanSolution& sol, const FanSpec& spec, RenderFormat format) {
  if (format == RenderFormat::csv) {
    std::string out = "index,x,y\n";
    for (size_t i = 0; i < sol.vertices.size(); ++i)
      out += std::to_string(i) + "," + fmt(sol.vertices[i][0]) + "," + fmt(sol.vertices[i][1]) +
             "\n";
    return out;
  }

  const double r = sol.radius;
  const double margin = 0.1 * r;
  const double side = 2 * (r + margin);
  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"" +
         fmt(-(r + margin), "%.6f") + " " + fmt(-(r + margin), "%.6f") + " " +
         fmt(side, "%.6f") + " " + fmt(side, "%.6f") + "\">\n";
  svg += "<g transform=\"scale(1,-1)\" stroke-width=\"" + fmt(r / 200, "%.6f") + "\">\n";
  svg += "<circle cx=\"0\" cy=\"0\" r=\"" + fmt(r, "%.6f") +
         "\" fill=\"none\" stroke=\"#bbbbbb\"/>\n";
  svg += "<circle cx=\"0\" cy=\"0\" r=\"" + fmt(r / 100, "%.6f") + "\" fill=\"#000000\"/>\n";
  for (size_t i = 0; i + 1 < sol.vertices.size(); ++i) {
    const auto& a = sol.vertices[i];
    const auto& b = sol.vertices[i + 1];
    svg += "<line x1=\"" + fmt(a[0], "%.6f") + "\" y1=\"" + fmt(a[1], "%.6f") + "\" x2=\"" +
           fmt(b[0], "%.6f") + "\" y2=\"" + fmt(b[1], "%.6f") +
           "\" stroke=\"#003366\"/>\n";
  }
  svg += "</g>\n";
  for (size_t i = 0; i + 1 < sol.vertices.size(); ++i) {
    const auto& a = sol.vertices[i];
    const auto& b = sol.vertices[i + 1];
    double mx = 0.5 * (a[0] + b[0]);
    double my = -0.5 * (a[1] + b[1]);  // flipped frame
    std::string label = (spec.kind == DataKind::central_distances ? "d" : "a") +
                        std::to_string(i + 1);
    svg += "<text x=\"" + fmt(mx, "%.6f") + "\" y=\"" + fmt(my, "%.6f") + "\" font-size=\"" +
           fmt(r / 12, "%.6f") + "\">" + label + "</text>\n";
  }
  svg += "</svg>\n";
  return svg;
}

}  // namespace arcfan
