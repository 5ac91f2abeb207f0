#include "arcfan/unipoly.hpp"

#include <ostream>
#include <stdexcept>

namespace arcfan {

namespace {
const QuadExt kZero(0);
}  // namespace

namespace detail {

// `mono` is the monomial part ("x^2", "y*z", ...) or empty for the constant term.
void append_term(std::string& out, const QuadExt& c, const std::string& mono) {
  bool first = out.empty();
  QuadExt mag = c;
  if (c.sign() < 0) {
    out += first ? "-" : " - ";
    mag = -c;
  } else if (!first) {
    out += " + ";
  }
  std::string cs = mag.str();
  bool composite = !mag.is_rational() && !mag.rational_part().is_zero();
  if (composite) cs = "(" + cs + ")";
  if (mono.empty()) {
    out += cs;
  } else if (mag.is_one()) {
    out += mono;
  } else {
    out += cs + "*" + mono;
  }
}

}  // namespace detail

UniPoly UniPoly::from_coeffs(char var, std::vector<QuadExt> coeffs) {
  UniPoly p(var);
  p.coeffs_ = std::move(coeffs);
  p.trim();
  return p;
}

UniPoly UniPoly::monomial(char var, QuadExt c, unsigned e) {
  UniPoly p(var);
  if (!c.is_zero()) {
    p.coeffs_.assign(e + 1, QuadExt(0));
    p.coeffs_[e] = std::move(c);
  }
  return p;
}

const QuadExt& UniPoly::coeff(int e) const {
  if (e < 0 || e >= static_cast<int>(coeffs_.size())) return kZero;
  return coeffs_[static_cast<size_t>(e)];
}

const QuadExt& UniPoly::leading() const {
  if (coeffs_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
  return coeffs_.back();
}

void UniPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

char UniPoly::merge_var(const UniPoly& other) const {
  if (var_ == other.var_) return var_;
  if (is_constant()) return other.var_;
  if (other.is_constant()) return var_;
  throw std::invalid_argument("univariate operands in different variables");
}

UniPoly UniPoly::operator-() const {
  UniPoly r(var_);
  r.coeffs_.reserve(coeffs_.size());
  for (const auto& c : coeffs_) r.coeffs_.push_back(-c);
  return r;
}

UniPoly& UniPoly::operator+=(const UniPoly& r) {
  var_ = merge_var(r);
  if (coeffs_.size() < r.coeffs_.size()) coeffs_.resize(r.coeffs_.size(), QuadExt(0));
  for (size_t i = 0; i < r.coeffs_.size(); ++i) coeffs_[i] += r.coeffs_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& r) {
  var_ = merge_var(r);
  if (coeffs_.size() < r.coeffs_.size()) coeffs_.resize(r.coeffs_.size(), QuadExt(0));
  for (size_t i = 0; i < r.coeffs_.size(); ++i) coeffs_[i] -= r.coeffs_[i];
  trim();
  return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  char var = a.merge_var(b);
  if (a.is_zero() || b.is_zero()) return UniPoly(var);
  std::vector<QuadExt> out(a.coeffs_.size() + b.coeffs_.size() - 1, QuadExt(0));
  for (size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (size_t j = 0; j < b.coeffs_.size(); ++j) {
      if (b.coeffs_[j].is_zero()) continue;
      out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return UniPoly::from_coeffs(var, std::move(out));
}

UniPoly UniPoly::scaled(const QuadExt& c) const {
  if (c.is_zero()) return UniPoly(var_);
  UniPoly r(var_);
  r.coeffs_.reserve(coeffs_.size());
  for (const auto& x : coeffs_) r.coeffs_.push_back(x * c);
  r.trim();
  return r;
}

bool operator==(const UniPoly& a, const UniPoly& b) {
  if (a.coeffs_ != b.coeffs_) return false;
  // Constants compare equal across variables.
  return a.is_constant() || b.is_constant() || a.var_ == b.var_;
}

UniPoly UniPoly::derivative() const {
  UniPoly r(var_);
  for (size_t i = 1; i < coeffs_.size(); ++i)
    r.coeffs_.push_back(coeffs_[i] * QuadExt(static_cast<long long>(i)));
  r.trim();
  return r;
}

QuadExt UniPoly::eval(const QuadExt& x) const {
  QuadExt acc(0);
  for (size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
  return acc;
}

double UniPoly::eval_double(double x) const {
  double acc = 0;
  for (size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i].to_double();
  return acc;
}

std::string UniPoly::str() const {
  if (is_zero()) return "0";
  std::string out;
  for (size_t i = coeffs_.size(); i-- > 0;) {
    if (coeffs_[i].is_zero()) continue;
    std::string mono;
    if (i == 1)
      mono = std::string(1, var_);
    else if (i > 1)
      mono = std::string(1, var_) + "^" + std::to_string(i);
    detail::append_term(out, coeffs_[i], mono);
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const UniPoly& p) { return os << p.str(); }

std::pair<UniPoly, UniPoly> divmod_field(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  UniPoly q(b.is_constant() ? a.var() : b.var());
  UniPoly r = a;
  QuadExt lead_inv = b.leading().inverse();
  while (!r.is_zero() && r.degree() >= b.degree()) {
    unsigned shift = static_cast<unsigned>(r.degree() - b.degree());
    QuadExt c = r.leading() * lead_inv;
    UniPoly t = UniPoly::monomial(q.var(), c, shift);
    q += t;
    r -= t * b;
  }
  return {q, r};
}

UniPoly gcd_field(UniPoly a, UniPoly b) {
  while (!b.is_zero()) {
    UniPoly r = divmod_field(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return a.scaled(a.leading().inverse());  // monic
}

bool is_rational_poly(const UniPoly& p) {
  for (const auto& c : p.coeffs())
    if (!c.is_rational()) return false;
  return true;
}

PolySquareRoot poly_square_root(const UniPoly& p) {
  if (p.is_zero()) return {true, UniPoly(p.var())};
  int deg = p.degree();
  if (deg % 2 != 0) return {false, {}};
  if (p.leading().sign() < 0) return {false, {}};

  // The root must live in the same field as the input.
  BigInt field_d = 0;
  for (const auto& c : p.coeffs())
    if (!c.is_rational()) field_d = c.radicand();

  auto lead_root = p.leading().sqrt_in(field_d);
  if (!lead_root) return {false, {}};

  int m = deg / 2;
  std::vector<QuadExt> h(static_cast<size_t>(m) + 1, QuadExt(0));
  h[static_cast<size_t>(m)] = *lead_root;
  QuadExt twice_lead = *lead_root * QuadExt(2);
  // Match coefficients from the top: the x^(m+i) coefficient of H^2 is
  // 2*h_m*h_i plus products of already-known entries.
  for (int i = m - 1; i >= 0; --i) {
    QuadExt s(0);
    for (int j = i + 1; j <= m; ++j) {
      int k = m + i - j;
      if (k <= i || k > m) continue;
      s += h[static_cast<size_t>(j)] * h[static_cast<size_t>(k)];
    }
    h[static_cast<size_t>(i)] = (p.coeff(m + i) - s) / twice_lead;
  }
  UniPoly witness = UniPoly::from_coeffs(p.var(), std::move(h));
  if (witness * witness == p) return {true, witness};
  return {false, {}};
}

}  // namespace arcfan
