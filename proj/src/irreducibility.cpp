#include "arcfan/irreducibility.hpp"

#include <algorithm>
#include <stdexcept>

#include "arcfan/intfactor.hpp"

namespace arcfan {

namespace mp = boost::multiprecision;

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::irreducible: return "irreducible";
    case Verdict::reducible: return "reducible";
    case Verdict::inconclusive: return "inconclusive";
  }
  return "?";
}

std::string to_string(Method m) {
  switch (m) {
    case Method::rational_root: return "rational_root";
    case Method::mod_p_witness: return "mod_p_witness";
    case Method::full_factorization: return "full_factorization";
    case Method::discriminant_nonsquare: return "discriminant_nonsquare";
    case Method::specialization: return "specialization";
  }
  return "?";
}

nlohmann::ordered_json IrreducibilityEvidence::to_json() const {
  nlohmann::ordered_json j;
  j["verdict"] = to_string(verdict);
  j["method"] = to_string(method);
  j["field"] = field;
  if (witness_prime) j["witness_prime"] = witness_prime;
  if (!factors.empty()) {
    if (!constant.is_one()) j["constant"] = constant.str();
    nlohmann::ordered_json fs = nlohmann::ordered_json::array();
    for (const auto& f : factors) fs.push_back(f.str());
    j["factors"] = fs;
  }
  if (!discriminant.is_zero()) j["discriminant"] = discriminant.str();
  if (!point.empty()) {
    nlohmann::ordered_json pt;
    for (const auto& [v, r] : point) pt[std::string(1, v)] = r.str();
    j["point"] = pt;
  }
  if (sub) j["specialized_evidence"] = sub->to_json();
  if (!note.empty()) j["note"] = note;
  return j;
}

namespace {

std::string q_field(char var) { return std::string("Q[") + var + "]"; }

std::string quad_field(const BigInt& d, char var) {
  return "Q(sqrt" + d.str() + ")[" + var + "]";
}

// Bounded divisor enumeration (positive divisors). Gives up on values that
// do not fit a machine word or do not factor by trial division up to 10^4,
// which only disables the rational-root *filter*; factorization downstream
// stays decisive.
std::optional<std::vector<BigInt>> bounded_divisors(const BigInt& n_in) {
  BigInt na = mp::abs(n_in);
  if (na == 0) return std::nullopt;
  if (na > BigInt("9223372036854775807")) return std::nullopt;
  std::uint64_t n = na.convert_to<std::uint64_t>();
  std::vector<std::pair<std::uint64_t, int>> primes;
  for (std::uint64_t p = 2; p * p <= n && p <= 10000; ++p) {
    if (n % p != 0) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    primes.emplace_back(p, e);
  }
  if (n > 1) {
    // Every factor left exceeds 10^4; at most one prime fits below 10^8.
    if (n > 100000000ull) return std::nullopt;
    primes.emplace_back(n, 1);
  }
  std::vector<BigInt> divs = {BigInt(1)};
  for (const auto& [p, e] : primes) {
    size_t base = divs.size();
    BigInt pk = 1;
    for (int k = 1; k <= e; ++k) {
      pk *= p;
      for (size_t i = 0; i < base; ++i) {
        divs.push_back(divs[i] * pk);
        if (divs.size() > 4096) return std::nullopt;
      }
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

struct RootScan {
  bool complete = false;
  bool found = false;
  BigInt num, den;  // root num/den in lowest terms, den > 0
};

RootScan scan_rational_roots(const ZPoly& f) {
  RootScan scan;
  int n = zz_degree(f);
  if (f[0] == 0) {
    scan.complete = true;
    scan.found = true;
    scan.num = 0;
    scan.den = 1;
    return scan;
  }
  auto divs0 = bounded_divisors(f[0]);
  auto divsl = bounded_divisors(f.back());
  if (!divs0 || !divsl) return scan;                        // incomplete
  if (divs0->size() * divsl->size() > 2000) return scan;    // too many candidates
  scan.complete = true;
  // Any root r/s of f = (s*x - r) * g has (s - r) | f(1) and (s + r) | f(-1).
  BigInt f_at_1 = zz_eval(f, 1);
  BigInt f_at_m1 = zz_eval(f, -1);
  auto check = [&](const BigInt& rr, const BigInt& s) {
    BigInt d1 = s - rr;
    if (d1 == 0) {
      if (f_at_1 != 0) return false;
    } else if (f_at_1 % d1 != 0) {
      return false;
    }
    BigInt d2 = s + rr;
    if (d2 == 0) {
      if (f_at_m1 != 0) return false;
    } else if (f_at_m1 % d2 != 0) {
      return false;
    }
    // f(rr/s) * s^n as an integer, by Horner.
    BigInt acc = 0;
    BigInt spow = 1;
    std::vector<BigInt> spows(static_cast<size_t>(n) + 1);
    for (int i = 0; i <= n; ++i, spow *= s) spows[static_cast<size_t>(i)] = spow;
    for (int i = n; i >= 0; --i)
      acc = acc * rr + f[static_cast<size_t>(i)] * spows[static_cast<size_t>(n - i)];
    return acc == 0;
  };
  for (const BigInt& r : *divs0) {
    for (const BigInt& s : *divsl) {
      if (mp::gcd(r, s) != 1) continue;
      for (int sign : {1, -1}) {
        BigInt rr = sign > 0 ? r : BigInt(-r);
        if (check(rr, s)) {
          scan.found = true;
          scan.num = rr;
          scan.den = s;
          return scan;
        }
      }
    }
  }
  return scan;
}

UniPoly quad_conj(const UniPoly& p) {
  std::vector<QuadExt> coeffs;
  coeffs.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) coeffs.push_back(c.conj());
  return UniPoly::from_coeffs(p.var(), std::move(coeffs));
}

}  // namespace

IrreducibilityEvidence univariate_irreducible_over_Q(const UniPoly& p) {
  if (!is_rational_poly(p))
    throw std::invalid_argument("polynomial has irrational coefficients; use the Q(sqrt d) variant");
  if (p.degree() < 1) throw std::domain_error("zero or constant polynomial");

  IrreducibilityEvidence ev;
  ev.field = q_field(p.var());

  IntegerForm form = make_integer_primitive(p);
  const ZPoly& f = form.prim;
  int n = zz_degree(f);

  if (n == 1) {
    ev.verdict = Verdict::irreducible;
    ev.method = Method::full_factorization;
    ev.note = "degree 1";
    return ev;
  }

  // Rational-root filter.
  RootScan scan = scan_rational_roots(f);
  if (scan.found) {
    ZPoly lin = {-scan.num, scan.den};  // s*x - r
    auto q = zz_divide_exact(f, lin);
    if (!q) throw std::logic_error("rational root does not divide");
    ev.verdict = Verdict::reducible;
    ev.method = Method::rational_root;
    ev.constant = QuadExt(form.constant);
    ev.factors = {zz_to_unipoly(lin, p.var()), zz_to_unipoly(*q, p.var())};
    return ev;
  }
  if (scan.complete && n <= 3) {
    ev.verdict = Verdict::irreducible;
    ev.method = Method::rational_root;
    ev.note = "degree <= 3 with no rational root";
    return ev;
  }

  // Mod-p filter: one degree-preserving irreducible reduction suffices.
  for (std::uint64_t q : primes_avoiding(f.back(), 10)) {
    if (irreducible_mod_p(f, q)) {
      ev.verdict = Verdict::irreducible;
      ev.method = Method::mod_p_witness;
      ev.witness_prime = q;
      return ev;
    }
  }

  // Decisive fallback: complete factorization.
  std::vector<ZZFactor> factors = factor_primitive_zz(f);
  ev.method = Method::full_factorization;
  if (factors.size() == 1 && factors[0].multiplicity == 1) {
    ev.verdict = Verdict::irreducible;
    return ev;
  }
  ev.verdict = Verdict::reducible;
  ev.constant = QuadExt(form.constant);
  for (const auto& zf : factors)
    for (int i = 0; i < zf.multiplicity; ++i) ev.factors.push_back(zz_to_unipoly(zf.poly, p.var()));
  return ev;
}

IrreducibilityEvidence univariate_irreducible_quadext(const UniPoly& p, const BigInt& field_d) {
  if (p.degree() < 1) throw std::domain_error("zero or constant polynomial");
  if (field_d == 0) return univariate_irreducible_over_Q(p);
  for (const auto& c : p.coeffs())
    if (!c.is_rational() && c.radicand() != field_d)
      throw std::invalid_argument("coefficient lies outside the requested extension");

  IrreducibilityEvidence ev;
  ev.field = quad_field(field_d, p.var());

  if (is_rational_poly(p)) {
    IrreducibilityEvidence over_q = univariate_irreducible_over_Q(p);
    if (over_q.verdict == Verdict::reducible) {
      over_q.field = ev.field;
      return over_q;
    }
    // Irreducible over Q; decide whether the quadratic extension splits it.
    int n = p.degree();
    if (n % 2 == 1) {
      ev.verdict = Verdict::irreducible;
      ev.method = over_q.method;
      ev.witness_prime = over_q.witness_prime;
      ev.note = "odd degree, irreducible over Q, so irreducible over any quadratic extension";
      return ev;
    }
    if (n == 2) {
      // Splits over Q(sqrt d) iff the discriminant is d times a square.
      QuadExt a = p.coeff(2), b = p.coeff(1), c = p.coeff(0);
      Rational disc = (b * b - QuadExt(4) * a * c).as_rational();
      auto s = QuadExt(disc / Rational(field_d)).sqrt_in(0);
      if (s) {
        QuadExt sqrt_disc(Rational(0), s->as_rational(), field_d);
        QuadExt r1 = (-b + sqrt_disc) / (QuadExt(2) * a);
        QuadExt r2 = (-b - sqrt_disc) / (QuadExt(2) * a);
        ev.verdict = Verdict::reducible;
        ev.method = Method::full_factorization;
        ev.constant = a;
        ev.factors = {UniPoly::variable(p.var()) - UniPoly::constant(r1, p.var()),
                      UniPoly::variable(p.var()) - UniPoly::constant(r2, p.var())};
        return ev;
      }
      ev.verdict = Verdict::irreducible;
      ev.method = Method::full_factorization;
      ev.note = "discriminant is not d times a rational square";
      return ev;
    }
    ev.verdict = Verdict::inconclusive;
    ev.method = over_q.method;
    ev.note = "irreducible over Q; splitting over the quadratic extension undecided";
    return ev;
  }

  // Genuinely irrational coefficients: use the norm polynomial N = p * conj(p).
  UniPoly conj = quad_conj(p);
  UniPoly norm = p * conj;
  if (!is_rational_poly(norm)) throw std::logic_error("norm polynomial is not rational");
  IrreducibilityEvidence norm_ev = univariate_irreducible_over_Q(norm);
  if (norm_ev.verdict == Verdict::irreducible) {
    ev.verdict = Verdict::irreducible;
    ev.method = Method::full_factorization;
    ev.note = "norm polynomial irreducible over Q";
    ev.sub = std::make_shared<IrreducibilityEvidence>(std::move(norm_ev));
    return ev;
  }
  // Norm reducible: look for an explicit factor shared with a rational factor
  // of the norm.
  IntegerForm nf = make_integer_primitive(norm);
  for (const auto& zf : factor_primitive_zz(nf.prim)) {
    UniPoly g = gcd_field(p, zz_to_unipoly(zf.poly, p.var()));
    if (g.degree() > 0 && g.degree() < p.degree()) {
      UniPoly q = divmod_field(p, g).first;
      ev.verdict = Verdict::reducible;
      ev.method = Method::full_factorization;
      ev.factors = {g, q};
      return ev;
    }
  }
  ev.verdict = Verdict::inconclusive;
  ev.method = Method::full_factorization;
  ev.note = "norm polynomial reducible without an explicit shared factor";
  return ev;
}

IrreducibilityEvidence quadratic_irreducible_by_discriminant(const MultiPoly& p, char v) {
  if (p.degree_in(v) != 2)
    throw std::invalid_argument(std::string("polynomial is not quadratic in ") + v);
  auto [content, primitive] = content_and_primitive(p, v);
  if (!(content.is_constant() && content.constant_value().abs().is_one()))
    throw std::invalid_argument("polynomial is not primitive in the quadratic variable");

  MultiPoly disc = quadratic_discriminant(p, v);
  auto vars = disc.variables();
  if (vars.size() > 1)
    throw std::invalid_argument("discriminant in more than one variable is not supported");

  IrreducibilityEvidence ev;
  ev.method = Method::discriminant_nonsquare;
  ev.discriminant = disc;
  {
    BigInt d = 0;
    for (const auto& [m, c] : p.terms())
      if (!c.is_rational()) d = c.radicand();
    std::string base = d == 0 ? "Q" : "Q(sqrt" + d.str() + ")";
    std::string ring = base;
    for (char var : p.variables())
      if (var != v) ring += std::string("[") + var + "]";
    ev.field = ring + "[" + v + "]";
  }

  PolySquareRoot sq = poly_square_root(disc.to_unipoly());
  if (!sq.is_square) {
    ev.verdict = Verdict::irreducible;
    return ev;
  }
  ev.verdict = Verdict::inconclusive;
  ev.note = "discriminant is a square of " + sq.witness.str() + "; the criterion is one-directional";
  return ev;
}

IrreducibilityEvidence multivariate_irreducible_by_specialization(
    const MultiPoly& p, char main_var, const std::map<char, Rational>& point) {
  auto vars = p.variables();
  if (std::find(vars.begin(), vars.end(), main_var) == vars.end())
    throw std::invalid_argument("main variable does not appear");
  for (char v : vars)
    if (v != main_var && !point.count(v))
      throw std::invalid_argument(std::string("specialization point does not bind ") + v);

  auto [content, primitive] = content_and_primitive(p, main_var);
  if (!(content.is_constant() && content.constant_value().abs().is_one()))
    throw std::invalid_argument("polynomial is not primitive in the main variable");

  IrreducibilityEvidence ev;
  ev.method = Method::specialization;
  ev.point = point;
  {
    std::string ring = "Z[";
    for (size_t i = 0; i < vars.size(); ++i) ring += std::string(i ? "," : "") + vars[i];
    ev.field = ring + "]";
  }

  std::map<char, QuadExt> bindings;
  for (const auto& [v, r] : point)
    if (v != main_var) bindings.emplace(v, QuadExt(r));
  MultiPoly specialized = p.substitute(bindings);
  UniPoly uni = specialized.to_unipoly(main_var);

  if (uni.degree() != p.degree_in(main_var)) {
    ev.verdict = Verdict::inconclusive;
    ev.note = "degree in the main variable drops at this point";
    return ev;
  }
  IrreducibilityEvidence uni_ev = univariate_irreducible_over_Q(uni);
  ev.sub = std::make_shared<IrreducibilityEvidence>(uni_ev);
  if (uni_ev.verdict == Verdict::irreducible) {
    ev.verdict = Verdict::irreducible;
    return ev;
  }
  ev.verdict = Verdict::inconclusive;
  ev.note = "specialized polynomial is reducible; try another point";
  return ev;
}

const std::vector<std::pair<int, int>>& specialization_fallback_points() {
  static const std::vector<std::pair<int, int>> points = {
      {2, 3}, {3, 2}, {2, 5}, {5, 2}, {3, 5}};
  return points;
}

IrreducibilityEvidence specialize_with_fallback(const MultiPoly& p, char main_var) {
  auto vars = p.variables();
  std::vector<char> free;
  for (char v : vars)
    if (v != main_var) free.push_back(v);
  if (free.size() > 2)
    throw std::invalid_argument("fallback specialization supports at most two free variables");

  IrreducibilityEvidence last;
  for (const auto& [a, b] : specialization_fallback_points()) {
    std::map<char, Rational> point;
    if (!free.empty()) point[free[0]] = Rational(a);
    if (free.size() > 1) point[free[1]] = Rational(b);
    last = multivariate_irreducible_by_specialization(p, main_var, point);
    if (last.verdict == Verdict::irreducible) return last;
  }
  last.note += " (all fallback points exhausted)";
  return last;
}

DegreeVerdict power_of_two_verdict(int degree, const IrreducibilityEvidence& evidence,
                                   std::string context) {
  if (evidence.verdict != Verdict::irreducible)
    throw std::invalid_argument("degree criterion requires irreducibility evidence");
  DegreeVerdict v;
  v.degree = degree;
  v.power_of_two = degree > 0 && (degree & (degree - 1)) == 0;
  v.nonconstructible = !v.power_of_two;
  v.context = std::move(context);
  v.text = v.nonconstructible ? "nonconstructible" : "criterion inapplicable";
  return v;
}

DegreeVerdict power_of_two_verdict(const UniPoly& p, const IrreducibilityEvidence& evidence,
                                   std::string context) {
  return power_of_two_verdict(p.degree(), evidence, std::move(context));
}

}  // namespace arcfan
