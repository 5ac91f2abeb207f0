#include "arcfan/fanpoly.hpp"

#include <algorithm>
#include <stdexcept>

#include "arcfan/intfactor.hpp"

namespace arcfan {

namespace {

BigInt binomial(int n, int k) {
  BigInt r = 1;
  for (int i = 0; i < k; ++i) {
    r *= n - i;
    r /= i + 1;
  }
  return r;
}

bool in_open_unit_interval(const QuadExt& p) {
  return (p * p - QuadExt(1)).sign() < 0;
}

MultiPoly from_unipoly_as(const UniPoly& p, char var) {
  return MultiPoly::from_unipoly(UniPoly::from_coeffs(var, p.coeffs()));
}

}  // namespace

UniPoly cos_multiple_angle(int k) {
  if (k < 1) throw std::invalid_argument("cos_multiple_angle needs k >= 1");
  UniPoly u = UniPoly::variable('u');
  UniPoly one_minus_u2 = UniPoly::constant(QuadExt(1), 'u') - u * u;
  UniPoly g('u');
  for (int j = 0; j <= k; j += 2) {
    QuadExt c{Rational(binomial(k, j))};
    if ((j / 2) % 2 == 1) c = -c;
    UniPoly term = UniPoly::monomial('u', c, static_cast<unsigned>(k - j));
    for (int t = 0; t < j / 2; ++t) term *= one_minus_u2;
    g += term;
  }
  return g;
}

namespace {

FanAnglePoly build_even_impl(int k, std::optional<QuadExt> p) {
  if (k < 3 || k % 2 == 0) throw std::invalid_argument("even-case family needs odd k >= 3");
  if (p) {
    if (!in_open_unit_interval(*p)) throw std::invalid_argument("p must lie in (-1,1)");
    if (p->is_zero()) throw std::invalid_argument("p = 0 (delta = pi) is outside this family");
  }
  MultiPoly x = MultiPoly::variable('x');
  MultiPoly y = MultiPoly::variable('y');
  MultiPoly pp = p ? MultiPoly::constant(*p) : MultiPoly::variable('w');
  MultiPoly g = from_unipoly_as(cos_multiple_angle(k), 'x');

  MultiPoly poly = x * x * y * y -
                   MultiPoly::constant(QuadExt(2)) * pp * x * g * y +
                   (g * g + pp * pp - MultiPoly::constant(QuadExt(1)));
  return {k, Parity::even_case, std::move(p), std::move(poly)};
}

FanAnglePoly build_odd_impl(int k, std::optional<QuadExt> p) {
  if (k < 3 || k % 2 == 0) throw std::invalid_argument("odd-case family needs odd k >= 3");
  if (p) {
    if (!in_open_unit_interval(*p)) throw std::invalid_argument("p must lie in (-1,1)");
    if (p->is_zero()) throw std::invalid_argument("p = 0 (delta = pi) is outside this family");
  }
  MultiPoly x = MultiPoly::variable('x');
  MultiPoly y = MultiPoly::variable('y');
  MultiPoly pp = p ? MultiPoly::constant(*p) : MultiPoly::variable('w');
  MultiPoly g = from_unipoly_as(cos_multiple_angle(k), 'x');
  MultiPoly four = MultiPoly::constant(QuadExt(4));

  MultiPoly poly = four * x.pow(4) * y * y -
                   (four * pp * x * x * g + four * x * x) * y +
                   (pp + g) * (pp + g);
  return {k, Parity::odd_case, std::move(p), std::move(poly)};
}

}  // namespace

FanAnglePoly build_even_poly(int k, const QuadExt& p) { return build_even_impl(k, p); }
FanAnglePoly build_even_poly_symbolic(int k) { return build_even_impl(k, std::nullopt); }
FanAnglePoly build_odd_poly(int k, const QuadExt& p) { return build_odd_impl(k, p); }
FanAnglePoly build_odd_poly_symbolic(int k) { return build_odd_impl(k, std::nullopt); }

QuadExt two_fan_u_squared(const QuadExt& p, const QuadExt& c) {
  if (!in_open_unit_interval(p)) throw std::invalid_argument("p must lie in (-1,1)");
  if (c.sign() <= 0) throw std::invalid_argument("central distance must be positive");
  // c^2 - 2pc + 1 = (c - p)^2 + (1 - p^2) > 0
  QuadExt den = c * c - QuadExt(2) * p * c + QuadExt(1);
  return (QuadExt(1) - p * p) / den;
}

QuadExt side_length_two_fan(const QuadExt& p, const QuadExt& a2) {
  if (!in_open_unit_interval(p)) throw std::invalid_argument("p must lie in (-1,1)");
  if (a2.sign() <= 0) throw std::invalid_argument("side length must be positive");
  // a2^2 + 2p*a2 + 1 > (a2 - 1)^2 >= 0
  QuadExt den = a2 * a2 + QuadExt(2) * p * a2 + QuadExt(1);
  return (QuadExt(1) - p * p) / den;
}

namespace {

// Cosine/sine symbols of the four half angles involved in the 3-fan
// elimination: alpha, beta, gamma and delta' = delta/2.
MultiPoly compute_three_fan_elimination() {
  MultiPoly ca = MultiPoly::variable('a');
  MultiPoly cb = MultiPoly::variable('b');
  MultiPoly cg = MultiPoly::variable('c');
  MultiPoly cd = MultiPoly::variable('d');
  MultiPoly sa = MultiPoly::variable('p');
  MultiPoly sb = MultiPoly::variable('q');
  MultiPoly sg = MultiPoly::variable('r');
  MultiPoly sd = MultiPoly::variable('s');
  MultiPoly two = MultiPoly::constant(QuadExt(2));
  MultiPoly eight = MultiPoly::constant(QuadExt(8));

  // h1 = cos^2(alpha+beta) - cos^2(delta' - gamma), split so that h1 + s1 is
  // free of odd sine powers.
  MultiPoly cos_sum = ca * cb - sa * sb;
  MultiPoly cos_diff = cd * cg + sd * sg;
  MultiPoly h1 = cos_sum * cos_sum - cos_diff * cos_diff;
  MultiPoly s1 = two * ca * cb * sa * sb + two * cd * cg * sd * sg;

  MultiPoly h1s1 = h1 + s1;
  MultiPoly h2 = h1s1 * h1s1 - s1 * s1;
  MultiPoly s2 = eight * ca * cb * sa * sb * cd * cg * sd * sg;

  MultiPoly h2s2 = h2 + s2;
  MultiPoly h3 = h2s2 * h2s2 - s2 * s2;

  // All sine exponents are even now; replace sin^2 by 1 - cos^2.
  MultiPoly one = MultiPoly::constant(QuadExt(1));
  MultiPoly h4 = h3.substitute_square('p', one - ca * ca)
                     .substitute_square('q', one - cb * cb)
                     .substitute_square('r', one - cg * cg)
                     .substitute_square('s', one - cd * cd);

  // cos(alpha) = y*u, cos(beta) = z*u, cos(gamma) = u, cos(delta') = w.
  MultiPoly u = MultiPoly::variable('u');
  MultiPoly h5 = h4.substitute('a', MultiPoly::variable('y') * u)
                     .substitute('b', MultiPoly::variable('z') * u)
                     .substitute('c', u)
                     .substitute('d', MultiPoly::variable('w'));

  // x stands for u^2.
  return h5.substitute_square('u', MultiPoly::variable('x'));
}

}  // namespace

const MultiPoly& eliminate_three_fan() {
  static const MultiPoly h = compute_three_fan_elimination();
  return h;
}

bool poly_even_in(const MultiPoly& p, char v) {
  for (const auto& [m, c] : p.terms())
    for (const auto& [var, e] : m)
      if (var == v && e % 2 != 0) return false;
  return true;
}

std::string to_string(CertVerdict v) {
  switch (v) {
    case CertVerdict::nonconstructible: return "nonconstructible";
    case CertVerdict::constructible_with_construction: return "constructible_with_construction";
    case CertVerdict::undecided: return "undecided";
  }
  return "?";
}

nlohmann::ordered_json Certificate::to_json() const {
  nlohmann::ordered_json jf;
  jf["n"] = fan.n;
  jf["p"] = fan.p.str();
  jf["data_kind"] =
      fan.kind == DataKind::central_distances ? "central_distances" : "side_lengths";
  nlohmann::ordered_json vals = nlohmann::ordered_json::array();
  for (const auto& v : fan.values) vals.push_back(v ? v->str() : "general");
  jf["values"] = vals;

  nlohmann::ordered_json j;
  j["fan"] = jf;
  j["witness_poly"] = witness_poly;
  j["root_description"] = root_description;
  j["degree"] = degree;
  j["evidence"] = evidence.to_json();
  j["verdict"] = to_string(verdict);
  j["explanation"] = explanation;
  return j;
}

namespace {

Certificate undecided_cert(const ExactFan& fan, std::string why) {
  Certificate cert;
  cert.fan = fan;
  cert.verdict = CertVerdict::undecided;
  cert.explanation = std::move(why);
  return cert;
}

// Shared wrap-up once a univariate witness for a fan quantity is in hand.
Certificate finish_univariate(const ExactFan& fan, UniPoly witness, std::string root_desc,
                              std::string family_note) {
  Certificate cert;
  cert.fan = fan;
  cert.root_description = std::move(root_desc);
  cert.degree = witness.degree();

  IrreducibilityEvidence ev;
  if (is_rational_poly(witness)) {
    witness = zz_to_unipoly(make_integer_primitive(witness).prim, witness.var());
    ev = univariate_irreducible_over_Q(witness);
  } else {
    BigInt d = 0;
    for (const auto& c : witness.coeffs())
      if (!c.is_rational()) d = c.radicand();
    ev = univariate_irreducible_quadext(witness, d);
  }
  cert.witness_poly = witness.str();
  cert.evidence = ev;

  if (ev.verdict == Verdict::irreducible) {
    DegreeVerdict dv = power_of_two_verdict(witness.degree(), ev, family_note);
    if (dv.nonconstructible) {
      cert.verdict = CertVerdict::nonconstructible;
      cert.explanation = family_note + "; witness degree " + std::to_string(dv.degree) +
                         " is not a power of two";
    } else {
      cert.verdict = CertVerdict::undecided;
      cert.explanation = family_note + "; witness degree " + std::to_string(dv.degree) +
                         " is a power of two, so the degree criterion does not apply";
    }
  } else if (ev.verdict == Verdict::reducible) {
    cert.verdict = CertVerdict::undecided;
    cert.explanation =
        family_note + "; the witness polynomial factors, so the minimal polynomial is smaller";
  } else {
    cert.verdict = CertVerdict::undecided;
    cert.explanation = family_note + "; irreducibility could not be decided";
  }
  return cert;
}

Certificate constructible_cert(const ExactFan& fan, std::string witness, std::string root_desc,
                               int tower_degree, std::string field, std::string why) {
  Certificate cert;
  cert.fan = fan;
  cert.witness_poly = std::move(witness);
  cert.root_description = std::move(root_desc);
  cert.degree = tower_degree;
  cert.evidence.verdict = Verdict::irreducible;
  cert.evidence.method = Method::full_factorization;
  cert.evidence.field = std::move(field);
  cert.evidence.note = "degree 1 witness";
  cert.verdict = CertVerdict::constructible_with_construction;
  cert.explanation = std::move(why);
  return cert;
}

const char* kGaussBridge =
    "general parameters are read as indeterminates; the evidence ring transfers to the "
    "parameter field by Gauss's lemma, which assumes the parameters are algebraically "
    "independent over the field generated by the remaining data";

}  // namespace

Certificate certify_nonconstructible(const ExactFan& fan) {
  if (fan.n < 1) throw std::invalid_argument("fan needs n >= 1");
  if (static_cast<int>(fan.values.size()) != fan.n)
    throw std::invalid_argument("fan needs exactly n values");
  if ((fan.p - QuadExt(1)).sign() >= 0 || (fan.p + QuadExt(1)).sign() < 0)
    throw std::invalid_argument("cos(delta/2) must lie in [-1, 1)");
  for (const auto& v : fan.values)
    if (v && v->sign() <= 0) throw std::invalid_argument("fan values must be positive");

  // All scalars must live in one quadratic extension.
  {
    BigInt d = fan.p.is_rational() ? BigInt(0) : fan.p.radicand();
    for (const auto& v : fan.values) {
      if (!v || v->is_rational()) continue;
      if (d == 0) d = v->radicand();
      if (v->radicand() != d)
        return undecided_cert(fan, "values span different quadratic extensions");
    }
  }

  const bool delta_full_turn = fan.p == QuadExt(-1);
  const QuadExt& p = fan.p;

  auto concrete = [&](int i) -> const QuadExt& { return *fan.values[static_cast<size_t>(i)]; };
  bool all_concrete = true;
  for (const auto& v : fan.values) all_concrete &= v.has_value();

  if (fan.kind == DataKind::side_lengths) {
    if (delta_full_turn)
      return undecided_cert(fan, "side-length certificates need delta in (0, 2*pi)");
    if (fan.n == 1) {
      // u^2 = (1-p^2)/a1^2 with u = 1/(2r)
      std::string witness = all_concrete
                                ? (MultiPoly::variable('x').scaled(concrete(0) * concrete(0)) +
                                   MultiPoly::constant(p * p - QuadExt(1)))
                                      .str()
                                : "y^2*x + " + (p * p - QuadExt(1)).str();
      return constructible_cert(fan, witness, "x = u^2, u = 1/(2r)", 2, "Q(p,a1)[x]",
                                "u^2 solves a linear equation over the data field; u and r "
                                "follow by one square root (tower of degree <= 2)");
    }
    if (fan.n == 2) {
      if (all_concrete) {
        QuadExt a2 = concrete(1) / concrete(0);
        side_length_two_fan(p, a2);  // range guards
        MultiPoly wit = MultiPoly::variable('x').scaled(a2 * a2 + QuadExt(2) * p * a2 + QuadExt(1)) +
                        MultiPoly::constant(p * p - QuadExt(1));
        return constructible_cert(fan, wit.str(), "x = u^2, u = 1/(2r), scale a1 = 1", 2,
                                  "Q(p,a2)[x]",
                                  "u^2 solves a linear equation over the data field; u and r "
                                  "follow by one square root (tower of degree <= 2)");
      }
      MultiPoly y = MultiPoly::variable('y');
      MultiPoly wit = (y * y + y.scaled(QuadExt(2) * p) + MultiPoly::constant(QuadExt(1))) *
                          MultiPoly::variable('x') +
                      MultiPoly::constant(p * p - QuadExt(1));
      return constructible_cert(fan, wit.str(), "x = u^2, u = 1/(2r), scale a1 = 1, y = a2", 2,
                                "Q(p)[y][x]",
                                "the witness is linear in x for every admissible side length, "
                                "so the 2-fan is constructible in general");
    }
    return undecided_cert(fan, "side-length certificates beyond 2-fans are not covered");
  }

  // Central distances.
  if (delta_full_turn && fan.n <= 2)
    return undecided_cert(fan,
                          "degenerate data: a 1-fan with delta = 2*pi is not determined "
                          "uniquely and a 2-fan with delta = 2*pi does not exist");

  if (fan.n == 1) {
    if (p.sign() <= 0)
      return undecided_cert(fan, "a 1-fan with a positive central distance needs delta < pi");
    std::string witness =
        all_concrete
            ? (MultiPoly::variable('x').scaled(concrete(0)) + MultiPoly::constant(-p)).str()
            : "y*x - " + p.str();
    return constructible_cert(fan, witness, "x = u, u = 1/r", 1, "Q(p,d1)[x]",
                              "u = p/d1 is a field operation on the data");
  }

  if (fan.n == 2) {
    if (all_concrete) {
      QuadExt c = concrete(1) / concrete(0);
      two_fan_u_squared(p, c);  // range guards
      MultiPoly wit = MultiPoly::variable('x').scaled(c * c - QuadExt(2) * p * c + QuadExt(1)) +
                      MultiPoly::constant(p * p - QuadExt(1));
      return constructible_cert(fan, wit.str(), "x = u^2, u = 1/r, scale d1 = 1", 2, "Q(p,c)[x]",
                                "u^2 solves a linear equation over the data field; u and r "
                                "follow by one square root (tower of degree <= 2)");
    }
    MultiPoly y = MultiPoly::variable('y');
    MultiPoly wit = (y * y - y.scaled(QuadExt(2) * p) + MultiPoly::constant(QuadExt(1))) *
                        MultiPoly::variable('x') +
                    MultiPoly::constant(p * p - QuadExt(1));
    return constructible_cert(fan, wit.str(), "x = u^2, u = 1/r, scale d1 = 1, y = d2", 2,
                              "Q(p)[y][x]",
                              "the witness is linear in x for every admissible distance, so "
                              "the 2-fan is constructible in general");
  }

  // n >= 3. Equal concrete distances first: the multiple-angle witness has
  // the smallest degree.
  if (all_concrete) {
    bool all_equal = true;
    for (int i = 1; i < fan.n; ++i) all_equal &= concrete(i) == concrete(0);
    if (all_equal) {
      UniPoly g = UniPoly::from_coeffs('x', cos_multiple_angle(fan.n).coeffs());
      UniPoly witness = g - UniPoly::constant(p, 'x');
      return finish_univariate(fan, witness, "x = cos(delta/(2n)) = d*u, u = 1/r",
                               "equal-distance fan: cos(n*alpha) = cos(delta/2)");
    }
  }

  if (fan.n == 3) {
    bool symbolic_pair = !fan.values[0] && !fan.values[1] && fan.values[2];
    if (all_concrete) {
      const QuadExt& d3 = concrete(2);
      std::map<char, QuadExt> bind = {
          {'y', concrete(0) / d3}, {'z', concrete(1) / d3}, {'w', p}};
      UniPoly witness = eliminate_three_fan().substitute(bind).to_unipoly('x');
      if (witness.degree() != 6)
        return undecided_cert(fan, "elimination polynomial degenerates at these values");
      return finish_univariate(fan, witness, "x = u^2, u = 1/r, scale d3 = 1",
                               "3-fan elimination sextic at the given distances");
    }
    if (symbolic_pair) {
      MultiPoly H = eliminate_three_fan().substitute({{'w', p}});
      bool rational_coeffs = true;
      for (const auto& [m, c] : H.terms()) rational_coeffs &= c.is_rational();
      if (!rational_coeffs)
        return undecided_cert(fan,
                              "substituted elimination polynomial has irrational coefficients; "
                              "the quadratic-extension pipeline does not cover multivariate "
                              "irreducibility");
      Certificate cert;
      cert.fan = fan;
      cert.witness_poly = H.str();
      cert.root_description = "x = u^2, u = 1/r, scale d3 = 1; y, z general";
      cert.degree = H.degree_in('x');
      cert.evidence = specialize_with_fallback(H, 'x');
      if (cert.evidence.verdict == Verdict::irreducible) {
        DegreeVerdict dv = power_of_two_verdict(cert.degree, cert.evidence, "3-fan family");
        cert.verdict = dv.nonconstructible ? CertVerdict::nonconstructible : CertVerdict::undecided;
        cert.explanation = std::string("3-fan with general distances (y, z, 1); ") + kGaussBridge;
      } else {
        cert.verdict = CertVerdict::undecided;
        cert.explanation = "specialization inconclusive at every fallback point";
      }
      return cert;
    }
    return undecided_cert(fan, "3-fan pattern needs concrete distances or (general, general, d3)");
  }

  // (1,...,1,c) with n even, and (1,...,1,c,c) with n odd.
  auto head_equal_concrete = [&](int count) {
    for (int i = 0; i < count; ++i)
      if (!fan.values[static_cast<size_t>(i)] || concrete(i) != concrete(0)) return false;
    return true;
  };

  bool even_pattern = fan.n % 2 == 0 && head_equal_concrete(fan.n - 1);
  bool odd_pattern = fan.n % 2 == 1 && head_equal_concrete(fan.n - 2) &&
                     ((fan.values[static_cast<size_t>(fan.n) - 2] &&
                       fan.values[static_cast<size_t>(fan.n) - 1] &&
                       concrete(fan.n - 2) == concrete(fan.n - 1)) ||
                      (!fan.values[static_cast<size_t>(fan.n) - 2] &&
                       !fan.values[static_cast<size_t>(fan.n) - 1]));

  if (even_pattern || odd_pattern) {
    if (delta_full_turn)
      return undecided_cert(fan, "the quadratic families need delta in (0, 2*pi)");
    if (p.is_zero())
      return undecided_cert(fan,
                            "delta = pi needs the separate construction for these patterns "
                            "and is not covered");
    int k = even_pattern ? fan.n - 1 : fan.n - 2;
    FanAnglePoly fam = even_pattern ? build_even_poly(k, p) : build_odd_poly(k, p);
    const auto& last = fan.values[static_cast<size_t>(fan.n) - 1];
    std::string family_note = even_pattern
                                  ? "distances (1,...,1,c): quadratic-in-y family, y = c"
                                  : "distances (1,...,1,c,c): quadratic-in-y family, y = c^2";

    if (last) {
      QuadExt ratio = *last / concrete(0);
      QuadExt y0 = even_pattern ? ratio : ratio * ratio;
      UniPoly witness = fam.poly.substitute({{'y', y0}}).to_unipoly('x');
      return finish_univariate(fan, witness, "x = u, u = 1/r, scale to unit head distances",
                               family_note);
    }

    Certificate cert;
    cert.fan = fan;
    cert.witness_poly = fam.poly.str();
    cert.root_description = "x = u, u = 1/r; y general";
    cert.degree = fam.poly.degree_in('x');
    cert.evidence = quadratic_irreducible_by_discriminant(fam.poly, 'y');
    if (cert.evidence.verdict == Verdict::irreducible) {
      DegreeVerdict dv = power_of_two_verdict(cert.degree, cert.evidence, family_note);
      cert.verdict = dv.nonconstructible ? CertVerdict::nonconstructible : CertVerdict::undecided;
      cert.explanation = family_note + "; " + kGaussBridge;
    } else {
      cert.verdict = CertVerdict::undecided;
      cert.explanation = family_note + "; discriminant criterion inconclusive";
    }
    return cert;
  }

  return undecided_cert(fan, "pattern not covered by the certified families");
}

}  // namespace arcfan
