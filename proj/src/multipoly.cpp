#include "arcfan/multipoly.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace arcfan {

int var_rank(char v) {
  static const std::string order = "yzwxu";
  auto pos = order.find(v);
  if (pos != std::string::npos) return static_cast<int>(pos);
  return 5 + static_cast<unsigned char>(v);
}

unsigned monomial_total_degree(const Monomial& m) {
  unsigned d = 0;
  for (const auto& [v, e] : m) d += e;
  return d;
}

bool MonomialOrder::operator()(const Monomial& a, const Monomial& b) const {
  unsigned da = monomial_total_degree(a);
  unsigned db = monomial_total_degree(b);
  if (da != db) return da > db;
  size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    int ra = i < a.size() ? var_rank(a[i].first) : 1 << 30;
    int rb = j < b.size() ? var_rank(b[j].first) : 1 << 30;
    if (ra < rb) return true;   // a has a positive exponent on an earlier variable
    if (rb < ra) return false;
    if (a[i].second != b[j].second) return a[i].second > b[j].second;
    ++i;
    ++j;
  }
  return false;
}

namespace {

Monomial monomial_mul(const Monomial& a, const Monomial& b) {
  Monomial out;
  out.reserve(a.size() + b.size());
  size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    int ra = i < a.size() ? var_rank(a[i].first) : 1 << 30;
    int rb = j < b.size() ? var_rank(b[j].first) : 1 << 30;
    if (ra < rb)
      out.push_back(a[i++]);
    else if (rb < ra)
      out.push_back(b[j++]);
    else {
      out.emplace_back(a[i].first, a[i].second + b[j].second);
      ++i;
      ++j;
    }
  }
  return out;
}

bool monomial_divides(const Monomial& d, const Monomial& m) {
  size_t j = 0;
  for (const auto& [v, e] : d) {
    while (j < m.size() && var_rank(m[j].first) < var_rank(v)) ++j;
    if (j == m.size() || m[j].first != v || m[j].second < e) return false;
  }
  return true;
}

Monomial monomial_div(const Monomial& m, const Monomial& d) {
  Monomial out;
  size_t j = 0;
  for (const auto& [v, e] : m) {
    unsigned sub = 0;
    if (j < d.size() && d[j].first == v) {
      sub = d[j].second;
      ++j;
    }
    if (e > sub) out.emplace_back(v, e - sub);
  }
  return out;
}

Monomial normalize_monomial(Monomial m) {
  std::sort(m.begin(), m.end(), [](const auto& a, const auto& b) {
    return var_rank(a.first) < var_rank(b.first);
  });
  Monomial out;
  for (const auto& [v, e] : m) {
    if (e == 0) continue;
    if (!out.empty() && out.back().first == v)
      out.back().second += e;
    else
      out.emplace_back(v, e);
  }
  return out;
}

}  // namespace

MultiPoly MultiPoly::constant(QuadExt c) {
  MultiPoly p;
  p.add_term({}, std::move(c));
  return p;
}

MultiPoly MultiPoly::variable(char v) {
  MultiPoly p;
  p.add_term({{v, 1}}, QuadExt(1));
  return p;
}

MultiPoly MultiPoly::monomial(Monomial m, QuadExt c) {
  MultiPoly p;
  p.add_term(normalize_monomial(std::move(m)), std::move(c));
  return p;
}

MultiPoly MultiPoly::from_unipoly(const UniPoly& p) {
  MultiPoly out;
  for (int e = 0; e <= p.degree(); ++e) {
    if (p.coeff(e).is_zero()) continue;
    Monomial m;
    if (e > 0) m.emplace_back(p.var(), static_cast<unsigned>(e));
    out.add_term(std::move(m), p.coeff(e));
  }
  return out;
}

void MultiPoly::add_term(Monomial m, QuadExt c) {
  if (c.is_zero()) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(std::move(m), std::move(c));
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

bool MultiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

QuadExt MultiPoly::constant_value() const {
  if (terms_.empty()) return QuadExt(0);
  if (!is_constant()) throw std::domain_error("polynomial is not constant");
  return terms_.begin()->second;
}

QuadExt MultiPoly::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? QuadExt(0) : it->second;
}

int MultiPoly::degree_in(char v) const {
  int deg = is_zero() ? -1 : 0;
  for (const auto& [m, c] : terms_)
    for (const auto& [var, e] : m)
      if (var == v) deg = std::max(deg, static_cast<int>(e));
  return deg;
}

int MultiPoly::total_degree() const {
  if (is_zero()) return -1;
  // Graded order: the first term carries the total degree.
  return static_cast<int>(monomial_total_degree(terms_.begin()->first));
}

std::vector<char> MultiPoly::variables() const {
  std::vector<char> vars;
  for (const auto& [m, c] : terms_)
    for (const auto& [v, e] : m)
      if (std::find(vars.begin(), vars.end(), v) == vars.end()) vars.push_back(v);
  std::sort(vars.begin(), vars.end(), [](char a, char b) { return var_rank(a) < var_rank(b); });
  return vars;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly out;
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
  return out;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& r) {
  for (const auto& [m, c] : r.terms_) add_term(m, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& r) {
  for (const auto& [m, c] : r.terms_) add_term(m, -c);
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly out;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) out.add_term(monomial_mul(ma, mb), ca * cb);
  return out;
}

MultiPoly MultiPoly::scaled(const QuadExt& c) const {
  MultiPoly out;
  if (c.is_zero()) return out;
  for (const auto& [m, coef] : terms_) out.terms_.emplace(m, coef * c);
  return out;
}

MultiPoly MultiPoly::pow(unsigned e) const {
  MultiPoly acc = MultiPoly::constant(QuadExt(1));
  MultiPoly base = *this;
  while (e) {
    if (e & 1) acc *= base;
    if (e >>= 1) base *= base;
  }
  return acc;
}

std::map<unsigned, MultiPoly> MultiPoly::coefficients_in(char v) const {
  std::map<unsigned, MultiPoly> out;
  for (const auto& [m, c] : terms_) {
    unsigned e = 0;
    Monomial rest;
    rest.reserve(m.size());
    for (const auto& [var, exp] : m) {
      if (var == v)
        e = exp;
      else
        rest.emplace_back(var, exp);
    }
    out[e].add_term(std::move(rest), c);
  }
  return out;
}

MultiPoly MultiPoly::substitute(const std::map<char, QuadExt>& bindings) const {
  MultiPoly out;
  for (const auto& [m, c] : terms_) {
    QuadExt coef = c;
    Monomial rest;
    for (const auto& [var, exp] : m) {
      auto it = bindings.find(var);
      if (it == bindings.end())
        rest.emplace_back(var, exp);
      else
        coef *= it->second.pow(exp);
    }
    out.add_term(std::move(rest), std::move(coef));
  }
  return out;
}

MultiPoly MultiPoly::substitute(char v, const MultiPoly& replacement) const {
  std::vector<MultiPoly> powers = {MultiPoly::constant(QuadExt(1))};
  MultiPoly out;
  for (const auto& [m, c] : terms_) {
    unsigned e = 0;
    Monomial rest;
    for (const auto& [var, exp] : m) {
      if (var == v)
        e = exp;
      else
        rest.emplace_back(var, exp);
    }
    while (powers.size() <= e) powers.push_back(powers.back() * replacement);
    out += MultiPoly::monomial(std::move(rest), c) * powers[e];
  }
  return out;
}

MultiPoly MultiPoly::substitute_square(char v, const MultiPoly& replacement) const {
  std::vector<MultiPoly> powers = {MultiPoly::constant(QuadExt(1))};
  MultiPoly out;
  for (const auto& [m, c] : terms_) {
    unsigned e = 0;
    Monomial rest;
    for (const auto& [var, exp] : m) {
      if (var == v)
        e = exp;
      else
        rest.emplace_back(var, exp);
    }
    if (e % 2 != 0)
      throw std::invalid_argument(std::string("odd exponent of ") + v +
                                  " in square substitution");
    e /= 2;
    while (powers.size() <= e) powers.push_back(powers.back() * replacement);
    out += MultiPoly::monomial(std::move(rest), c) * powers[e];
  }
  return out;
}

double MultiPoly::eval_double(const std::map<char, double>& values) const {
  double total = 0;
  for (const auto& [m, c] : terms_) {
    double t = c.to_double();
    for (const auto& [var, exp] : m) {
      auto it = values.find(var);
      if (it == values.end())
        throw std::invalid_argument(std::string("unbound variable ") + var);
      for (unsigned k = 0; k < exp; ++k) t *= it->second;
    }
    total += t;
  }
  return total;
}

UniPoly MultiPoly::to_unipoly(char fallback_var) const {
  auto vars = variables();
  if (vars.size() > 1) throw std::domain_error("polynomial has more than one variable");
  char v = vars.empty() ? fallback_var : vars[0];
  std::vector<QuadExt> coeffs(static_cast<size_t>(std::max(degree_in(v), 0)) + 1, QuadExt(0));
  for (const auto& [m, c] : terms_) coeffs[m.empty() ? 0 : m[0].second] = c;
  return UniPoly::from_coeffs(v, std::move(coeffs));
}

std::string MultiPoly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : terms_) {
    std::string mono;
    for (const auto& [v, e] : m) {
      if (!mono.empty()) mono += "*";
      mono += v;
      if (e > 1) mono += "^" + std::to_string(e);
    }
    detail::append_term(out, c, mono);
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const MultiPoly& p) { return os << p.str(); }

MultiPoly MultiPoly::parse(std::string_view text) {
  auto strip = [](std::string_view s) {
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
    return s;
  };
  text = strip(text);
  if (text.empty()) throw std::invalid_argument("empty polynomial literal");
  if (text == "0") return MultiPoly();

  MultiPoly out;
  size_t pos = 0;
  int sign = 1;
  if (text[pos] == '+' || text[pos] == '-') {
    sign = text[pos] == '-' ? -1 : 1;
    ++pos;
  }
  while (pos < text.size()) {
    int depth = 0;
    size_t end = pos;
    while (end < text.size()) {
      char c = text[end];
      if (c == '(') ++depth;
      if (c == ')') --depth;
      if (depth == 0 && (c == '+' || c == '-') && end > pos &&
          text[end - 1] != '(' && text[end - 1] != '*' && text[end - 1] != '^')
        break;
      ++end;
    }
    std::string_view term = strip(text.substr(pos, end - pos));
    if (term.empty()) throw std::invalid_argument("empty polynomial term");

    QuadExt coef(sign);
    Monomial mono;
    size_t fpos = 0;
    while (fpos < term.size()) {
      int fd = 0;
      size_t fend = fpos;
      while (fend < term.size()) {
        char c = term[fend];
        if (c == '(') ++fd;
        if (c == ')') --fd;
        if (fd == 0 && c == '*') break;
        ++fend;
      }
      std::string_view factor = strip(term.substr(fpos, fend - fpos));
      if (factor.empty()) throw std::invalid_argument("empty factor in term");
      char f0 = factor.front();
      bool scalar = f0 == '(' || f0 == '+' || f0 == '-' || (f0 >= '0' && f0 <= '9') ||
                    factor.substr(0, 5) == "sqrt(";
      if (scalar) {
        coef *= QuadExt::parse(factor);
      } else {
        char v = f0;
        unsigned e = 1;
        if (factor.size() > 1) {
          if (factor[1] != '^') throw std::invalid_argument("bad variable factor");
          e = static_cast<unsigned>(std::stoul(std::string(factor.substr(2))));
        }
        mono.emplace_back(v, e);
      }
      fpos = fend + (fend < term.size() ? 1 : 0);
    }
    out.add_term(normalize_monomial(std::move(mono)), std::move(coef));

    if (end < text.size()) {
      sign = text[end] == '-' ? -1 : 1;
      ++end;
    }
    pos = end;
  }
  return out;
}

nlohmann::ordered_json MultiPoly::to_json() const {
  nlohmann::ordered_json terms = nlohmann::ordered_json::array();
  for (const auto& [m, c] : terms_) {
    nlohmann::ordered_json mono = nlohmann::ordered_json::object();
    for (const auto& [v, e] : m) mono[std::string(1, v)] = e;
    terms.push_back({{"c", c.str()}, {"m", mono}});
  }
  return {{"terms", terms}};
}

MultiPoly MultiPoly::from_json(const nlohmann::json& j) {
  MultiPoly out;
  for (const auto& t : j.at("terms")) {
    Monomial m;
    for (const auto& [k, v] : t.at("m").items()) {
      if (k.size() != 1) throw std::invalid_argument("bad variable name in JSON term");
      m.emplace_back(k[0], v.get<unsigned>());
    }
    out.add_term(normalize_monomial(std::move(m)), QuadExt::parse(t.at("c").get<std::string>()));
  }
  return out;
}

std::optional<MultiPoly> try_divide_exact(const MultiPoly& p, const MultiPoly& d) {
  if (d.is_zero()) throw std::domain_error("polynomial division by zero");
  MultiPoly q;
  MultiPoly r = p;
  const auto& dlead = *d.terms().begin();
  while (!r.is_zero()) {
    const auto& rlead = *r.terms().begin();
    if (!monomial_divides(dlead.first, rlead.first)) return std::nullopt;
    MultiPoly t = MultiPoly::monomial(monomial_div(rlead.first, dlead.first),
                                      rlead.second / dlead.second);
    q += t;
    r -= t * d;
  }
  return q;
}

namespace {

// Scales a nonzero polynomial to integer-primitive form with a positive
// leading (graded-lex) coefficient.
MultiPoly canonical_primitive(const MultiPoly& p) {
  if (p.is_zero()) return p;
  Rational rc(0);
  for (const auto& [m, c] : p.terms()) {
    rc = rational_gcd(rc, c.rational_part());
    rc = rational_gcd(rc, c.radical_part());
  }
  MultiPoly out = p.scaled(QuadExt(rc.inverse()));
  if (out.terms().begin()->second.sign() < 0) out = -out;
  return out;
}

MultiPoly leading_coeff_in(const MultiPoly& p, char v, int deg) {
  MultiPoly out;
  for (const auto& [m, c] : p.terms()) {
    int e = 0;
    Monomial rest;
    for (const auto& [var, exp] : m) {
      if (var == v)
        e = static_cast<int>(exp);
      else
        rest.emplace_back(var, exp);
    }
    if (e == deg) out.add_term(std::move(rest), c);
  }
  return out;
}

MultiPoly pseudo_rem(const MultiPoly& u, const MultiPoly& v, char main) {
  int dv = v.degree_in(main);
  MultiPoly lcv = leading_coeff_in(v, main, dv);
  MultiPoly r = u;
  while (!r.is_zero()) {
    int dr = r.degree_in(main);
    if (dr < dv) break;
    MultiPoly lcr = leading_coeff_in(r, main, dr);
    MultiPoly shift = dr == dv ? MultiPoly::constant(QuadExt(1))
                               : MultiPoly::monomial({{main, static_cast<unsigned>(dr - dv)}},
                                                     QuadExt(1));
    r = r * lcv - lcr * shift * v;
  }
  return r;
}

}  // namespace

MultiPoly multipoly_gcd(const MultiPoly& a, const MultiPoly& b) {
  if (a.is_zero()) return canonical_primitive(b);
  if (b.is_zero()) return canonical_primitive(a);
  if (a.is_constant() || b.is_constant()) return MultiPoly::constant(QuadExt(1));

  if (a.num_terms() == 1 || b.num_terms() == 1) {
    // gcd with a monomial is the shared monomial part.
    auto min_exps = [](const MultiPoly& p) {
      std::map<char, unsigned> mins;
      bool first = true;
      for (const auto& [m, c] : p.terms()) {
        std::map<char, unsigned> cur;
        for (const auto& [v, e] : m) cur[v] = e;
        if (first) {
          mins = cur;
          first = false;
          continue;
        }
        for (auto it = mins.begin(); it != mins.end();) {
          auto f = cur.find(it->first);
          if (f == cur.end()) {
            it = mins.erase(it);
          } else {
            it->second = std::min(it->second, f->second);
            ++it;
          }
        }
      }
      return mins;
    };
    auto ma = min_exps(a);
    auto mb = min_exps(b);
    Monomial common;
    for (const auto& [v, e] : ma) {
      auto it = mb.find(v);
      if (it != mb.end()) common.emplace_back(v, std::min(e, it->second));
    }
    return MultiPoly::monomial(normalize_monomial(std::move(common)), QuadExt(1));
  }

  std::vector<char> vars = a.variables();
  for (char v : b.variables())
    if (std::find(vars.begin(), vars.end(), v) == vars.end()) vars.push_back(v);
  std::sort(vars.begin(), vars.end(), [](char x, char y) { return var_rank(x) < var_rank(y); });

  if (vars.size() == 1) {
    UniPoly g = gcd_field(a.to_unipoly(vars[0]), b.to_unipoly(vars[0]));
    return canonical_primitive(MultiPoly::from_unipoly(g));
  }

  char main = vars.front();
  auto [ca, pa] = content_and_primitive(a, main);
  auto [cb, pb] = content_and_primitive(b, main);
  MultiPoly cg = multipoly_gcd(ca, cb);

  MultiPoly u = pa;
  MultiPoly v = pb;
  if (u.degree_in(main) < v.degree_in(main)) std::swap(u, v);
  while (true) {
    MultiPoly r = pseudo_rem(u, v, main);
    if (r.is_zero())
      return canonical_primitive(cg * content_and_primitive(v, main).second);
    if (r.degree_in(main) <= 0) return canonical_primitive(cg);
    u = std::move(v);
    v = content_and_primitive(r, main).second;
    if (u.degree_in(main) < v.degree_in(main)) std::swap(u, v);
  }
}

std::pair<MultiPoly, MultiPoly> content_and_primitive(const MultiPoly& p, char main_var) {
  if (p.is_zero()) throw std::domain_error("content of the zero polynomial");

  auto groups = p.coefficients_in(main_var);
  MultiPoly g;
  {
    std::vector<const MultiPoly*> cs;
    for (const auto& [e, c] : groups) cs.push_back(&c);
    std::sort(cs.begin(), cs.end(),
              [](const MultiPoly* x, const MultiPoly* y) { return x->num_terms() < y->num_terms(); });
    g = canonical_primitive(*cs.front());
    for (size_t i = 1; i < cs.size() && !g.is_constant(); ++i) g = multipoly_gcd(g, *cs[i]);
    if (g.is_constant()) g = MultiPoly::constant(QuadExt(1));
  }

  auto q = try_divide_exact(p, g);
  if (!q) throw std::logic_error("content does not divide its polynomial");
  MultiPoly prim = *q;

  // Integral coefficients: pull out the integer gcd as well.
  QuadExt scalar(1);
  bool integral = true;
  for (const auto& [m, c] : prim.terms())
    if (!c.rational_part().is_integer() || !c.radical_part().is_integer()) integral = false;
  if (integral) {
    BigInt ig = 0;
    for (const auto& [m, c] : prim.terms()) {
      ig = boost::multiprecision::gcd(ig, boost::multiprecision::abs(c.rational_part().num()));
      ig = boost::multiprecision::gcd(ig, boost::multiprecision::abs(c.radical_part().num()));
    }
    scalar = QuadExt(Rational(ig));
  }
  if (prim.terms().begin()->second.sign() < 0) scalar = -scalar;
  if (!scalar.is_one()) prim = prim.scaled(scalar.inverse());
  return {g.scaled(scalar), prim};
}

MultiPoly quadratic_discriminant(const MultiPoly& p, char v) {
  if (p.degree_in(v) != 2)
    throw std::invalid_argument(std::string("polynomial is not quadratic in ") + v);
  auto coeffs = p.coefficients_in(v);
  MultiPoly a = coeffs.count(2) ? coeffs[2] : MultiPoly();
  MultiPoly b = coeffs.count(1) ? coeffs[1] : MultiPoly();
  MultiPoly c = coeffs.count(0) ? coeffs[0] : MultiPoly();
  return b * b - MultiPoly::constant(QuadExt(4)) * a * c;
}

}  // namespace arcfan
