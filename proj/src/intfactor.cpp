#include "arcfan/intfactor.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace arcfan {

namespace mp = boost::multiprecision;

int zz_degree(const ZPoly& f) { return static_cast<int>(f.size()) - 1; }

void zz_trim(ZPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

ZPoly zz_mul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly out(a.size() + b.size() - 1, BigInt(0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  zz_trim(out);
  return out;
}

BigInt zz_eval(const ZPoly& f, const BigInt& x) {
  BigInt acc = 0;
  for (size_t i = f.size(); i-- > 0;) acc = acc * x + f[i];
  return acc;
}

ZPoly zz_derivative(const ZPoly& f) {
  ZPoly out;
  for (size_t i = 1; i < f.size(); ++i) out.push_back(f[i] * BigInt(i));
  zz_trim(out);
  return out;
}

BigInt zz_content(const ZPoly& f) {
  BigInt g = 0;
  for (const auto& c : f) g = mp::gcd(g, mp::abs(c));
  return g;
}

ZPoly zz_primitive(ZPoly f) {
  zz_trim(f);
  if (f.empty()) return f;
  BigInt g = zz_content(f);
  if (f.back() < 0) g = -g;
  if (g != 1)
    for (auto& c : f) c /= g;
  return f;
}

std::optional<ZPoly> zz_divide_exact(const ZPoly& a, const ZPoly& b) {
  if (b.empty()) throw std::domain_error("polynomial division by zero");
  ZPoly r = a;
  zz_trim(r);
  if (r.empty()) return ZPoly{};
  if (r.size() < b.size()) return std::nullopt;
  ZPoly q(r.size() - b.size() + 1, BigInt(0));
  while (!r.empty() && r.size() >= b.size()) {
    if (r.back() % b.back() != 0) return std::nullopt;
    BigInt c = r.back() / b.back();
    size_t shift = r.size() - b.size();
    q[shift] = c;
    for (size_t i = 0; i < b.size(); ++i) r[shift + i] -= c * b[i];
    zz_trim(r);
  }
  if (!r.empty()) return std::nullopt;
  zz_trim(q);
  return q;
}

IntegerForm make_integer_primitive(const UniPoly& p) {
  if (!is_rational_poly(p)) throw std::invalid_argument("polynomial has irrational coefficients");
  if (p.is_zero()) throw std::domain_error("zero polynomial");
  BigInt lcm_den = 1;
  for (const auto& c : p.coeffs()) {
    const BigInt& d = c.rational_part().den();
    lcm_den = lcm_den / mp::gcd(lcm_den, d) * d;
  }
  ZPoly scaled;
  scaled.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs())
    scaled.push_back(c.rational_part().num() * (lcm_den / c.rational_part().den()));
  zz_trim(scaled);
  BigInt cont = zz_content(scaled);
  if (scaled.back() < 0) cont = -cont;
  for (auto& c : scaled) c /= cont;
  return {Rational(cont, lcm_den), std::move(scaled)};
}

UniPoly zz_to_unipoly(const ZPoly& f, char var) {
  std::vector<QuadExt> coeffs;
  coeffs.reserve(f.size());
  for (const auto& c : f) coeffs.emplace_back(Rational(c));
  return UniPoly::from_coeffs(var, std::move(coeffs));
}

// ---------------------------------------------------------------------------
// Arithmetic modulo a word-sized prime.

namespace {

using PVec = std::vector<std::uint64_t>;  // dense, trimmed

void ptrim(PVec& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

std::uint64_t reduce_big(const BigInt& c, std::uint64_t p) {
  BigInt r = c % p;
  if (r < 0) r += p;
  return r.convert_to<std::uint64_t>();
}

PVec reduce_poly(const ZPoly& f, std::uint64_t p) {
  PVec out;
  out.reserve(f.size());
  for (const auto& c : f) out.push_back(reduce_big(c, p));
  ptrim(out);
  return out;
}

std::uint64_t addm(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  std::uint64_t s = a + b;
  return s >= p ? s - p : s;
}
std::uint64_t subm(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return a >= b ? a - b : a + p - b;
}
std::uint64_t mulm(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(
      static_cast<unsigned __int128>(a) * b % p);
}
std::uint64_t powm(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  while (e) {
    if (e & 1) r = mulm(r, a, p);
    a = mulm(a, a, p);
    e >>= 1;
  }
  return r;
}
std::uint64_t invm(std::uint64_t a, std::uint64_t p) { return powm(a % p, p - 2, p); }

PVec pmul(const PVec& a, const PVec& b, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  PVec out(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (size_t j = 0; j < b.size(); ++j)
      out[i + j] = addm(out[i + j], mulm(a[i], b[j], p), p);
  }
  ptrim(out);
  return out;
}

PVec psub(PVec a, const PVec& b, std::uint64_t p) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (size_t i = 0; i < b.size(); ++i) a[i] = subm(a[i], b[i], p);
  ptrim(a);
  return a;
}

PVec pscale(PVec a, std::uint64_t c, std::uint64_t p) {
  for (auto& x : a) x = mulm(x, c, p);
  ptrim(a);
  return a;
}

PVec pmonic(const PVec& a, std::uint64_t p) {
  if (a.empty()) return a;
  return pscale(a, invm(a.back(), p), p);
}

std::pair<PVec, PVec> pdivmod(const PVec& a, const PVec& b, std::uint64_t p) {
  if (b.empty()) throw std::domain_error("mod-p division by zero");
  PVec r = a;
  if (r.size() < b.size()) return {{}, r};
  PVec q(r.size() - b.size() + 1, 0);
  std::uint64_t inv = invm(b.back(), p);
  while (!r.empty() && r.size() >= b.size()) {
    std::uint64_t c = mulm(r.back(), inv, p);
    size_t shift = r.size() - b.size();
    q[shift] = c;
    for (size_t i = 0; i < b.size(); ++i)
      r[shift + i] = subm(r[shift + i], mulm(c, b[i], p), p);
    ptrim(r);
  }
  ptrim(q);
  return {q, r};
}

PVec pgcd(PVec a, PVec b, std::uint64_t p) {
  while (!b.empty()) {
    PVec r = pdivmod(a, b, p).second;
    a = std::move(b);
    b = std::move(r);
  }
  return pmonic(a, p);
}

PVec ppowmod(PVec base, std::uint64_t e, const PVec& mod, std::uint64_t p) {
  PVec r = {1};
  base = pdivmod(base, mod, p).second;
  while (e) {
    if (e & 1) r = pdivmod(pmul(r, base, p), mod, p).second;
    base = pdivmod(pmul(base, base, p), mod, p).second;
    e >>= 1;
  }
  return r;
}

// Extended Euclid: s*a + t*b = 1 for coprime a, b, with deg s < deg b and
// deg t < deg a.
void pbezout(const PVec& a, const PVec& b, std::uint64_t p, PVec& s, PVec& t) {
  PVec r0 = a, r1 = b;
  PVec s0 = {1}, s1 = {};
  PVec t0 = {}, t1 = {1};
  while (!r1.empty()) {
    auto [q, r] = pdivmod(r0, r1, p);
    PVec s2 = psub(s0, pmul(q, s1, p), p);
    PVec t2 = psub(t0, pmul(q, t1, p), p);
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.size() != 1) throw std::logic_error("bezout of non-coprime polynomials");
  std::uint64_t inv = invm(r0[0], p);
  s = pscale(s0, inv, p);
  t = pscale(t0, inv, p);
}

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::uint64_t next_prime(std::uint64_t n) {
  do {
    ++n;
  } while (!is_prime_u64(n));
  return n;
}

// Berlekamp factorization of a monic squarefree polynomial over F_p.
// Deterministic; fine for small p and desk-scale degrees.
std::vector<PVec> berlekamp(const PVec& f, std::uint64_t p) {
  int n = static_cast<int>(f.size()) - 1;
  if (n <= 1) return {f};

  // Q[i] = x^(i*p) mod f as a coefficient row of length n.
  std::vector<PVec> rows(static_cast<size_t>(n));
  PVec xp = ppowmod({0, 1}, p, f, p);
  PVec cur = {1};
  for (int i = 0; i < n; ++i) {
    rows[static_cast<size_t>(i)] = cur;
    rows[static_cast<size_t>(i)].resize(static_cast<size_t>(n), 0);
    cur = pdivmod(pmul(cur, xp, p), f, p).second;
  }

  // Null space of (Q - I)^T, i.e. vectors v with v(x)^p == v(x) mod f.
  std::vector<std::vector<std::uint64_t>> m(static_cast<size_t>(n),
                                            std::vector<std::uint64_t>(static_cast<size_t>(n), 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      std::uint64_t v = rows[static_cast<size_t>(i)][static_cast<size_t>(j)];
      if (i == j) v = subm(v, 1, p);
      m[static_cast<size_t>(j)][static_cast<size_t>(i)] = v;
    }

  std::vector<int> pivot_col(static_cast<size_t>(n), -1);
  int rank = 0;
  for (int col = 0; col < n && rank < n; ++col) {
    int piv = -1;
    for (int row = rank; row < n; ++row)
      if (m[static_cast<size_t>(row)][static_cast<size_t>(col)]) {
        piv = row;
        break;
      }
    if (piv < 0) continue;
    std::swap(m[static_cast<size_t>(piv)], m[static_cast<size_t>(rank)]);
    std::uint64_t inv = invm(m[static_cast<size_t>(rank)][static_cast<size_t>(col)], p);
    for (int j = 0; j < n; ++j)
      m[static_cast<size_t>(rank)][static_cast<size_t>(j)] =
          mulm(m[static_cast<size_t>(rank)][static_cast<size_t>(j)], inv, p);
    for (int row = 0; row < n; ++row) {
      if (row == rank) continue;
      std::uint64_t c = m[static_cast<size_t>(row)][static_cast<size_t>(col)];
      if (!c) continue;
      for (int j = 0; j < n; ++j)
        m[static_cast<size_t>(row)][static_cast<size_t>(j)] =
            subm(m[static_cast<size_t>(row)][static_cast<size_t>(j)],
                 mulm(c, m[static_cast<size_t>(rank)][static_cast<size_t>(j)], p), p);
    }
    pivot_col[static_cast<size_t>(rank)] = col;
    ++rank;
  }

  std::vector<PVec> basis;
  std::vector<bool> is_pivot(static_cast<size_t>(n), false);
  for (int r = 0; r < rank; ++r) is_pivot[static_cast<size_t>(pivot_col[static_cast<size_t>(r)])] = true;
  for (int col = 0; col < n; ++col) {
    if (is_pivot[static_cast<size_t>(col)]) continue;
    PVec v(static_cast<size_t>(n), 0);
    v[static_cast<size_t>(col)] = 1;
    for (int r = 0; r < rank; ++r) {
      std::uint64_t c = m[static_cast<size_t>(r)][static_cast<size_t>(col)];
      if (c) v[static_cast<size_t>(pivot_col[static_cast<size_t>(r)])] = subm(0, c, p);
    }
    ptrim(v);
    basis.push_back(std::move(v));
  }

  size_t factor_count = basis.size();
  if (factor_count <= 1) return {f};

  std::vector<PVec> factors = {f};
  for (const PVec& v : basis) {
    if (factors.size() == factor_count) break;
    if (v.size() <= 1) continue;  // the constant vector never splits
    for (std::uint64_t c = 0; c < p && factors.size() < factor_count; ++c) {
      PVec shifted = v;
      shifted.resize(std::max<size_t>(shifted.size(), 1), 0);
      shifted[0] = subm(shifted[0], c, p);
      ptrim(shifted);
      std::vector<PVec> next;
      for (const PVec& w : factors) {
        if (w.size() <= 2) {
          next.push_back(w);
          continue;
        }
        PVec g = pgcd(w, shifted, p);
        if (g.size() <= 1 || g.size() == w.size()) {
          next.push_back(w);
        } else {
          next.push_back(g);
          next.push_back(pmonic(pdivmod(w, g, p).first, p));
        }
      }
      factors = std::move(next);
    }
  }
  std::sort(factors.begin(), factors.end());
  return factors;
}

// ---------------------------------------------------------------------------
// Hensel lifting (monic factorizations).

ZPoly zm_norm(ZPoly f, const BigInt& m) {
  for (auto& c : f) {
    c %= m;
    if (c < 0) c += m;
  }
  zz_trim(f);
  return f;
}

ZPoly zm_add(const ZPoly& a, const ZPoly& b, const BigInt& m) {
  ZPoly out = a;
  if (out.size() < b.size()) out.resize(b.size(), BigInt(0));
  for (size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  return zm_norm(std::move(out), m);
}

ZPoly zm_sub(const ZPoly& a, const ZPoly& b, const BigInt& m) {
  ZPoly out = a;
  if (out.size() < b.size()) out.resize(b.size(), BigInt(0));
  for (size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  return zm_norm(std::move(out), m);
}

ZPoly zm_mul(const ZPoly& a, const ZPoly& b, const BigInt& m) {
  return zm_norm(zz_mul(a, b), m);
}

// Division by a monic divisor in Z/m.
std::pair<ZPoly, ZPoly> zm_divmod(const ZPoly& a, const ZPoly& b, const BigInt& m) {
  if (b.empty() || b.back() != 1) throw std::logic_error("zm_divmod needs a monic divisor");
  ZPoly r = zm_norm(a, m);
  if (r.size() < b.size()) return {{}, r};
  ZPoly q(r.size() - b.size() + 1, BigInt(0));
  while (!r.empty() && r.size() >= b.size()) {
    BigInt c = r.back();
    size_t shift = r.size() - b.size();
    q[shift] = c;
    for (size_t i = 0; i < b.size(); ++i) {
      r[shift + i] -= c * b[i];
      r[shift + i] %= m;
      if (r[shift + i] < 0) r[shift + i] += m;
    }
    zz_trim(r);
  }
  zz_trim(q);
  return {q, r};
}

struct PairLift {
  ZPoly g, h, s, t;
};

// One quadratic Hensel step: modulus m -> m^2 (von zur Gathen & Gerhard,
// Alg. 15.10). F, g, h monic with F == g*h and s*g + t*h == 1 (mod m).
PairLift hensel_step(const ZPoly& F, const PairLift& L, const BigInt& m) {
  BigInt m2 = m * m;
  ZPoly e = zm_sub(F, zz_mul(L.g, L.h), m2);
  auto [q, r] = zm_divmod(zm_mul(L.s, e, m2), L.h, m2);
  ZPoly g2 = zm_add(zm_add(L.g, zm_mul(L.t, e, m2), m2), zm_mul(q, L.g, m2), m2);
  ZPoly h2 = zm_add(L.h, r, m2);
  ZPoly one = {BigInt(1)};
  ZPoly b = zm_sub(zm_add(zm_mul(L.s, g2, m2), zm_mul(L.t, h2, m2), m2), one, m2);
  auto [c, d] = zm_divmod(zm_mul(L.s, b, m2), h2, m2);
  ZPoly s2 = zm_sub(L.s, d, m2);
  ZPoly t2 = zm_sub(zm_sub(L.t, zm_mul(L.t, b, m2), m2), zm_mul(c, g2, m2), m2);
  return {g2, h2, s2, t2};
}

ZPoly lift_from_pvec(const PVec& f) {
  ZPoly out;
  out.reserve(f.size());
  for (auto c : f) out.push_back(BigInt(c));
  return out;
}

// Lifts the monic mod-p factor list of monic F to modulus p^K via a factor
// tree; returns monic factors with F == prod (mod p^K).
std::vector<ZPoly> hensel_lift_list(const ZPoly& F, const std::vector<PVec>& factors,
                                    std::uint64_t p, const BigInt& target) {
  if (factors.size() == 1) return {zm_norm(F, target)};
  size_t half = factors.size() / 2;
  PVec g0 = {1}, h0 = {1};
  for (size_t i = 0; i < half; ++i) g0 = pmul(g0, factors[i], p);
  for (size_t i = half; i < factors.size(); ++i) h0 = pmul(h0, factors[i], p);
  PVec s0, t0;
  pbezout(g0, h0, p, s0, t0);

  PairLift lift{lift_from_pvec(g0), lift_from_pvec(h0), lift_from_pvec(s0), lift_from_pvec(t0)};
  BigInt m = p;
  while (m < target) {
    lift = hensel_step(F, lift, m);
    m *= m;
  }
  ZPoly G = zm_norm(lift.g, target);
  ZPoly H = zm_norm(lift.h, target);

  std::vector<PVec> left(factors.begin(), factors.begin() + static_cast<long>(half));
  std::vector<PVec> right(factors.begin() + static_cast<long>(half), factors.end());
  std::vector<ZPoly> out = hensel_lift_list(G, left, p, target);
  std::vector<ZPoly> more = hensel_lift_list(H, right, p, target);
  out.insert(out.end(), more.begin(), more.end());
  return out;
}

ZPoly symmetric_mod(ZPoly f, const BigInt& m) {
  BigInt half = m / 2;
  for (auto& c : f) {
    c %= m;
    if (c < 0) c += m;
    if (c > half) c -= m;
  }
  zz_trim(f);
  return f;
}

bool next_combination(std::vector<size_t>& pick, size_t n) {
  size_t s = pick.size();
  size_t i = s;
  while (i-- > 0) {
    if (pick[i] + s - i < n) {
      ++pick[i];
      for (size_t j = i + 1; j < s; ++j) pick[j] = pick[j - 1] + 1;
      return true;
    }
  }
  return false;
}

// Zassenhaus for a monic squarefree integer polynomial.
std::vector<ZPoly> factor_squarefree_monic(const ZPoly& F) {
  int n = zz_degree(F);
  if (n <= 1) return {F};

  // A prime with squarefree reduction always exists among small primes.
  std::uint64_t p = 2;
  PVec fbar;
  for (;;) {
    fbar = reduce_poly(F, p);
    if (zz_degree(F) == static_cast<int>(fbar.size()) - 1) {
      PVec g = pgcd(fbar, reduce_poly(zz_derivative(F), p), p);
      if (g.size() == 1) break;
    }
    p = next_prime(p);
    if (p > 100000) throw std::logic_error("no squarefree reduction found");
  }

  std::vector<PVec> modular = berlekamp(pmonic(fbar, p), p);
  if (modular.size() == 1) return {F};

  // Landau-Mignotte style coefficient bound for monic divisors of F.
  BigInt norm_sq = 0;
  for (const auto& c : F) norm_sq += c * c;
  BigInt bound = (mp::sqrt(norm_sq) + 1) << static_cast<unsigned>(n);
  BigInt target = p;
  while (target < 2 * bound + 1) target *= p;

  std::vector<ZPoly> lifted = hensel_lift_list(zm_norm(F, target), modular, p, target);

  std::vector<ZPoly> result;
  ZPoly remaining = F;
  std::vector<size_t> live(lifted.size());
  for (size_t i = 0; i < live.size(); ++i) live[i] = i;

  size_t subset_size = 1;
  while (2 * subset_size <= live.size()) {
    bool hit = false;
    std::vector<size_t> pick(subset_size);
    for (size_t i = 0; i < subset_size; ++i) pick[i] = i;
    do {
      ZPoly prod = {BigInt(1)};
      for (size_t i : pick) prod = zm_mul(prod, lifted[live[i]], target);
      ZPoly candidate = symmetric_mod(prod, target);
      if (auto q = zz_divide_exact(remaining, candidate)) {
        result.push_back(candidate);
        remaining = *q;
        std::vector<size_t> next_live;
        for (size_t i = 0; i < live.size(); ++i)
          if (std::find(pick.begin(), pick.end(), i) == pick.end())
            next_live.push_back(live[i]);
        live = std::move(next_live);
        hit = true;
        break;
      }
    } while (next_combination(pick, live.size()));
    if (!hit) ++subset_size;
  }
  if (zz_degree(remaining) > 0) result.push_back(remaining);
  std::sort(result.begin(), result.end());
  return result;
}

// Any squarefree primitive polynomial, via monicization x -> x/lc.
std::vector<ZPoly> factor_squarefree_primitive(const ZPoly& f) {
  int n = zz_degree(f);
  if (n <= 1) return {f};
  const BigInt& lc = f.back();
  if (lc == 1) return factor_squarefree_monic(f);

  ZPoly F(f.size());
  BigInt power = 1;  // lc^(n-1-i)
  for (int i = n; i >= 0; --i) {
    F[static_cast<size_t>(i)] = f[static_cast<size_t>(i)] * power;
    if (i > 0) power *= lc;
  }
  std::vector<ZPoly> monic_factors = factor_squarefree_monic(F);

  std::vector<ZPoly> out;
  for (const ZPoly& G : monic_factors) {
    ZPoly g(G.size());
    BigInt scale = 1;
    for (size_t i = 0; i < G.size(); ++i) {
      g[i] = G[i] * scale;
      scale *= lc;
    }
    out.push_back(zz_primitive(std::move(g)));
  }
  std::sort(out.begin(), out.end());

  ZPoly check = {BigInt(1)};
  for (const auto& g : out) check = zz_mul(check, g);
  assert(check == f);
  return out;
}

}  // namespace

bool irreducible_mod_p(const ZPoly& f, std::uint64_t p) {
  if (f.empty() || f.back() % p == 0) return false;
  PVec fbar = pmonic(reduce_poly(f, p), p);
  int n = static_cast<int>(fbar.size()) - 1;
  if (n < 1) return false;
  if (n == 1) return true;
  PVec x = {0, 1};
  PVec u = x;
  for (int i = 0; i < n / 2; ++i) {
    u = ppowmod(u, p, fbar, p);
    PVec g = pgcd(fbar, psub(u, x, p), p);
    if (g.size() != 1) return false;
  }
  return true;
}

std::vector<std::uint64_t> primes_avoiding(const BigInt& avoid, size_t count) {
  std::vector<std::uint64_t> out;
  std::uint64_t p = 1;
  while (out.size() < count) {
    p = next_prime(p);
    if (avoid % p != 0) out.push_back(p);
  }
  return out;
}

std::vector<ZZFactor> factor_primitive_zz(const ZPoly& f) {
  if (zz_degree(f) < 1) throw std::domain_error("factorization needs degree >= 1");
  if (zz_content(f) != 1 || f.back() < 0)
    throw std::invalid_argument("input must be primitive with positive leading coefficient");

  // A squarefree reduction mod any good prime certifies squarefree-ness over
  // Z and skips the rational Yun pass, whose Euclid blows up on large
  // coefficients.
  {
    ZPoly fd = zz_derivative(f);
    for (std::uint64_t p : primes_avoiding(f.back(), 10)) {
      PVec fbar = reduce_poly(f, p);
      if (static_cast<int>(fbar.size()) - 1 != zz_degree(f)) continue;
      if (pgcd(fbar, reduce_poly(fd, p), p).size() == 1) {
        std::vector<ZZFactor> out;
        for (ZPoly& g : factor_squarefree_primitive(f)) out.push_back({std::move(g), 1});
        return out;
      }
    }
  }

  // Yun squarefree decomposition over Q.
  UniPoly fq = zz_to_unipoly(f, 'x');
  std::vector<std::pair<UniPoly, int>> squarefree_parts;
  {
    UniPoly d = gcd_field(fq, fq.derivative());
    if (d.is_constant()) {
      squarefree_parts.emplace_back(fq, 1);
    } else {
      UniPoly c = divmod_field(fq, d).first;
      UniPoly w = divmod_field(fq.derivative(), d).first;
      int i = 1;
      while (!c.is_constant()) {
        UniPoly y = w - c.derivative();
        UniPoly z = gcd_field(c, y);
        if (!z.is_constant()) squarefree_parts.emplace_back(z, i);
        c = divmod_field(c, z).first;
        w = divmod_field(y, z).first;
        ++i;
      }
    }
  }

  std::vector<ZZFactor> out;
  for (const auto& [part, mult] : squarefree_parts) {
    ZPoly prim = make_integer_primitive(part).prim;
    for (ZPoly& g : factor_squarefree_primitive(prim))
      out.push_back({std::move(g), mult});
  }
  std::sort(out.begin(), out.end(), [](const ZZFactor& a, const ZZFactor& b) {
    if (a.poly.size() != b.poly.size()) return a.poly.size() < b.poly.size();
    if (a.poly != b.poly) return a.poly < b.poly;
    return a.multiplicity < b.multiplicity;
  });

  ZPoly check = {BigInt(1)};
  for (const auto& zf : out)
    for (int i = 0; i < zf.multiplicity; ++i) check = zz_mul(check, zf.poly);
  if (check != f) throw std::logic_error("factorization does not reproduce its input");
  return out;
}

}  // namespace arcfan
