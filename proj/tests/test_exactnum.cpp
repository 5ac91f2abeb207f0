#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <stdexcept>

#include "arcfan/quadext.hpp"

using namespace arcfan;

namespace {
Rational random_rational(std::mt19937& rng) {
  std::uniform_int_distribution<long long> num(-50, 50);
  std::uniform_int_distribution<long long> den(1, 30);
  return Rational(BigInt(num(rng)), BigInt(den(rng)));
}
}  // namespace

TEST_CASE("rational arithmetic basics") {
  CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
  CHECK(Rational(2, 4) * Rational(1, 1) == Rational(1, 2));
  CHECK_THROWS_AS(Rational(3, 4) / Rational(0), std::domain_error);
  CHECK(Rational(-4, -6) == Rational(2, 3));
  CHECK(Rational(4, -6) == Rational(-2, 3));
  CHECK(Rational(4, -6).den() == 3);
}

TEST_CASE("rational parse and print") {
  CHECK(Rational::parse("5/6").str() == "5/6");
  CHECK(Rational::parse("-12/8").str() == "-3/2");
  CHECK(Rational::parse("7").str() == "7");
  CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("abc"), std::invalid_argument);
}

TEST_CASE("rational field properties on random values") {
  std::mt19937 rng(12345);
  for (int i = 0; i < 1000; ++i) {
    Rational r = random_rational(rng);
    Rational s = random_rational(rng);
    CHECK((r + s) - s == r);
    if (!s.is_zero()) CHECK((r * s) / s == r);
  }
}

TEST_CASE("rational pow and ordering") {
  CHECK(Rational(2, 3).pow(3) == Rational(8, 27));
  CHECK(Rational(2, 3).pow(-2) == Rational(9, 4));
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1, 2) < Rational(1, 3));
}

TEST_CASE("quadratic extension arithmetic") {
  QuadExt a(Rational(1), Rational(1), 2);   // 1 + sqrt(2)
  QuadExt b(Rational(1), Rational(-1), 2);  // 1 - sqrt(2)
  CHECK(a * b == QuadExt(-1));

  QuadExt half_sqrt3(Rational(0), Rational(1, 2), 3);
  CHECK(half_sqrt3 * half_sqrt3 == QuadExt(Rational(3, 4)));

  CHECK_THROWS_AS(a / QuadExt(0), std::domain_error);
  QuadExt c(Rational(0), Rational(1), 3);
  CHECK_THROWS_AS(a + c, std::domain_error);
}

TEST_CASE("quadratic extension canonical form") {
  // radicand square parts are extracted at construction
  QuadExt q(Rational(0), Rational(1), 8);  // sqrt(8) = 2*sqrt(2)
  CHECK(q.radicand() == 2);
  CHECK(q.radical_part() == Rational(2));
  // a radicand that is a perfect square collapses to a rational
  QuadExt r(Rational(1), Rational(3), 9);
  CHECK(r.is_rational());
  CHECK(r.rational_part() == Rational(10));
}

TEST_CASE("quadratic extension inverse on random values") {
  std::mt19937 rng(999);
  for (int i = 0; i < 500; ++i) {
    QuadExt e(random_rational(rng), random_rational(rng), 5);
    if (e.is_zero()) continue;
    CHECK(e * e.inverse() == QuadExt(1));
  }
}

TEST_CASE("quadratic extension sign and order") {
  QuadExt x(Rational(-1), Rational(1), 2);  // sqrt(2) - 1 > 0
  CHECK(x.sign() == 1);
  QuadExt y(Rational(3), Rational(-2), 2);  // 3 - 2*sqrt(2) > 0
  CHECK(y.sign() == 1);
  QuadExt z(Rational(1), Rational(-1), 2);  // 1 - sqrt(2) < 0
  CHECK(z.sign() == -1);
  CHECK(z < x);
}

TEST_CASE("quadratic extension exact square roots") {
  QuadExt v(Rational(3), Rational(2), 2);  // 3 + 2*sqrt(2) = (1 + sqrt(2))^2
  auto s = v.sqrt_in(2);
  REQUIRE(s.has_value());
  CHECK(*s * *s == v);
  CHECK(s->sign() > 0);

  CHECK(QuadExt(Rational(9, 4)).sqrt_in(0).value() == QuadExt(Rational(3, 2)));
  CHECK(!QuadExt(Rational(2)).sqrt_in(0).has_value());
  CHECK(QuadExt(Rational(2)).sqrt_in(2).value() == QuadExt(Rational(0), Rational(1), 2));
  CHECK(!QuadExt(Rational(-1)).sqrt_in(2).has_value());
}

TEST_CASE("scalar parse round trip") {
  for (const char* text : {"1/2", "-3", "2/3*sqrt(2)", "1/2+1/3*sqrt(5)", "-1/2-sqrt(3)",
                           "sqrt(2)", "-sqrt(7)", "(1/2-1/3*sqrt(2))"}) {
    QuadExt v = QuadExt::parse(text);
    CHECK(QuadExt::parse(v.str()) == v);
  }
  CHECK(QuadExt::parse("sqrt(2)/2") == QuadExt(Rational(0), Rational(1, 2), 2));
  CHECK(QuadExt::parse("sqrt(4)") == QuadExt(2));
  CHECK_THROWS_AS(QuadExt::parse("sqrt(-2)"), std::invalid_argument);
  CHECK_THROWS_AS(QuadExt::parse(""), std::invalid_argument);
}

TEST_CASE("rationalize_radicand builds i^(1/m)/j") {
  CHECK(rationalize_radicand(1, 2, 1) == QuadExt(Rational(1, 2)));
  CHECK(rationalize_radicand(4, 3, 2) == QuadExt(Rational(2, 3)));
  CHECK(rationalize_radicand(8, 3, 2) == QuadExt(Rational(0), Rational(2, 3), 2));
  CHECK_THROWS_AS(rationalize_radicand(2, 2, 1), std::invalid_argument);
  CHECK_THROWS_AS(rationalize_radicand(0, 2, 1), std::invalid_argument);
  CHECK_THROWS_AS(rationalize_radicand(1, 2, 3), std::invalid_argument);
}

TEST_CASE("rationalize_radicand squares back to i/j^2") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<long long> jd(1, 40);
  for (int t = 0; t < 400; ++t) {
    long long j = jd(rng);
    if (j * j <= 1) continue;
    std::uniform_int_distribution<long long> id(1, j * j - 1);
    long long i = id(rng);
    QuadExt w = rationalize_radicand(i, j, 2);
    CHECK(w * w == QuadExt(Rational(i, j * j)));
    CHECK(w.sign() > 0);
  }
}
