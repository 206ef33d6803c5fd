#include <random>

#include "doctest.h"
#include "graphpoly/errors.hpp"
#include "graphpoly/polynomial.hpp"

using namespace graphpoly;

namespace {

Polynomial random_poly(std::mt19937_64& rng, const std::vector<std::string>& vars, int terms = 5,
                       int maxdeg = 3) {
  std::uniform_int_distribution<int> coef(-5, 5);
  std::uniform_int_distribution<std::uint32_t> deg(0, maxdeg);
  Polynomial::Terms t;
  for (int i = 0; i < terms; ++i) {
    Polynomial::Exponents e(vars.size());
    for (auto& x : e) x = deg(rng);
    t[e] += Rational(coef(rng));
  }
  std::erase_if(t, [](const auto& kv) { return kv.second == 0; });
  return Polynomial::from_terms(vars, {t.begin(), t.end()});
}

std::map<std::string, Rational> random_point(std::mt19937_64& rng, const std::vector<std::string>& vars) {
  std::uniform_int_distribution<int> num(-7, 7);
  std::uniform_int_distribution<int> den(1, 4);
  std::map<std::string, Rational> pt;
  for (const auto& v : vars) {
    Rational q(num(rng), den(rng));
    q.canonicalize();
    pt[v] = q;
  }
  return pt;
}

}  // namespace

TEST_CASE("polynomial arithmetic basics") {
  const auto x = Polynomial::variable("x");
  CHECK((x + 1) * (x + 1) == Polynomial::parse("x^2 + 2*x + 1"));
  CHECK(((x + 1) * (x + 1)).to_string() == "x^2 + 2*x + 1");
  const auto a = Polynomial::parse("3*x*y - 2*z^2 + 7");
  CHECK((a + (-a)).is_zero());
  CHECK((a - a).to_string() == "0");
  CHECK(a.scaled(Rational(1, 2)).to_string() == Polynomial::parse("3/2*x*y - z^2 + 7/2").to_string());
  CHECK(Polynomial::parse("x^5 - 4*x^3 + 3*x").to_string() == "x^5 - 4*x^3 + 3*x");
}

TEST_CASE("normal form drops unused variables and sorts names") {
  const auto p = Polynomial::parse("y + x") - Polynomial::variable("y");
  CHECK(p.variables() == std::vector<std::string>{"x"});
  CHECK(Polynomial::parse("b*a").variables() == std::vector<std::string>{"a", "b"});
  CHECK(Polynomial::parse("b*a") == Polynomial::parse("a*b"));
}

TEST_CASE("ring laws on random polynomials") {
  std::mt19937_64 rng(11);
  const std::vector<std::string> vars{"x", "y", "z"};
  for (int i = 0; i < 100; ++i) {
    const auto a = random_poly(rng, vars);
    const auto b = random_poly(rng, {"x", "w"});
    const auto c = random_poly(rng, {"y"});
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b).has_integer_coefficients());
  }
}

TEST_CASE("substitution and evaluation") {
  const auto z_sub = Polynomial::parse("x*y*z - x*y");
  CHECK(Polynomial::parse("x^2 + z").substitute({{"z", z_sub}}) == Polynomial::parse("x^2 + x*y*z - x*y"));
  CHECK(Polynomial::parse("x^2 + 2*x + 1").substitute({{"x", Polynomial(1)}}) == Polynomial(4));
  CHECK(Polynomial::parse("x^2 - 4").evaluate({{"x", Rational(2)}}) == 0);
  CHECK_THROWS_AS(Polynomial::parse("x + y").evaluate({{"x", Rational(1)}}), DomainError);

  std::mt19937_64 rng(5);
  const std::vector<std::string> vars{"x", "y", "z"};
  for (int i = 0; i < 100; ++i) {
    const auto p = random_poly(rng, vars, 6, 4);
    const auto q = random_poly(rng, {"x", "z"}, 3, 2);
    auto pt = random_point(rng, vars);
    // substitute y -> q then evaluate equals evaluating with y := q(pt)
    const auto composed = p.substitute({{"y", q}}).evaluate(pt);
    auto pt2 = pt;
    pt2["y"] = q.evaluate(pt);
    CHECK(composed == p.evaluate(pt2));
    // y -> 0 agrees with evaluation at y = 0
    auto pt0 = pt;
    pt0["y"] = 0;
    CHECK(p.substitute({{"y", Polynomial(0)}}).evaluate(pt) == p.evaluate(pt0));
    CHECK(p.substitute({{"y", q}}).has_integer_coefficients());
  }
}

TEST_CASE("parse, print and json round trips") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 50; ++i) {
    const auto p = random_poly(rng, {"w1", "w2", "q"}, 6, 3).scaled(Rational(2, 3));
    CHECK(Polynomial::parse(p.to_string()) == p);
    CHECK(Polynomial::from_json(p.to_json()) == p);
  }
  CHECK_THROWS_AS(Polynomial::parse("x + "), ParseError);
  CHECK_THROWS_AS(Polynomial::parse("x ^ y"), ParseError);
}

TEST_CASE("bivariate interpolation") {
  std::vector<GridSample> s;
  for (int x = 0; x <= 2; ++x)
    for (int y = 0; y <= 1; ++y) s.push_back({x, y, Rational(x * x - y)});
  CHECK(interpolate_bivariate(s, 2, 1, "x", "y") == Polynomial::parse("x^2 - y"));

  std::vector<GridSample> c;
  for (int x = 0; x <= 1; ++x)
    for (int y = 0; y <= 1; ++y) c.push_back({x, y, Rational(7)});
  CHECK(interpolate_bivariate(c, 1, 1, "x", "y") == Polynomial(7));

  std::mt19937_64 rng(17);
  for (int i = 0; i < 20; ++i) {
    const auto p = random_poly(rng, {"x", "y"}, 8, 4);
    std::vector<GridSample> g;
    for (int x = 0; x <= 4; ++x)
      for (int y = 0; y <= 4; ++y)
        g.push_back({x + 3, y - 2, p.evaluate({{"x", Rational(x + 3)}, {"y", Rational(y - 2)}})});
    CHECK(interpolate_bivariate(g, 4, 4, "x", "y") == p);
  }
  auto dup = s;
  dup[1] = dup[0];
  CHECK_THROWS_AS(interpolate_bivariate(dup, 2, 1, "x", "y"), NumericRankError);
}
