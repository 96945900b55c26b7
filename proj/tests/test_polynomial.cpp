#include <doctest.h>

#include <random>

#include "garding/polynomial.hpp"

using namespace garding;

namespace {

Polynomial P(const std::string& s, int nvars) { return parse_polynomial(s, nvars); }

Polynomial random_poly(std::mt19937_64& rng, int nvars, unsigned maxdeg, int nterms) {
  Polynomial f(nvars);
  std::uniform_int_distribution<int> coef(-6, 6);
  std::uniform_int_distribution<int> den(1, 4);
  std::uniform_int_distribution<uint32_t> exp(0, maxdeg);
  for (int t = 0; t < nterms; ++t) {
    MultiIndex mi(nvars);
    unsigned budget = maxdeg;
    for (int i = 0; i < nvars; ++i) {
      uint32_t e = exp(rng) % (budget + 1);
      mi[static_cast<size_t>(i)] = e;
      budget -= e;
    }
    f.add_term(mi, rat(coef(rng), den(rng)));
  }
  return f;
}

}  // namespace

TEST_CASE("parse basic grammar") {
  Polynomial f = P("x1*x2 - 1", 3);
  CHECK(f.nvars() == 3);
  CHECK(f.coeff({1, 1, 0}) == rat(1));
  CHECK(f.coeff({0, 0, 0}) == rat(-1));
  CHECK(f.terms().size() == 2);

  Polynomial g = parse_polynomial("3/2*x1^2");
  CHECK(g.nvars() == 1);
  CHECK(g.coeff({2}) == rat(3, 2));

  // cancellation yields the canonical empty zero polynomial
  Polynomial z = parse_polynomial("x1 - x1");
  CHECK(z.is_zero());
  CHECK(!z.degree().has_value());

  // bare x means x1
  CHECK(parse_polynomial("x^3+9*x^2+24*x+21") == parse_polynomial("x1^3+9*x1^2+24*x1+21"));
}

TEST_CASE("parse errors carry position info") {
  CHECK_THROWS_AS(parse_polynomial(""), ParseError);
  CHECK_THROWS_AS(parse_polynomial("x1 +"), ParseError);
  CHECK_THROWS_AS(parse_polynomial("x1 $ x2"), ParseError);
  CHECK_THROWS_AS(parse_polynomial("x5", 3), ParseError);  // out of declared range
  CHECK_THROWS_AS(parse_polynomial("x0"), ParseError);
}

TEST_CASE("format round trip is identity on canonical form") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 60; ++i) {
    Polynomial f = random_poly(rng, 3, 4, 6);
    if (f.is_zero()) continue;
    Polynomial g = parse_polynomial(format_polynomial(f), f.nvars());
    CHECK(f == g);
  }
  CHECK(format_polynomial(Polynomial::zero(2)) == "0");
  CHECK(format_polynomial(P("x1^2 - 1", 1)) == "x1^2 - 1");
}

TEST_CASE("json round trip") {
  Polynomial f = P("2*x1^2*x3 - 7/3*x2 + 1", 3);
  Polynomial g = polynomial_from_json(polynomial_to_json(f));
  CHECK(f == g);
}

TEST_CASE("arith basics") {
  Polynomial f = parse_polynomial("x1+1");
  Polynomial g = parse_polynomial("x1-1");
  CHECK(f * g == parse_polynomial("x1^2-1"));
  CHECK((rat(0) * f).is_zero());
  CHECK_THROWS_AS(P("x1", 1) + P("x1", 2), PolyError);
}

TEST_CASE("Eq. B.2 identity holds exactly") {
  // (xy+z-2)(yz+x-2)(xz+y-2) - (xyz-1)(x+y+z-3)^2 == (x-1)^2 (y-1)^2 (z-1)^2
  int n = 3;
  Polynomial lhs = P("x1*x2 + x3 - 2", n) * P("x2*x3 + x1 - 2", n) * P("x1*x3 + x2 - 2", n) -
                   P("x1*x2*x3 - 1", n) * P("x1 + x2 + x3 - 3", n) * P("x1 + x2 + x3 - 3", n);
  Polynomial rhs = P("x1^2 - 2*x1 + 1", n) * P("x2^2 - 2*x2 + 1", n) * P("x3^2 - 2*x3 + 1", n);
  CHECK(lhs == rhs);
}

TEST_CASE("degree conventions and multidegree") {
  CHECK(!Polynomial::zero(2).degree().has_value());
  CHECK(*P("5", 2).degree() == 0);
  Polynomial f = P("x1^2*x2 + x2^3", 2);
  CHECK(*f.degree() == 3);
  CHECK(*f.order() == 3);
  MultiIndex k = f.multidegree();
  CHECK(k[0] == 2);
  CHECK(k[1] == 3);
  CHECK(!f.is_multiaffine());
  CHECK(P("x1*x2 + x1 + 1", 2).is_multiaffine());
  CHECK(f.is_homogeneous());
  CHECK(!P("x1 + 1", 1).is_homogeneous());
}

TEST_CASE("evaluation") {
  Polynomial f = P("x1^2 + 2*x2 - 1/2", 2);
  std::vector<Rational> pt = {rat(3), rat(1, 2)};
  CHECK(f.eval(pt) == rat(19, 2));
}

TEST_CASE("ring laws on random polynomials") {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 40; ++i) {
    Polynomial a = random_poly(rng, 2, 3, 4);
    Polynomial b = random_poly(rng, 2, 3, 4);
    Polynomial c = random_poly(rng, 2, 3, 4);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a - a).is_zero());
  }
}
