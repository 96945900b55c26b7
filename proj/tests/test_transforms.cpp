#include <doctest.h>

#include <random>

#include "garding/transforms.hpp"

using namespace garding;

namespace {

Polynomial P(const std::string& s, int nvars) { return parse_polynomial(s, nvars); }

// sigma_k over plain variables x1..xn.
Polynomial sigma(int n, unsigned k) {
  std::vector<Polynomial> xs;
  for (int i = 1; i <= n; ++i) xs.push_back(Polynomial::variable(n, i));
  return elementary_symmetric(xs, k);
}

Polynomial random_poly(std::mt19937_64& rng, int nvars, unsigned maxdeg, int nterms) {
  Polynomial f(nvars);
  std::uniform_int_distribution<int> coef(-5, 5);
  for (int t = 0; t < nterms; ++t) {
    MultiIndex mi(nvars);
    unsigned budget = maxdeg;
    for (int i = 0; i < nvars; ++i) {
      uint32_t e = static_cast<uint32_t>(rng() % (budget + 1));
      mi[static_cast<size_t>(i)] = e;
      budget -= e;
    }
    f.add_term(mi, rat(coef(rng)));
  }
  return f;
}

const std::vector<Rational> kFanoRayBase = {rat(0), rat(1), rat(-1), rat(1), rat(-1), rat(-1), rat(1)};

// B_{F7} and S_{F7} from the seven-line list.
Polynomial fano_bsgf() {
  static const int lines[7][3] = {{1, 2, 3}, {1, 4, 5}, {1, 6, 7}, {2, 4, 6}, {2, 5, 7}, {3, 4, 7}, {3, 5, 6}};
  Polynomial f = sigma(7, 3);
  for (const auto& L : lines) {
    MultiIndex mi(7);
    for (int e : L) mi[static_cast<size_t>(e - 1)] = 1;
    f.add_term(mi, rat(-1));
  }
  return f;
}

Polynomial fano_ssgf() {
  Polynomial f = fano_bsgf();
  for (unsigned k = 4; k <= 7; ++k) f += sigma(7, k);
  return f;
}

}  // namespace

TEST_CASE("partial derivatives") {
  // d/dx of (x^2+2xy+y^2)xy = y(3x^2+4xy+y^2), expanded by hand
  Polynomial f = P("x1^3*x2 + 2*x1^2*x2^2 + x1*x2^3", 2);
  CHECK(partial_derivative(f, 1) == P("3*x1^2*x2 + 4*x1*x2^2 + x2^3", 2));
  CHECK(partial_derivative(P("7", 2), 1).is_zero());
  // d/dy (f(x) y + g(x)) = f(x)
  Polynomial h = P("x1^2*x2 + 5*x2 + x1", 2);
  CHECK(partial_derivative(h, 2) == P("x1^2 + 5", 2));
  CHECK_THROWS_AS(partial_derivative(h, 3), PolyError);
}

TEST_CASE("directional derivative") {
  Polynomial f = P("x1*x2", 2);
  CHECK(directional_derivative(f, {rat(1), rat(1)}) == P("x1 + x2", 2));
  CHECK(directional_derivative(f, {rat(1), rat(0)}) == partial_derivative(f, 1));
  // sigma_2 in 3 vars along the diagonal gives 2*sigma_1
  Polynomial s2 = sigma(3, 2);
  CHECK(directional_derivative(s2, {rat(1), rat(1), rat(1)}) == rat(2) * sigma(3, 1));
  CHECK_THROWS_AS(directional_derivative(f, {rat(-1), rat(1)}), PolyError);
}

TEST_CASE("affine pullback: identity and validation") {
  Polynomial f = P("x1^2*x2 - x2 + 3", 2);
  CHECK(affine_pullback(f, PositiveAffineMap::identity(2)) == f);
  CHECK_THROWS_AS(PositiveAffineMap(1, 1, {rat(-1)}, {rat(0)}), PolyError);
  CHECK_THROWS_AS(PositiveAffineMap(1, 2, {rat(0), rat(0)}, {rat(1)}, Strictness::Strict), PolyError);
}

TEST_CASE("Prop. 14.9 rays through the Fano generating functions") {
  std::vector<Rational> ones(7, rat(1));
  auto ray = PositiveAffineMap::ray(ones, kFanoRayBase);
  CHECK(ray.strictness == Strictness::Strict);
  CHECK(affine_pullback(fano_bsgf(), ray) == parse_polynomial("28*x1^3 - 12*x1 + 4"));
  CHECK(affine_pullback(fano_ssgf(), ray) ==
        parse_polynomial("x1^7 + 7*x1^6 + 18*x1^5 + 20*x1^4 + x1^3 - 21*x1^2 - 4*x1 + 6"));
}

TEST_CASE("restriction") {
  Polynomial f = P("x1*x2 - x2", 2);  // (x-1)y
  CHECK(restrict_var(f, 1, rat(0)) == P("0 - x2", 2));
  Polynomial hf = P("x1^3 + 3*x1^2*x2 + 3*x1*x2^2", 2);
  CHECK(restrict_var(hf, 1, rat(1)) == P("3*x2^2 + 3*x2 + 1", 2));
  // restriction drops all terms containing the variable on multi-affine input
  Polynomial ma = P("x1*x2 + x1 + x2 + 1", 2);
  CHECK(restrict_var(ma, 1, rat(0)) == P("x2 + 1", 2));
}

TEST_CASE("homogenize") {
  Polynomial f = parse_polynomial("x1^3 + 3*x1^2 + 3*x1");
  CHECK(homogenize(f) == P("x1^3 + 3*x1^2*x2 + 3*x1*x2^2", 2));
  // homogeneous input stays itself (new variable absent)
  Polynomial h = P("x1^2 + x1*x2", 2);
  Polynomial hh = homogenize(h);
  CHECK(hh.nvars() == 3);
  CHECK(restrict_var(hh, 3, rat(1)) == P("x1^2 + x1*x2", 3));
  CHECK_THROWS_AS(homogenize(Polynomial::zero(1)), PolyError);
}

TEST_CASE("homogenize-restrict round trip on random inputs") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 30; ++i) {
    Polynomial f = random_poly(rng, 2, 4, 5);
    if (f.is_zero()) continue;
    Polynomial h = homogenize(f);
    Polynomial back = restrict_var(h, 3, rat(1));
    // back lives in 3 vars with the last one absent
    Polynomial expect(3);
    for (const auto& [mi, c] : f.terms()) expect.add_term({mi[0], mi[1], 0}, c);
    CHECK(back == expect);
  }
}

TEST_CASE("top and bottom parts") {
  Polynomial f = parse_polynomial("x1^2 + x1");
  CHECK(top_part(f) == parse_polynomial("x1^2"));
  CHECK(bottom_part(f) == parse_polynomial("x1"));
  CHECK_THROWS_AS(top_part(Polynomial::zero(1)), PolyError);
}

TEST_CASE("top/bottom are multiplicative") {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 30; ++i) {
    Polynomial f = random_poly(rng, 2, 3, 4);
    Polynomial g = random_poly(rng, 2, 3, 4);
    if (f.is_zero() || g.is_zero()) continue;
    CHECK(top_part(f) * top_part(g) == top_part(f * g));
    CHECK(bottom_part(f) * bottom_part(g) == bottom_part(f * g));
  }
}

TEST_CASE("polarization small cases") {
  // x^2 with kappa=(2) -> x11*x12 ; x with kappa=(2) -> (x11+x12)/2
  CHECK(polarize(parse_polynomial("x1^2"), {2}) == P("x1*x2", 2));
  CHECK(polarize(parse_polynomial("x1"), {2}) == P("1/2*x1 + 1/2*x2", 2));
  CHECK_THROWS_AS(polarize(parse_polynomial("x1^3"), {2}), PolyError);
}

TEST_CASE("diagonal projection inverts polarization") {
  CHECK(diagonal_project(P("x1*x2", 2), {2}) == parse_polynomial("x1^2"));
  Polynomial g = P("x1*x2 + x1 + 1", 2);
  CHECK(diagonal_project(polarize(g, {1, 1}), {1, 1}) == g);
  Polynomial f = parse_polynomial("x1^3 + 2*x1");
  CHECK(diagonal_project(polarize(f, {3}), {3}) == f);

  std::mt19937_64 rng(31);
  for (int i = 0; i < 25; ++i) {
    Polynomial h = random_poly(rng, 3, 4, 5);
    MultiIndex md = h.multidegree();
    std::vector<uint32_t> kappa = {md[0] + (i % 2), md[1], md[2] + 1};
    for (uint32_t& k : kappa)
      if (k == 0) k = 1;
    CHECK(diagonal_project(polarize(h, kappa), kappa) == h);
  }
}

TEST_CASE("Eq. 8.4 derivative identity for polarization") {
  // d/dx_{i,kappa_i} of polarize(g) equals (1/kappa_i) polarize_{kappa-e_i}(d/dx_i g)
  // after dropping the last slot of block i.
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 20; ++trial) {
    Polynomial g = random_poly(rng, 2, 4, 5);
    MultiIndex md = g.multidegree();
    std::vector<uint32_t> kappa = {std::max(md[0], 1u) + 1, std::max(md[1], 1u)};
    Polynomial lifted = polarize(g, kappa);
    for (int block = 0; block < 2; ++block) {
      if (kappa[static_cast<size_t>(block)] < 1) continue;
      std::vector<uint32_t> kmini = kappa;
      kmini[static_cast<size_t>(block)] -= 1;
      if (g.multidegree()[static_cast<size_t>(block)] > kmini[static_cast<size_t>(block)]) continue;
      // last variable of the block, in block-major order
      int var = 0;
      for (int b = 0; b <= block; ++b) var += static_cast<int>(kappa[static_cast<size_t>(b)]);
      Polynomial lhs_big = partial_derivative(lifted, var);
      // drop the differentiated slot: variables shift down by one past it
      int big_n = lhs_big.nvars();
      Polynomial lhs(big_n - 1);
      for (const auto& [mi, c] : lhs_big.terms()) {
        CHECK(mi[static_cast<size_t>(var - 1)] == 0);
        MultiIndex m(big_n - 1);
        for (int j = 0, out = 0; j < big_n; ++j) {
          if (j == var - 1) continue;
          m[static_cast<size_t>(out++)] = mi[static_cast<size_t>(j)];
        }
        lhs.add_term(m, c);
      }
      Polynomial rhs =
          rat_of(1, Integer(kappa[static_cast<size_t>(block)])) * polarize(partial_derivative(g, block + 1), kmini);
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("T_tau inversion") {
  CHECK(invert_ttau(parse_polynomial("x1^4 + 4*x1^3 + 6*x1^2"), {4}) == parse_polynomial("6*x1^2 - 4*x1 + 1"));
  CHECK(invert_ttau(P("1", 2), {1, 1}) == P("x1*x2", 2));
  std::mt19937_64 rng(53);
  for (int i = 0; i < 25; ++i) {
    Polynomial f = random_poly(rng, 2, 4, 5);
    MultiIndex md = f.multidegree();
    std::vector<uint32_t> kappa = {md[0] + 1, md[1]};
    CHECK(invert_ttau(invert_ttau(f, kappa), kappa) == f);
  }
}

TEST_CASE("combinatorial inversion") {
  // tau(I_M) = C_M for U_{1,2}: both sides brute forced
  Polynomial i_u12 = P("x1 + x2 + 1", 2);
  Polynomial c_u12 = P("x1*x2 + x1 + x2", 2);
  CHECK(combinatorial_inversion(i_u12) == c_u12);
  CHECK(combinatorial_inversion(P("1", 3)) == P("x1*x2*x3", 3));
  std::mt19937_64 rng(61);
  for (int i = 0; i < 25; ++i) {
    Polynomial f = random_poly(rng, 3, 1, 4);
    if (!f.is_multiaffine()) continue;
    CHECK(combinatorial_inversion(combinatorial_inversion(f)) == f);
  }
  CHECK_THROWS_AS(combinatorial_inversion(parse_polynomial("x1^2")), PolyError);
}

TEST_CASE("operator catalog") {
  // partial symmetrization with theta = 1/2 averages the swap
  CHECK(partial_symmetrize(P("x1", 2), 1, 2, rat(1, 2)) == P("1/2*x1 + 1/2*x2", 2));
  CHECK_THROWS_AS(partial_symmetrize(P("x1", 2), 1, 2, rat(3, 2)), PolyError);

  // T_sym,3 sends x^2 to sigma_2(y)/C(3,2)
  Polynomial fs = full_symmetrize(parse_polynomial("x1^2"), 3);
  CHECK(fs == rat(1, 3) * sigma(3, 2));

  CHECK(normalize_op(parse_polynomial("x1^3")) == parse_polynomial("1/6*x1^3"));
  CHECK(normalize_op(P("x1^2*x2^3", 2)) == P("1/12*x1^2*x2^3", 2));

  // symmetric multiplier: x^k -> sigma_k(p) x^k
  std::vector<Rational> p = {rat(1), rat(2)};
  CHECK(symmetric_multiplier(parse_polynomial("x1^2 + x1 + 1"), p) ==
        parse_polynomial("2*x1^2 + 3*x1 + 1"));
  CHECK_THROWS_AS(symmetric_multiplier(parse_polynomial("x1"), {rat(-1)}), PolyError);
}
