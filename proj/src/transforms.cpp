#include "garding/transforms.hpp"

#include <algorithm>
#include <numeric>

namespace garding {

PositiveAffineMap::PositiveAffineMap(int m, int n, std::vector<Rational> mat, std::vector<Rational> trans,
                                     Strictness s)
    : rows(m), cols(n), matrix(std::move(mat)), translation(std::move(trans)), strictness(s) {
  if (m < 0 || n < 0 || matrix.size() != static_cast<size_t>(m) * static_cast<size_t>(n) ||
      translation.size() != static_cast<size_t>(m))
    throw PolyError("affine map dimension mismatch");
  for (const Rational& a : matrix)
    if (sgn(a) < 0) throw PolyError("positive affine map requires nonnegative matrix entries");
  if (s == Strictness::Strict) {
    for (int i = 0; i < m; ++i) {
      Rational row_sum = 0;
      for (int j = 0; j < n; ++j) row_sum += at(i, j);
      if (sgn(row_sum) <= 0) throw PolyError("strict positive affine map requires positive row sums");
    }
  }
}

PositiveAffineMap PositiveAffineMap::identity(int n) {
  std::vector<Rational> mat(static_cast<size_t>(n) * n, Rational(0));
  for (int i = 0; i < n; ++i) mat[static_cast<size_t>(i * n + i)] = 1;
  return PositiveAffineMap(n, n, std::move(mat), std::vector<Rational>(static_cast<size_t>(n), Rational(0)),
                           Strictness::Strict);
}

PositiveAffineMap PositiveAffineMap::ray(const std::vector<Rational>& direction,
                                         const std::vector<Rational>& base) {
  if (direction.size() != base.size()) throw PolyError("ray dimension mismatch");
  bool all_positive = true;
  for (const Rational& d : direction)
    if (sgn(d) <= 0) all_positive = false;
  return PositiveAffineMap(static_cast<int>(direction.size()), 1, direction, base,
                           all_positive ? Strictness::Strict : Strictness::Weak);
}

Polynomial partial_derivative(const Polynomial& f, int var) {
  if (var < 1 || var > f.nvars()) throw PolyError("derivative index out of range");
  size_t v = static_cast<size_t>(var - 1);
  Polynomial r(f.nvars());
  for (const auto& [mi, c] : f.terms()) {
    if (mi[v] == 0) continue;
    MultiIndex m = mi;
    Rational coef = c * Rational(static_cast<long>(m[v]));
    m[v] -= 1;
    r.add_term(m, coef);
  }
  return r;
}

Polynomial directional_derivative(const Polynomial& f, const std::vector<Rational>& a) {
  if (static_cast<int>(a.size()) != f.nvars()) throw PolyError("direction dimension mismatch");
  for (const Rational& ai : a)
    if (sgn(ai) < 0) throw PolyError("directional derivative requires a >= 0");
  Polynomial r(f.nvars());
  for (int i = 1; i <= f.nvars(); ++i)
    if (sgn(a[static_cast<size_t>(i - 1)]) > 0) r += a[static_cast<size_t>(i - 1)] * partial_derivative(f, i);
  return r;
}

namespace {

Polynomial poly_pow(const Polynomial& base, uint32_t e) {
  Polynomial r = Polynomial::constant(base.nvars(), 1);
  for (uint32_t k = 0; k < e; ++k) r = r * base;
  return r;
}

}  // namespace

Polynomial affine_pullback(const Polynomial& f, const PositiveAffineMap& mu) {
  if (mu.rows != f.nvars()) throw PolyError("pullback: map codomain must match f.nvars");
  int n = mu.cols;
  std::vector<Polynomial> images;
  images.reserve(static_cast<size_t>(mu.rows));
  for (int i = 0; i < mu.rows; ++i) {
    Polynomial row = Polynomial::constant(n, mu.translation[static_cast<size_t>(i)]);
    for (int j = 0; j < n; ++j) {
      const Rational& a = mu.at(i, j);
      if (sgn(a) != 0) row += a * Polynomial::variable(n, j + 1);
    }
    images.push_back(std::move(row));
  }
  Polynomial r(n);
  for (const auto& [mi, c] : f.terms()) {
    Polynomial t = Polynomial::constant(n, c);
    for (size_t i = 0; i < mi.size(); ++i)
      if (mi[i] > 0) t = t * poly_pow(images[i], mi[i]);
    r += t;
  }
  return r;
}

Polynomial restrict_var(const Polynomial& f, int var, const Rational& value) {
  if (var < 1 || var > f.nvars()) throw PolyError("restriction index out of range");
  size_t v = static_cast<size_t>(var - 1);
  Polynomial r(f.nvars());
  for (const auto& [mi, c] : f.terms()) {
    Rational coef = c;
    for (uint32_t k = 0; k < mi[v]; ++k) coef *= value;
    if (sgn(coef) == 0) continue;
    MultiIndex m = mi;
    m[v] = 0;
    r.add_term(m, coef);
  }
  return r;
}

Polynomial homogenize(const Polynomial& f) {
  if (f.is_zero()) throw PolyError("homogenization of the zero polynomial");
  unsigned d = *f.degree();
  Polynomial r(f.nvars() + 1);
  for (const auto& [mi, c] : f.terms()) {
    MultiIndex m(f.nvars() + 1);
    for (size_t i = 0; i < mi.size(); ++i) m[i] = mi[i];
    m[static_cast<size_t>(f.nvars())] = d - mi.total();
    r.add_term(m, c);
  }
  return r;
}

Polynomial top_part(const Polynomial& f) {
  if (f.is_zero()) throw PolyError("top part of the zero polynomial");
  unsigned d = *f.degree();
  Polynomial r(f.nvars());
  for (const auto& [mi, c] : f.terms())
    if (mi.total() == d) r.add_term(mi, c);
  return r;
}

Polynomial bottom_part(const Polynomial& f) {
  if (f.is_zero()) throw PolyError("bottom part of the zero polynomial");
  unsigned v = *f.order();
  Polynomial r(f.nvars());
  for (const auto& [mi, c] : f.terms())
    if (mi.total() == v) r.add_term(mi, c);
  return r;
}

Polynomial elementary_symmetric(const std::vector<Polynomial>& xs, unsigned k) {
  int n = xs.empty() ? 0 : xs[0].nvars();
  if (k > xs.size()) return Polynomial::zero(n);
  // Column-by-column update of e_0..e_k.
  std::vector<Polynomial> e(k + 1, Polynomial::zero(n));
  e[0] = Polynomial::constant(n, 1);
  for (size_t t = 0; t < xs.size(); ++t) {
    unsigned hi = std::min<unsigned>(k, static_cast<unsigned>(t) + 1);
    for (unsigned j = hi; j >= 1; --j) e[j] += xs[t] * e[j - 1];
  }
  return e[k];
}

namespace {

void check_kappa(const Polynomial& f, const std::vector<uint32_t>& kappa, bool against_multidegree) {
  if (static_cast<int>(kappa.size()) != f.nvars()) throw PolyError("kappa length mismatch");
  if (against_multidegree) {
    MultiIndex md = f.multidegree();
    for (size_t i = 0; i < kappa.size(); ++i)
      if (md[i] > kappa[i]) throw PolyError("kappa below multidegree");
  }
}

}  // namespace

Polynomial polarize(const Polynomial& f, const std::vector<uint32_t>& kappa) {
  check_kappa(f, kappa, true);
  unsigned big_n = std::accumulate(kappa.begin(), kappa.end(), 0u);
  int N = static_cast<int>(big_n);
  std::vector<unsigned> block_start(kappa.size());
  unsigned acc = 0;
  for (size_t i = 0; i < kappa.size(); ++i) {
    block_start[i] = acc;
    acc += kappa[i];
  }
  Polynomial r(N);
  for (const auto& [mi, c] : f.terms()) {
    Polynomial t = Polynomial::constant(N, c);
    for (size_t i = 0; i < mi.size(); ++i) {
      if (mi[i] == 0) continue;
      std::vector<Polynomial> block;
      for (uint32_t j = 0; j < kappa[i]; ++j)
        block.push_back(Polynomial::variable(N, static_cast<int>(block_start[i] + j + 1)));
      Polynomial sig = elementary_symmetric(block, mi[i]);
      Rational inv_binom = rat_of(1, binomial(kappa[i], mi[i]));
      t = t * (inv_binom * sig);
    }
    r += t;
  }
  return r;
}

Polynomial diagonal_project(const Polynomial& f, const std::vector<uint32_t>& kappa) {
  unsigned big_n = std::accumulate(kappa.begin(), kappa.end(), 0u);
  if (f.nvars() != static_cast<int>(big_n)) throw PolyError("block layout mismatch");
  int n = static_cast<int>(kappa.size());
  Polynomial r(n);
  for (const auto& [mi, c] : f.terms()) {
    MultiIndex m(n);
    size_t pos = 0;
    for (size_t i = 0; i < kappa.size(); ++i)
      for (uint32_t j = 0; j < kappa[i]; ++j) m[i] += mi[pos++];
    r.add_term(m, c);
  }
  return r;
}

Polynomial invert_ttau(const Polynomial& f, const std::vector<uint32_t>& kappa) {
  check_kappa(f, kappa, true);
  Polynomial r(f.nvars());
  for (const auto& [mi, c] : f.terms()) {
    MultiIndex m(f.nvars());
    for (size_t i = 0; i < mi.size(); ++i) m[i] = kappa[i] - mi[i];
    Rational coef = (mi.total() % 2 == 0) ? c : -c;
    r.add_term(m, coef);
  }
  return r;
}

Polynomial combinatorial_inversion(const Polynomial& f) {
  if (!f.is_multiaffine()) throw PolyError("combinatorial inversion requires a multi-affine input");
  Polynomial r(f.nvars());
  for (const auto& [mi, c] : f.terms()) {
    MultiIndex m(f.nvars());
    for (size_t i = 0; i < mi.size(); ++i) m[i] = 1 - mi[i];
    r.add_term(m, c);
  }
  return r;
}

Polynomial partial_symmetrize(const Polynomial& f, int i, int j, const Rational& theta) {
  if (i < 1 || j < 1 || i > f.nvars() || j > f.nvars() || i == j)
    throw PolyError("partial symmetrization needs two distinct variables");
  if (sgn(theta) < 0 || theta > 1) throw PolyError("theta out of [0,1]");
  Polynomial swapped(f.nvars());
  for (const auto& [mi, c] : f.terms()) {
    MultiIndex m = mi;
    std::swap(m[static_cast<size_t>(i - 1)], m[static_cast<size_t>(j - 1)]);
    swapped.add_term(m, c);
  }
  return (Rational(1) - theta) * f + theta * swapped;
}

Polynomial full_symmetrize(const Polynomial& f, int n_out) {
  if (n_out < 1) throw PolyError("full symmetrization target must have >= 1 variable");
  std::vector<Polynomial> ys;
  for (int j = 1; j <= n_out; ++j) ys.push_back(Polynomial::variable(n_out, j));
  Polynomial r(n_out);
  for (const auto& [mi, c] : f.terms()) {
    unsigned k = mi.total();
    if (k > static_cast<unsigned>(n_out)) throw PolyError("monomial degree exceeds symmetrization target");
    Polynomial sig = elementary_symmetric(ys, k);
    r += (c * rat_of(1, binomial(static_cast<unsigned>(n_out), k))) * sig;
  }
  return r;
}

Polynomial normalize_op(const Polynomial& f) {
  Polynomial r(f.nvars());
  for (const auto& [mi, c] : f.terms()) {
    Integer d = 1;
    for (uint32_t e : mi.e) d *= factorial(e);
    r.add_term(mi, c * rat_of(1, d));
  }
  return r;
}

Polynomial symmetric_multiplier(const Polynomial& f, const std::vector<Rational>& p) {
  for (const Rational& pi : p)
    if (sgn(pi) < 0) throw PolyError("symmetric multiplier requires p >= 0");
  if (f.support_vars().size() > 1) throw PolyError("symmetric multiplier acts on univariate polynomials");
  unsigned n = static_cast<unsigned>(p.size());
  // sigma_k(p) for k = 0..n, exact.
  std::vector<Rational> sig(n + 1, Rational(0));
  sig[0] = 1;
  for (unsigned t = 0; t < n; ++t)
    for (unsigned j = std::min(n, t + 1); j >= 1; --j) sig[j] += p[t] * sig[j - 1];
  Polynomial r(f.nvars());
  for (const auto& [mi, c] : f.terms()) {
    unsigned k = mi.total();
    if (k > n) continue;  // sigma_k = 0 beyond n
    r.add_term(mi, c * sig[k]);
  }
  return r;
}

}  // namespace garding
