#ifndef GARDING_TRANSFORMS_HPP
#define GARDING_TRANSFORMS_HPP

#include <vector>

#include "garding/polynomial.hpp"

namespace garding {

enum class Strictness { Weak, Strict };

// Affine map x -> A x + b with A >= 0 entrywise (m x n). Strict maps
// additionally have a positive sum in every row, so they carry the closed
// positive orthant into itself and meet the open one.
struct PositiveAffineMap {
  int rows = 0;  // codomain dimension m
  int cols = 0;  // domain dimension n
  std::vector<Rational> matrix;       // row-major, size m*n, entries >= 0
  std::vector<Rational> translation;  // size m
  Strictness strictness = Strictness::Weak;

  PositiveAffineMap(int m, int n, std::vector<Rational> mat, std::vector<Rational> trans,
                    Strictness s = Strictness::Weak);

  const Rational& at(int i, int j) const { return matrix[static_cast<size_t>(i * cols + j)]; }

  static PositiveAffineMap identity(int n);
  // t -> direction * t + base, the one-variable ray specialization.
  static PositiveAffineMap ray(const std::vector<Rational>& direction, const std::vector<Rational>& base);
};

Polynomial partial_derivative(const Polynomial& f, int var);  // 1-based
Polynomial directional_derivative(const Polynomial& f, const std::vector<Rational>& a);

// (mu^* f)(x) = f(mu(x)); f.nvars must equal mu.rows, result has mu.cols vars.
Polynomial affine_pullback(const Polynomial& f, const PositiveAffineMap& mu);

Polynomial restrict_var(const Polynomial& f, int var, const Rational& value);

// Adds one variable y as the new last variable; H(f) = f(x/y) y^deg(f).
Polynomial homogenize(const Polynomial& f);

Polynomial top_part(const Polynomial& f);     // degree-d homogeneous component
Polynomial bottom_part(const Polynomial& f);  // vanishing-order component

// kappa-polarization: multi-affine lift into block-major variables
// x_{1,1..k1}, x_{2,1..k2}, ...; x^alpha -> prod sigma_{alpha_i}(block i)/C(k_i, alpha_i).
Polynomial polarize(const Polynomial& f, const std::vector<uint32_t>& kappa);

// kappa-projection: identify each block with one variable (left inverse of polarize).
Polynomial diagonal_project(const Polynomial& f, const std::vector<uint32_t>& kappa);

// T_tau on R_kappa: x^alpha -> (-1)^{|alpha|} x^{kappa - alpha}; an involution.
Polynomial invert_ttau(const Polynomial& f, const std::vector<uint32_t>& kappa);

// Sign-free support complementation (prod w_e) f(1/w) of a multi-affine f.
Polynomial combinatorial_inversion(const Polynomial& f);

// Linear operators of the preserver catalog.
Polynomial partial_symmetrize(const Polynomial& f, int i, int j, const Rational& theta);
Polynomial full_symmetrize(const Polynomial& f, int n_out);  // x^alpha -> sigma_{|alpha|}(y)/C(n,|alpha|)
Polynomial normalize_op(const Polynomial& f);                // x^alpha -> x^alpha / prod(alpha_i!)
Polynomial symmetric_multiplier(const Polynomial& f, const std::vector<Rational>& p);  // x^k -> sigma_k(p) x^k

// sigma_k of a list of polynomials (used by polarize and the operators).
Polynomial elementary_symmetric(const std::vector<Polynomial>& xs, unsigned k);

}  // namespace garding

#endif
