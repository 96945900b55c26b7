#ifndef GARDING_REALROOTS_HPP
#define GARDING_REALROOTS_HPP

#include <optional>
#include <utility>
#include <vector>

#include "garding/polynomial.hpp"

namespace garding {

// Dense univariate polynomial over Q; coeffs[i] is the x^i coefficient and
// the top coefficient is nonzero (empty vector = zero polynomial). Root
// isolation wants this representation, not the sparse one.
struct UPoly {
  std::vector<Rational> c;

  UPoly() = default;
  explicit UPoly(std::vector<Rational> coeffs);

  bool is_zero() const { return c.empty(); }
  int degree() const { return static_cast<int>(c.size()) - 1; }  // -1 for zero
  const Rational& lc() const { return c.back(); }
  Rational eval(const Rational& x) const;
  UPoly derivative() const;
  bool operator==(const UPoly& o) const { return c == o.c; }
};

// Extracts the single effective variable of f (errors when f genuinely
// depends on more than one).
UPoly to_univariate(const Polynomial& f);
Polynomial from_univariate(const UPoly& f, int nvars = 1, int var = 1);

UPoly upoly_add(const UPoly& a, const UPoly& b);
UPoly upoly_sub(const UPoly& a, const UPoly& b);
UPoly upoly_mul(const UPoly& a, const UPoly& b);
UPoly upoly_scale(const Rational& s, const UPoly& a);
// Euclidean remainder and monic gcd.
UPoly upoly_rem(UPoly a, const UPoly& b);
UPoly upoly_gcd(UPoly a, UPoly b);
UPoly squarefree_part(const UPoly& f);
// Yun decomposition: f = lc * prod fac[i].first ^ fac[i].second with the
// factors squarefree and pairwise coprime.
std::vector<std::pair<UPoly, int>> squarefree_decomposition(const UPoly& f);

// Exactly represented real algebraic number: a squarefree defining
// polynomial with exactly one root in [lo, hi]; lo == hi encodes a rational
// point and otherwise the open interval excludes roots at endpoints.
class AlgebraicNumber {
 public:
  static AlgebraicNumber from_rational(const Rational& q);
  static AlgebraicNumber from_root(UPoly squarefree_defining, Rational lo, Rational hi);

  bool is_rational() const { return lo_ == hi_; }
  const Rational& rational_value() const;
  const UPoly& defining() const { return defining_; }
  std::pair<Rational, Rational> interval() const { return {lo_, hi_}; }
  int sign() const;

  // Halves the interval width; refinement mutates this value only.
  void refine() const;
  void refine_below(const Rational& width) const;

  std::string str() const;  // decimal-ish display with exact fallback

 private:
  AlgebraicNumber() = default;
  UPoly defining_;  // squarefree; for rational points: x - q
  mutable Rational lo_, hi_;
};

// Exact order; ties are decided through gcd common roots, never by interval
// refinement alone, so equal numbers terminate.
int compare(const AlgebraicNumber& a, const AlgebraicNumber& b);  // -1, 0, 1
int compare(const AlgebraicNumber& a, const Rational& b);

// Exact sign of g at an algebraic point.
int sign_at(const UPoly& g, const AlgebraicNumber& x);

struct IsolatedRoot {
  AlgebraicNumber value;
  int multiplicity;
};

// All distinct real roots in increasing order with pairwise disjoint
// isolating intervals; multiplicities from the squarefree decomposition.
std::vector<IsolatedRoot> isolate_real_roots(const UPoly& f);
std::vector<IsolatedRoot> isolate_real_roots(const Polynomial& f);

std::optional<AlgebraicNumber> largest_real_root(const UPoly& f);
std::optional<AlgebraicNumber> largest_real_root(const Polynomial& f);

// Entries for f, f', ..., f^{(d-1)}; an entry is empty when that derivative
// has no real root.
struct RootSequence {
  std::vector<std::optional<AlgebraicNumber>> entries;
};

RootSequence root_sequence(const UPoly& f);
RootSequence root_sequence(const Polynomial& f);

struct MrsResult {
  bool holds;
  RootSequence sequence;
  enum class Failure { None, NegativeConstant, NegativeLeading, MissingRoot, OrderViolation };
  Failure failure = Failure::None;
  int index = -1;  // derivative order at fault
};

// Monotone-root-sequence test; with positive leading coefficient this is
// exactly the univariate Garding / right-Noetherian property. Constants
// c >= 0 hold vacuously, c < 0 fail.
MrsResult mrs_check(const UPoly& f);
MrsResult mrs_check(const Polynomial& f);

// True iff the real roots counted with multiplicity exhaust the degree.
bool real_rooted_check(const UPoly& f);
bool real_rooted_check(const Polynomial& f);

// Ex. 9.13 constructor: f_d = 1, f_k = int_{r_k}^x f_{k+1}; requires a
// nonincreasing rational sequence and realizes it as the root sequence.
Polynomial from_root_sequence(const std::vector<Rational>& roots);

// Number of real roots of the squarefree part in (lo, hi].
int count_roots_in(const UPoly& squarefree, const Rational& lo, const Rational& hi);

Rational cauchy_root_bound(const UPoly& f);

}  // namespace garding

#endif
