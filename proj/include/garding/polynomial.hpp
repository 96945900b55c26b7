#ifndef GARDING_POLYNOMIAL_HPP
#define GARDING_POLYNOMIAL_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "garding/rational.hpp"

namespace garding {

// Exponent vector of a monomial; length always equals the ambient nvars.
struct MultiIndex {
  std::vector<uint32_t> e;

  MultiIndex() = default;
  explicit MultiIndex(int nvars) : e(static_cast<size_t>(nvars), 0) {}
  MultiIndex(std::initializer_list<uint32_t> init) : e(init) {}

  size_t size() const { return e.size(); }
  uint32_t operator[](size_t i) const { return e[i]; }
  uint32_t& operator[](size_t i) { return e[i]; }
  unsigned total() const;  // |alpha|
  bool operator==(const MultiIndex& o) const { return e == o.e; }
};

// Graded lexicographic: compare |alpha| first, then lex on exponents.
struct GradedLexLess {
  bool operator()(const MultiIndex& a, const MultiIndex& b) const;
};

class PolyError : public std::runtime_error {
 public:
  explicit PolyError(const std::string& what) : std::runtime_error(what) {}
};

class ParseError : public PolyError {
 public:
  ParseError(const std::string& what, size_t position)
      : PolyError(what + " (at position " + std::to_string(position) + ")"), pos(position) {}
  size_t pos;
};

// Sparse multivariate polynomial over Q. Terms never store zero
// coefficients and every key has length nvars.
class Polynomial {
 public:
  using TermMap = std::map<MultiIndex, Rational, GradedLexLess>;

  explicit Polynomial(int nvars = 0);

  static Polynomial zero(int nvars) { return Polynomial(nvars); }
  static Polynomial constant(int nvars, const Rational& c);
  static Polynomial variable(int nvars, int var);  // var is 1-based
  static Polynomial monomial(int nvars, MultiIndex mi, const Rational& c);

  int nvars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  // Degree of the zero polynomial is "none", not a sentinel.
  std::optional<unsigned> degree() const;
  // Vanishing order at 0 (degree of the bottom homogeneous part).
  std::optional<unsigned> order() const;
  // Per-variable maximal exponent kappa_f; all zeros for constants.
  MultiIndex multidegree() const;

  bool is_constant() const;
  bool is_multiaffine() const;
  bool is_homogeneous() const;

  Rational coeff(const MultiIndex& mi) const;
  Rational constant_term() const;
  void add_term(const MultiIndex& mi, const Rational& c);  // accumulates

  // 1-based indices of variables that actually occur.
  std::vector<int> support_vars() const;

  Rational eval(std::span<const Rational> point) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Rational& c, const Polynomial& f);
  bool operator==(const Polynomial& o) const;

 private:
  int nvars_;
  TermMap terms_;
  void check_same_space(const Polynomial& o) const;
};

// Text grammar:
//   expr  := ['+'|'-'] term (('+'|'-') term)*
//   term  := factor ('*' factor)*
//   factor:= coeff | var ('^' uint)?
//   coeff := int ('/' posint)?
//   var   := 'x' [uint]        (bare "x" means x1)
// If nvars is not given it is inferred as the largest variable index seen
// (at least 1). Formatting prints terms in descending graded-lex order, so
// parse(format(f)) == f.
Polynomial parse_polynomial(const std::string& text, std::optional<int> nvars = std::nullopt);
std::string format_polynomial(const Polynomial& f);

// JSON form: {"nvars": n, "terms": [{"exp": [..], "coef": "p/q"}, ...]}
std::string polynomial_to_json(const Polynomial& f);
Polynomial polynomial_from_json(const std::string& json_text);

}  // namespace garding

#endif
