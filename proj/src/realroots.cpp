#include "garding/realroots.hpp"

#include <algorithm>
#include <sstream>

namespace garding {

UPoly::UPoly(std::vector<Rational> coeffs) : c(std::move(coeffs)) {
  while (!c.empty() && sgn(c.back()) == 0) c.pop_back();
}

Rational UPoly::eval(const Rational& x) const {
  Rational acc = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

UPoly UPoly::derivative() const {
  if (c.size() <= 1) return UPoly();
  std::vector<Rational> d(c.size() - 1);
  for (size_t i = 1; i < c.size(); ++i) d[i - 1] = Rational(static_cast<long>(i)) * c[i];
  return UPoly(std::move(d));
}

UPoly to_univariate(const Polynomial& f) {
  auto vars = f.support_vars();
  if (vars.size() > 1) throw PolyError("polynomial is not univariate");
  int v = vars.empty() ? 1 : vars[0];
  size_t vi = static_cast<size_t>(v - 1);
  unsigned d = f.is_zero() ? 0 : *f.degree();
  std::vector<Rational> c(d + 1, Rational(0));
  for (const auto& [mi, coef] : f.terms()) c[mi[vi]] = coef;
  return UPoly(std::move(c));
}

Polynomial from_univariate(const UPoly& f, int nvars, int var) {
  Polynomial r(nvars);
  for (size_t i = 0; i < f.c.size(); ++i) {
    if (sgn(f.c[i]) == 0) continue;
    MultiIndex mi(nvars);
    mi[static_cast<size_t>(var - 1)] = static_cast<uint32_t>(i);
    r.add_term(mi, f.c[i]);
  }
  return r;
}

UPoly upoly_add(const UPoly& a, const UPoly& b) {
  std::vector<Rational> c(std::max(a.c.size(), b.c.size()), Rational(0));
  for (size_t i = 0; i < a.c.size(); ++i) c[i] += a.c[i];
  for (size_t i = 0; i < b.c.size(); ++i) c[i] += b.c[i];
  return UPoly(std::move(c));
}

UPoly upoly_sub(const UPoly& a, const UPoly& b) {
  std::vector<Rational> c(std::max(a.c.size(), b.c.size()), Rational(0));
  for (size_t i = 0; i < a.c.size(); ++i) c[i] += a.c[i];
  for (size_t i = 0; i < b.c.size(); ++i) c[i] -= b.c[i];
  return UPoly(std::move(c));
}

UPoly upoly_mul(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return UPoly();
  std::vector<Rational> c(a.c.size() + b.c.size() - 1, Rational(0));
  for (size_t i = 0; i < a.c.size(); ++i)
    for (size_t j = 0; j < b.c.size(); ++j) c[i + j] += a.c[i] * b.c[j];
  return UPoly(std::move(c));
}

UPoly upoly_scale(const Rational& s, const UPoly& a) {
  if (sgn(s) == 0) return UPoly();
  std::vector<Rational> c = a.c;
  for (Rational& x : c) x *= s;
  return UPoly(std::move(c));
}

UPoly upoly_rem(UPoly a, const UPoly& b) {
  if (b.is_zero()) throw PolyError("division by zero polynomial");
  while (!a.is_zero() && a.degree() >= b.degree()) {
    Rational q = a.lc() / b.lc();
    size_t shift = static_cast<size_t>(a.degree() - b.degree());
    for (size_t i = 0; i < b.c.size(); ++i) a.c[i + shift] -= q * b.c[i];
    while (!a.c.empty() && sgn(a.c.back()) == 0) a.c.pop_back();
  }
  return a;
}

namespace {

UPoly make_monic(UPoly f) {
  if (f.is_zero()) return f;
  Rational inv = 1 / f.lc();
  for (Rational& x : f.c) x *= inv;
  return f;
}

// Exact quotient; remainder must be zero (used inside gcd-based factorizations).
UPoly upoly_div_exact(UPoly a, const UPoly& b) {
  if (b.is_zero()) throw PolyError("division by zero polynomial");
  if (a.is_zero()) return UPoly();
  std::vector<Rational> q(static_cast<size_t>(a.degree() - b.degree()) + 1, Rational(0));
  while (!a.is_zero() && a.degree() >= b.degree()) {
    Rational f = a.lc() / b.lc();
    size_t shift = static_cast<size_t>(a.degree() - b.degree());
    q[shift] = f;
    for (size_t i = 0; i < b.c.size(); ++i) a.c[i + shift] -= f * b.c[i];
    while (!a.c.empty() && sgn(a.c.back()) == 0) a.c.pop_back();
  }
  if (!a.is_zero()) throw PolyError("inexact polynomial division");
  return UPoly(std::move(q));
}

}  // namespace

UPoly upoly_gcd(UPoly a, UPoly b) {
  while (!b.is_zero()) {
    UPoly r = upoly_rem(std::move(a), b);
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(std::move(a));
}

UPoly squarefree_part(const UPoly& f) {
  if (f.is_zero() || f.degree() == 0) return make_monic(f);
  UPoly g = upoly_gcd(f, f.derivative());
  return make_monic(upoly_div_exact(f, g));
}

std::vector<std::pair<UPoly, int>> squarefree_decomposition(const UPoly& f) {
  // Yun's algorithm over Q (characteristic zero).
  std::vector<std::pair<UPoly, int>> out;
  if (f.is_zero() || f.degree() == 0) return out;
  UPoly fp = f.derivative();
  UPoly a = upoly_gcd(f, fp);
  UPoly b = upoly_div_exact(f, a);
  UPoly c = upoly_div_exact(fp, a);
  UPoly d = upoly_sub(c, b.derivative());
  int i = 1;
  while (b.degree() > 0) {
    UPoly g = upoly_gcd(b, d);
    if (g.degree() > 0) out.emplace_back(g, i);
    b = upoly_div_exact(b, g);
    UPoly cq = upoly_div_exact(d, g);
    d = upoly_sub(cq, b.derivative());
    ++i;
  }
  return out;
}

Rational cauchy_root_bound(const UPoly& f) {
  if (f.is_zero() || f.degree() == 0) return 1;
  Rational m = 0;
  for (int i = 0; i < f.degree(); ++i) {
    Rational r = abs(f.c[static_cast<size_t>(i)] / f.lc());
    if (r > m) m = r;
  }
  return m + 1;
}

namespace {

// Sign variation count of a Sturm chain evaluated at x (or at +/-inf).
struct SturmChain {
  std::vector<UPoly> seq;

  explicit SturmChain(const UPoly& squarefree) {
    seq.push_back(squarefree);
    UPoly d = squarefree.derivative();
    if (!d.is_zero()) {
      seq.push_back(d);
      while (true) {
        UPoly r = upoly_rem(seq[seq.size() - 2], seq.back());
        if (r.is_zero()) break;
        for (Rational& x : r.c) x = -x;
        seq.push_back(std::move(r));
      }
    }
  }

  static int count_changes(const std::vector<int>& signs) {
    int changes = 0, prev = 0;
    for (int s : signs) {
      if (s == 0) continue;
      if (prev != 0 && s != prev) ++changes;
      prev = s;
    }
    return changes;
  }

  int variations_at(const Rational& x) const {
    std::vector<int> signs;
    signs.reserve(seq.size());
    for (const UPoly& p : seq) signs.push_back(sgn(p.eval(x)));
    return count_changes(signs);
  }

  int variations_at_infinity(int direction) const {  // +1 or -1
    std::vector<int> signs;
    signs.reserve(seq.size());
    for (const UPoly& p : seq) {
      if (p.is_zero()) {
        signs.push_back(0);
        continue;
      }
      int s = sgn(p.lc());
      if (direction < 0 && p.degree() % 2 == 1) s = -s;
      signs.push_back(s);
    }
    return count_changes(signs);
  }

  // Roots in (lo, hi].
  int count(const Rational& lo, const Rational& hi) const { return variations_at(lo) - variations_at(hi); }
};

}  // namespace

int count_roots_in(const UPoly& squarefree, const Rational& lo, const Rational& hi) {
  return SturmChain(squarefree).count(lo, hi);
}

AlgebraicNumber AlgebraicNumber::from_rational(const Rational& q) {
  AlgebraicNumber a;
  a.defining_ = UPoly({-q, Rational(1)});
  a.lo_ = a.hi_ = q;
  return a;
}

AlgebraicNumber AlgebraicNumber::from_root(UPoly squarefree_defining, Rational lo, Rational hi) {
  AlgebraicNumber a;
  a.defining_ = std::move(squarefree_defining);
  a.lo_ = std::move(lo);
  a.hi_ = std::move(hi);
  return a;
}

const Rational& AlgebraicNumber::rational_value() const {
  if (!is_rational()) throw PolyError("algebraic number is not refined to a rational point");
  return lo_;
}

int AlgebraicNumber::sign() const {
  if (is_rational()) return sgn(lo_);
  if (sgn(lo_) >= 0) return 1;
  if (sgn(hi_) <= 0) return -1;
  // Interval straddles zero: 0 is not a root of the defining polynomial
  // inside the open interval unless it is the root itself.
  if (sgn(defining_.eval(Rational(0))) == 0) {
    lo_ = hi_ = 0;
    return 0;
  }
  // Exactly one root in (lo, hi); locate it relative to 0.
  if (count_roots_in(defining_, lo_, Rational(0)) == 1) {
    hi_ = 0;
    return -1;
  }
  lo_ = 0;
  return 1;
}

void AlgebraicNumber::refine() const {
  if (is_rational()) return;
  Rational mid = (lo_ + hi_) / 2;
  int s = sgn(defining_.eval(mid));
  if (s == 0) {
    lo_ = hi_ = mid;
    return;
  }
  if (count_roots_in(defining_, lo_, mid) == 1)
    hi_ = mid;
  else
    lo_ = mid;
}

void AlgebraicNumber::refine_below(const Rational& width) const {
  while (!is_rational() && hi_ - lo_ >= width) refine();
}

std::string AlgebraicNumber::str() const {
  if (is_rational()) return rational_str(lo_);
  refine_below(rat(1, 1000000));
  std::ostringstream out;
  out << "~" << ((lo_ + hi_) / 2).get_d();
  return out.str();
}

int compare(const AlgebraicNumber& a, const AlgebraicNumber& b) {
  if (a.is_rational() && b.is_rational()) return cmp(a.rational_value(), b.rational_value());
  if (a.is_rational()) {
    const Rational& q = a.rational_value();
    auto [blo, bhi] = b.interval();
    // Non-point intervals have non-root endpoints, so the closed test is safe.
    if (blo <= q && q <= bhi && sgn(b.defining().eval(q)) == 0) return 0;
    while (true) {
      auto [lo, hi] = b.interval();
      if (b.is_rational()) return cmp(q, b.rational_value());
      if (q <= lo) return -1;  // b's root lies in the open interval above lo
      if (q >= hi) return 1;
      b.refine();
    }
  }
  if (b.is_rational()) return -compare(b, a);
  // Decide equality through shared roots of the gcd, so that ties terminate
  // without endless refinement.
  {
    auto [alo, ahi] = a.interval();
    auto [blo, bhi] = b.interval();
    Rational lo = std::max(alo, blo);
    Rational hi = std::min(ahi, bhi);
    if (lo < hi) {
      UPoly g = upoly_gcd(a.defining(), b.defining());
      // Interval endpoints are never roots of the defining polynomials, so
      // a gcd root in (lo, hi] is interior to both intervals and is each
      // number's unique root there.
      if (g.degree() >= 1 && count_roots_in(g, lo, hi) >= 1) return 0;
    }
  }
  while (true) {
    auto [alo, ahi] = a.interval();
    auto [blo, bhi] = b.interval();
    if (a.is_rational() || b.is_rational()) return compare(a, b);
    if (ahi <= blo) return -1;
    if (bhi <= alo) return 1;
    a.refine();
    b.refine();
  }
}

int compare(const AlgebraicNumber& a, const Rational& b) { return compare(a, AlgebraicNumber::from_rational(b)); }

int sign_at(const UPoly& g, const AlgebraicNumber& x) {
  if (g.is_zero()) return 0;
  if (x.is_rational()) return sgn(g.eval(x.rational_value()));
  UPoly common = upoly_gcd(g, x.defining());
  auto [lo, hi] = x.interval();
  if (common.degree() >= 1 && count_roots_in(common, lo, hi) >= 1) return 0;
  // g has no root at x; refine until g has no root in the interval and the
  // endpoint signs agree.
  UPoly gsf = squarefree_part(g);
  while (true) {
    auto [l, h] = x.interval();
    if (count_roots_in(gsf, l, h) == 0) {
      int sl = sgn(g.eval(l));
      if (sl != 0) return sl;
      int sh = sgn(g.eval(h));
      if (sh != 0) return sh;
    }
    x.refine();
  }
}

namespace {

// Invariant throughout: g(lo) != 0, g(hi) != 0, and count is the number of
// roots of g in the open interval (lo, hi).
void isolate_range(const SturmChain& chain, const UPoly& g, const Rational& lo, const Rational& hi, int count,
                   std::vector<AlgebraicNumber>& out) {
  if (count == 0) return;
  if (count == 1) {
    out.push_back(AlgebraicNumber::from_root(g, lo, hi));
    return;
  }
  Rational mid = (lo + hi) / 2;
  if (sgn(g.eval(mid)) == 0) {
    out.push_back(AlgebraicNumber::from_rational(mid));
    // Carve out a punctured neighborhood of mid with no other root.
    Rational delta = (hi - lo) / 4;
    while (chain.count(mid - delta, mid + delta) != 1 || sgn(g.eval(mid - delta)) == 0 ||
           sgn(g.eval(mid + delta)) == 0)
      delta /= 2;
    isolate_range(chain, g, lo, mid - delta, chain.count(lo, mid - delta), out);
    isolate_range(chain, g, mid + delta, hi, chain.count(mid + delta, hi), out);
    return;
  }
  int left = chain.count(lo, mid);
  isolate_range(chain, g, lo, mid, left, out);
  isolate_range(chain, g, mid, hi, count - left, out);
}

void isolate_squarefree(const UPoly& g, std::vector<AlgebraicNumber>& out) {
  if (g.degree() < 1) return;
  SturmChain chain(g);
  Rational bound = cauchy_root_bound(g);
  // All real roots lie strictly inside (-bound, bound).
  isolate_range(chain, g, -bound, bound, chain.count(-bound, bound), out);
}

}  // namespace

std::vector<IsolatedRoot> isolate_real_roots(const UPoly& f) {
  if (f.is_zero()) throw PolyError("root isolation of the zero polynomial");
  std::vector<IsolatedRoot> roots;
  for (const auto& [factor, mult] : squarefree_decomposition(f)) {
    std::vector<AlgebraicNumber> rs;
    isolate_squarefree(factor, rs);
    for (AlgebraicNumber& r : rs) roots.push_back({std::move(r), mult});
  }
  // Roots of distinct squarefree factors are distinct; sort, then refine
  // until the isolating intervals are pairwise disjoint.
  std::sort(roots.begin(), roots.end(),
            [](const IsolatedRoot& a, const IsolatedRoot& b) { return compare(a.value, b.value) < 0; });
  for (size_t i = 0; i + 1 < roots.size(); ++i) {
    while (roots[i].value.interval().second > roots[i + 1].value.interval().first) {
      roots[i].value.refine();
      roots[i + 1].value.refine();
    }
  }
  return roots;
}

std::vector<IsolatedRoot> isolate_real_roots(const Polynomial& f) { return isolate_real_roots(to_univariate(f)); }

std::optional<AlgebraicNumber> largest_real_root(const UPoly& f) {
  if (f.is_zero()) throw PolyError("largest real root of the zero polynomial");
  auto roots = isolate_real_roots(f);
  if (roots.empty()) return std::nullopt;
  return roots.back().value;
}

std::optional<AlgebraicNumber> largest_real_root(const Polynomial& f) { return largest_real_root(to_univariate(f)); }

RootSequence root_sequence(const UPoly& f) {
  if (f.is_zero() || f.degree() < 1) throw PolyError("root sequence needs degree >= 1");
  RootSequence seq;
  UPoly g = f;
  for (int i = 0; i < f.degree(); ++i) {
    seq.entries.push_back(largest_real_root(g));
    g = g.derivative();
  }
  return seq;
}

RootSequence root_sequence(const Polynomial& f) { return root_sequence(to_univariate(f)); }

MrsResult mrs_check(const UPoly& f) {
  MrsResult res;
  if (f.is_zero() || f.degree() == 0) {
    bool nonneg = f.is_zero() || sgn(f.lc()) >= 0;
    res.holds = nonneg;
    if (!nonneg) res.failure = MrsResult::Failure::NegativeConstant;
    return res;
  }
  if (sgn(f.lc()) < 0) {
    // A univariate Garding polynomial is positive on a right half-line.
    res.holds = false;
    res.failure = MrsResult::Failure::NegativeLeading;
    res.sequence = root_sequence(f);
    return res;
  }
  res.sequence = root_sequence(f);
  for (size_t i = 0; i < res.sequence.entries.size(); ++i) {
    if (!res.sequence.entries[i].has_value()) {
      res.holds = false;
      res.failure = MrsResult::Failure::MissingRoot;
      res.index = static_cast<int>(i);
      return res;
    }
  }
  for (size_t i = 0; i + 1 < res.sequence.entries.size(); ++i) {
    if (compare(*res.sequence.entries[i], *res.sequence.entries[i + 1]) < 0) {
      res.holds = false;
      res.failure = MrsResult::Failure::OrderViolation;
      res.index = static_cast<int>(i);
      return res;
    }
  }
  res.holds = true;
  return res;
}

MrsResult mrs_check(const Polynomial& f) { return mrs_check(to_univariate(f)); }

bool real_rooted_check(const UPoly& f) {
  if (f.is_zero()) throw PolyError("real-rootedness of the zero polynomial");
  if (f.degree() == 0) return true;
  int total = 0;
  for (const auto& [factor, mult] : squarefree_decomposition(f)) {
    SturmChain chain(factor);
    int count = chain.variations_at_infinity(-1) - chain.variations_at_infinity(+1);
    total += mult * count;
  }
  return total == f.degree();
}

bool real_rooted_check(const Polynomial& f) { return real_rooted_check(to_univariate(f)); }

Polynomial from_root_sequence(const std::vector<Rational>& roots) {
  for (size_t i = 0; i + 1 < roots.size(); ++i)
    if (roots[i] < roots[i + 1]) throw PolyError("root sequence must be nonincreasing");
  UPoly f({Rational(1)});
  for (size_t k = roots.size(); k-- > 0;) {
    // antiderivative of f vanishing at roots[k]
    std::vector<Rational> anti(f.c.size() + 1, Rational(0));
    for (size_t i = 0; i < f.c.size(); ++i) anti[i + 1] = f.c[i] / Rational(static_cast<long>(i + 1));
    UPoly g(std::move(anti));
    g.c[0] = -g.eval(roots[k]);
    f = std::move(g);
  }
  return from_univariate(f);
}

}  // namespace garding
