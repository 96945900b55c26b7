#include "garding/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <nlohmann/json.hpp>
#include <sstream>

namespace garding {

unsigned MultiIndex::total() const {
  unsigned s = 0;
  for (uint32_t x : e) s += x;
  return s;
}

bool GradedLexLess::operator()(const MultiIndex& a, const MultiIndex& b) const {
  unsigned ta = a.total(), tb = b.total();
  if (ta != tb) return ta < tb;
  return a.e < b.e;
}

Polynomial::Polynomial(int nvars) : nvars_(nvars) {
  if (nvars < 0) throw PolyError("negative variable count");
}

Polynomial Polynomial::constant(int nvars, const Rational& c) {
  Polynomial f(nvars);
  f.add_term(MultiIndex(nvars), c);
  return f;
}

Polynomial Polynomial::variable(int nvars, int var) {
  if (var < 1 || var > nvars) throw PolyError("variable index out of range");
  MultiIndex mi(nvars);
  mi[var - 1] = 1;
  return monomial(nvars, mi, 1);
}

Polynomial Polynomial::monomial(int nvars, MultiIndex mi, const Rational& c) {
  Polynomial f(nvars);
  f.add_term(mi, c);
  return f;
}

std::optional<unsigned> Polynomial::degree() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.rbegin()->first.total();
}

std::optional<unsigned> Polynomial::order() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.begin()->first.total();
}

MultiIndex Polynomial::multidegree() const {
  MultiIndex k(nvars_);
  for (const auto& [mi, c] : terms_)
    for (size_t i = 0; i < mi.size(); ++i) k[i] = std::max(k[i], mi[i]);
  return k;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.total() == 0);
}

bool Polynomial::is_multiaffine() const {
  for (const auto& [mi, c] : terms_)
    for (uint32_t x : mi.e)
      if (x > 1) return false;
  return true;
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  unsigned d = terms_.begin()->first.total();
  return terms_.rbegin()->first.total() == d;
}

Rational Polynomial::coeff(const MultiIndex& mi) const {
  auto it = terms_.find(mi);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational Polynomial::constant_term() const { return coeff(MultiIndex(nvars_)); }

void Polynomial::add_term(const MultiIndex& mi, const Rational& c) {
  if (static_cast<int>(mi.size()) != nvars_) throw PolyError("multi-index length mismatch");
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.emplace(mi, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

std::vector<int> Polynomial::support_vars() const {
  std::vector<bool> seen(static_cast<size_t>(nvars_), false);
  for (const auto& [mi, c] : terms_)
    for (size_t i = 0; i < mi.size(); ++i)
      if (mi[i] > 0) seen[i] = true;
  std::vector<int> out;
  for (int i = 0; i < nvars_; ++i)
    if (seen[static_cast<size_t>(i)]) out.push_back(i + 1);
  return out;
}

Rational Polynomial::eval(std::span<const Rational> point) const {
  if (static_cast<int>(point.size()) != nvars_) throw PolyError("evaluation point dimension mismatch");
  Rational acc = 0;
  for (const auto& [mi, c] : terms_) {
    Rational t = c;
    for (size_t i = 0; i < mi.size(); ++i) {
      for (uint32_t k = 0; k < mi[i]; ++k) t *= point[i];
    }
    acc += t;
  }
  return acc;
}

Polynomial Polynomial::operator-() const {
  Polynomial r(nvars_);
  for (const auto& [mi, c] : terms_) r.terms_.emplace(mi, -c);
  return r;
}

void Polynomial::check_same_space(const Polynomial& o) const {
  if (nvars_ != o.nvars_) throw PolyError("nvars mismatch");
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  check_same_space(o);
  for (const auto& [mi, c] : o.terms_) add_term(mi, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  check_same_space(o);
  for (const auto& [mi, c] : o.terms_) add_term(mi, -c);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.check_same_space(b);
  Polynomial r(a.nvars_);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      MultiIndex m = ma;
      for (size_t i = 0; i < m.size(); ++i) m[i] += mb[i];
      r.add_term(m, ca * cb);
    }
  }
  return r;
}

Polynomial operator*(const Rational& c, const Polynomial& f) {
  Polynomial r(f.nvars_);
  if (sgn(c) == 0) return r;
  for (const auto& [mi, cf] : f.terms_) r.terms_.emplace(mi, c * cf);
  return r;
}

bool Polynomial::operator==(const Polynomial& o) const {
  return nvars_ == o.nvars_ && terms_ == o.terms_;
}

namespace {

struct Parser {
  const std::string& s;
  size_t pos = 0;

  explicit Parser(const std::string& text) : s(text) {}

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eof() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  bool accept(char c) {
    if (peek() == c) {
      ++pos;
      return true;
    }
    return false;
  }

  std::string read_digits() {
    skip_ws();
    size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) throw ParseError("expected digits", pos);
    return s.substr(start, pos - start);
  }

  struct Factor {
    bool is_var;
    int var = 0;
    uint32_t exp = 1;
    Rational value;
  };

  Factor read_factor() {
    char c = peek();
    Factor f;
    if (c == 'x') {
      ++pos;
      f.is_var = true;
      if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
        f.var = std::stoi(read_digits());
        if (f.var < 1) throw ParseError("variable index must be >= 1", pos);
      } else {
        f.var = 1;  // bare "x"
      }
      if (accept('^')) f.exp = static_cast<uint32_t>(std::stoul(read_digits()));
      return f;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string num = read_digits();
      f.is_var = false;
      if (accept('/')) {
        std::string den = read_digits();
        f.value = parse_rational(num + "/" + den);
      } else {
        f.value = parse_rational(num);
      }
      if (accept('^')) {
        uint32_t e = static_cast<uint32_t>(std::stoul(read_digits()));
        Rational p = 1;
        for (uint32_t k = 0; k < e; ++k) p *= f.value;
        f.value = p;
      }
      return f;
    }
    throw ParseError(std::string("unexpected character '") + c + "'", pos);
  }

  // term := factor ('*' factor)*
  void read_term(int sign, std::vector<std::pair<std::map<int, uint32_t>, Rational>>& out) {
    Rational coef = sign;
    std::map<int, uint32_t> exps;
    while (true) {
      Factor f = read_factor();
      if (f.is_var)
        exps[f.var] += f.exp;
      else
        coef *= f.value;
      if (!accept('*')) break;
    }
    out.emplace_back(std::move(exps), coef);
  }
};

}  // namespace

Polynomial parse_polynomial(const std::string& text, std::optional<int> nvars) {
  Parser p(text);
  std::vector<std::pair<std::map<int, uint32_t>, Rational>> raw;
  if (p.eof()) throw ParseError("empty polynomial", 0);
  int sign = 1;
  if (p.accept('-'))
    sign = -1;
  else
    p.accept('+');
  p.read_term(sign, raw);
  while (!p.eof()) {
    if (p.accept('+'))
      sign = 1;
    else if (p.accept('-'))
      sign = -1;
    else
      throw ParseError("expected '+' or '-'", p.pos);
    p.read_term(sign, raw);
  }

  int max_var = 0;
  for (const auto& [exps, c] : raw)
    for (const auto& [v, e] : exps) max_var = std::max(max_var, v);
  int n = nvars.value_or(std::max(max_var, 1));
  if (max_var > n)
    throw ParseError("variable x" + std::to_string(max_var) + " out of declared range (nvars=" + std::to_string(n) + ")",
                     text.size());

  Polynomial f(n);
  for (const auto& [exps, c] : raw) {
    MultiIndex mi(n);
    for (const auto& [v, e] : exps) mi[static_cast<size_t>(v - 1)] += e;
    f.add_term(mi, c);
  }
  return f;
}

std::string format_polynomial(const Polynomial& f) {
  if (f.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  // Descending graded-lex: highest degree first.
  for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
    const MultiIndex& mi = it->first;
    Rational c = it->second;
    bool neg = sgn(c) < 0;
    if (first) {
      if (neg) out << "-";
    } else {
      out << (neg ? " - " : " + ");
    }
    first = false;
    Rational a = abs(c);
    bool is_const_term = mi.total() == 0;
    bool printed_coeff = false;
    if (a != 1 || is_const_term) {
      out << rational_str(a);
      printed_coeff = true;
    }
    for (size_t i = 0; i < mi.size(); ++i) {
      if (mi[i] == 0) continue;
      if (printed_coeff) out << "*";
      printed_coeff = true;
      out << "x" << (i + 1);
      if (mi[i] > 1) out << "^" << mi[i];
    }
  }
  return out.str();
}

std::string polynomial_to_json(const Polynomial& f) {
  nlohmann::json j;
  j["nvars"] = f.nvars();
  j["terms"] = nlohmann::json::array();
  for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
    nlohmann::json t;
    t["exp"] = it->first.e;
    t["coef"] = rational_str(it->second);
    j["terms"].push_back(t);
  }
  return j.dump();
}

Polynomial polynomial_from_json(const std::string& json_text) {
  nlohmann::json j = nlohmann::json::parse(json_text);
  int n = j.at("nvars").get<int>();
  Polynomial f(n);
  for (const auto& t : j.at("terms")) {
    MultiIndex mi;
    mi.e = t.at("exp").get<std::vector<uint32_t>>();
    f.add_term(mi, parse_rational(t.at("coef").get<std::string>()));
  }
  return f;
}

}  // namespace garding
