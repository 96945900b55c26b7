#include "garding/rational.hpp"

namespace garding {

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      Integer n(text, 10);
      return rat_of(n);
    }
    Integer n(text.substr(0, slash), 10);
    Integer d(text.substr(slash + 1), 10);
    if (sgn(d) <= 0) throw std::invalid_argument("denominator must be positive: " + text);
    return rat_of(n, d);
  } catch (const std::invalid_argument&) {
    throw;
  } catch (const std::exception&) {
    throw std::invalid_argument("bad rational literal: " + text);
  }
}

std::string rational_str(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Integer binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

Integer factorial(unsigned n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

}  // namespace garding
