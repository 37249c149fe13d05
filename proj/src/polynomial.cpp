#include "khtrans/polynomial.hpp"

#include <cstdlib>
#include <sstream>

namespace khtrans {

LaurentPolynomial LaurentPolynomial::monomial(int exponent, std::int64_t coeff) {
  LaurentPolynomial p;
  p.add(exponent, coeff);
  return p;
}

void LaurentPolynomial::add(int exponent, std::int64_t coeff) {
  if (coeff == 0)
    return;
  auto& slot = terms_[exponent];
  slot += coeff;
  if (slot == 0)
    terms_.erase(exponent);
}

std::int64_t LaurentPolynomial::coefficient(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? 0 : it->second;
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& o) {
  for (const auto& [e, c] : o.terms_)
    add(e, c);
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& o) {
  for (const auto& [e, c] : o.terms_)
    add(e, -c);
  return *this;
}

LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  LaurentPolynomial out;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_)
      out.add(ea + eb, ca * cb);
  return out;
}

std::string LaurentPolynomial::to_string(char var) const {
  if (terms_.empty())
    return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    const std::int64_t mag = std::llabs(c);
    if (first)
      out << (c < 0 ? "-" : "");
    else
      out << (c < 0 ? " - " : " + ");
    first = false;
    if (e == 0) {
      out << mag;
      continue;
    }
    if (mag != 1)
      out << mag;
    out << var;
    if (e != 1)
      out << '^' << e;
  }
  return out.str();
}

} // namespace khtrans
