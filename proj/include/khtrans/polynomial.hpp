#pragma once

#include <cstdint>
#include <map>
#include <string>

namespace khtrans {

/// Laurent polynomial in one variable with integer coefficients.
class LaurentPolynomial {
public:
  LaurentPolynomial() = default;
  static LaurentPolynomial monomial(int exponent, std::int64_t coeff = 1);

  void add(int exponent, std::int64_t coeff);
  std::int64_t coefficient(int exponent) const;
  const std::map<int, std::int64_t>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  LaurentPolynomial& operator+=(const LaurentPolynomial& o);
  LaurentPolynomial& operator-=(const LaurentPolynomial& o);
  friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) { return a += b; }
  friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) { return a -= b; }
  friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b);

  /// e.g. "q^-1 + q - 2q^5"
  std::string to_string(char var = 'q') const;

  friend bool operator==(const LaurentPolynomial&, const LaurentPolynomial&) = default;

private:
  std::map<int, std::int64_t> terms_;
};

} // namespace khtrans
