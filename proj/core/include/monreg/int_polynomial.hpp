#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace monreg {

/// Univariate polynomial in t with exact integer coefficients. Trailing zeros are
/// trimmed, so the zero polynomial has no coefficients and no degree.
class IntPolynomial {
 public:
  using Coefficient = std::int64_t;

  IntPolynomial() = default;
  IntPolynomial(std::initializer_list<Coefficient> coefficients);
  explicit IntPolynomial(std::vector<Coefficient> coefficients);

  /// c * t^power
  static IntPolynomial monomial(Coefficient c, int power);

  std::optional<int> degree() const;
  bool is_zero() const { return coeffs_.empty(); }
  Coefficient coefficient(int power) const;
  const std::vector<Coefficient>& coefficients() const { return coeffs_; }

  /// Value at t = 1.
  Coefficient value_at_one() const;

  IntPolynomial& operator+=(const IntPolynomial& other);
  IntPolynomial& operator-=(const IntPolynomial& other);
  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

  /// Multiplication by t^power.
  IntPolynomial shifted(int power) const;

  /// q with this = (1 - t)^power * q, or empty if the division is not exact.
  std::optional<IntPolynomial> divide_by_one_minus_t(int power) const;

  /// First count+1 coefficients of the power series this / (1 - t)^power.
  std::vector<Coefficient> series_coefficients(int power, int up_to_degree) const;

 private:
  void trim();
  std::vector<Coefficient> coeffs_;
};

/// "1 - 2t^5 + t^9"
std::string to_string(const IntPolynomial& p);

}  // namespace monreg
