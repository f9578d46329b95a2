#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace monreg {

inline constexpr int kMaxVariables = 16;

using Exponent = std::int32_t;

/// A monomial x1^a1 ... xn^an stored as a dense exponent vector over a fixed
/// ambient variable count n. Variables are addressed 1-based (x1..xn).
class Monomial {
 public:
  /// The constant monomial 1 in n variables.
  explicit Monomial(int num_vars = 0);
  Monomial(int num_vars, std::initializer_list<Exponent> exponents);
  Monomial(int num_vars, std::span<const Exponent> exponents);

  /// x_var^power in n variables.
  static Monomial variable(int num_vars, int var, Exponent power = 1);

  int num_vars() const { return num_vars_; }
  int degree() const { return degree_; }
  bool is_one() const { return degree_ == 0; }

  /// Exponent of x_var, var in 1..n.
  Exponent exponent(int var) const;
  std::span<const Exponent> exponents() const {
    return {exps_.data(), static_cast<std::size_t>(num_vars_)};
  }

  /// Copy with the exponent of x_var replaced.
  Monomial with_exponent(int var, Exponent value) const;

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.num_vars_ == b.num_vars_ && a.exps_ == b.exps_;
  }
  /// Degree first, then lexicographic with x1 > x2 > ... (so x1^2 before x1*x2).
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);

  std::size_t hash() const;

 private:
  int num_vars_ = 0;
  int degree_ = 0;
  std::array<Exponent, kMaxVariables> exps_{};
};

/// Largest i with x_i | u; empty for u = 1.
std::optional<int> m_index(const Monomial& u);

bool divides(const Monomial& u, const Monomial& v);
Monomial lcm(const Monomial& u, const Monomial& v);
Monomial gcd(const Monomial& u, const Monomial& v);
Monomial multiply(const Monomial& u, const Monomial& v);
/// u / v; throws std::invalid_argument unless v | u.
Monomial divide_exact(const Monomial& u, const Monomial& v);

/// Indices of the variables with positive exponent, ascending.
std::vector<int> support(const Monomial& u);

/// Text form used by the ideal-description language, e.g. "x1^5 x3^2" or "1".
std::string to_string(const Monomial& u);

/// Calls fn(m) for every monomial of the given degree in n variables.
void for_each_monomial_of_degree(int num_vars, int degree,
                                 const std::function<void(const Monomial&)>& fn);

/// Number of monomials of the given degree in n variables.
std::int64_t count_monomials_of_degree(int num_vars, int degree);

}  // namespace monreg

template <>
struct std::hash<monreg::Monomial> {
  std::size_t operator()(const monreg::Monomial& m) const noexcept { return m.hash(); }
};
