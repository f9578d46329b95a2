#include "monreg/monomial.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace monreg {

namespace {

void check_num_vars(int num_vars) {
  if (num_vars < 0 || num_vars > kMaxVariables) {
    throw std::invalid_argument("variable count " + std::to_string(num_vars) +
                                " outside 0.." + std::to_string(kMaxVariables));
  }
}

void check_same_ring(const Monomial& u, const Monomial& v) {
  if (u.num_vars() != v.num_vars()) {
    throw std::invalid_argument("monomials live in rings with " + std::to_string(u.num_vars()) +
                                " and " + std::to_string(v.num_vars()) + " variables");
  }
}

template <typename Op>
Monomial combine(const Monomial& u, const Monomial& v, Op op) {
  check_same_ring(u, v);
  std::array<Exponent, kMaxVariables> out{};
  auto a = u.exponents();
  auto b = v.exponents();
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = op(a[i], b[i]);
  return Monomial(u.num_vars(), std::span<const Exponent>(out.data(), a.size()));
}

}  // namespace

Monomial::Monomial(int num_vars) : num_vars_(num_vars) { check_num_vars(num_vars); }

Monomial::Monomial(int num_vars, std::initializer_list<Exponent> exponents)
    : Monomial(num_vars, std::span<const Exponent>(exponents.begin(), exponents.size())) {}

Monomial::Monomial(int num_vars, std::span<const Exponent> exponents) : num_vars_(num_vars) {
  check_num_vars(num_vars);
  if (exponents.size() != static_cast<std::size_t>(num_vars)) {
    throw std::invalid_argument("exponent vector has length " + std::to_string(exponents.size()) +
                                ", expected " + std::to_string(num_vars));
  }
  std::int64_t deg = 0;
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (exponents[i] < 0) throw std::invalid_argument("negative exponent");
    exps_[i] = exponents[i];
    deg += exponents[i];
  }
  if (deg > std::numeric_limits<int>::max()) throw std::overflow_error("monomial degree overflow");
  degree_ = static_cast<int>(deg);
}

Monomial Monomial::variable(int num_vars, int var, Exponent power) {
  return Monomial(num_vars).with_exponent(var, power);
}

Exponent Monomial::exponent(int var) const {
  if (var < 1 || var > num_vars_) {
    throw std::out_of_range("variable x" + std::to_string(var) + " not in ring with " +
                            std::to_string(num_vars_) + " variables");
  }
  return exps_[var - 1];
}

Monomial Monomial::with_exponent(int var, Exponent value) const {
  if (var < 1 || var > num_vars_) {
    throw std::out_of_range("variable x" + std::to_string(var) + " not in ring with " +
                            std::to_string(num_vars_) + " variables");
  }
  if (value < 0) throw std::invalid_argument("negative exponent");
  Monomial out = *this;
  out.degree_ += value - out.exps_[var - 1];
  out.exps_[var - 1] = value;
  return out;
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
  if (auto c = a.num_vars_ <=> b.num_vars_; c != 0) return c;
  if (auto c = a.degree_ <=> b.degree_; c != 0) return c;
  for (int i = 0; i < a.num_vars_; ++i) {
    // Larger x1 exponent sorts first.
    if (auto c = b.exps_[i] <=> a.exps_[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

std::size_t Monomial::hash() const {
  std::size_t h = static_cast<std::size_t>(num_vars_);
  for (int i = 0; i < num_vars_; ++i) {
    h ^= static_cast<std::size_t>(exps_[i]) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

std::optional<int> m_index(const Monomial& u) {
  auto e = u.exponents();
  for (int i = static_cast<int>(e.size()); i >= 1; --i) {
    if (e[i - 1] > 0) return i;
  }
  return std::nullopt;
}

bool divides(const Monomial& u, const Monomial& v) {
  check_same_ring(u, v);
  auto a = u.exponents();
  auto b = v.exponents();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

Monomial lcm(const Monomial& u, const Monomial& v) {
  return combine(u, v, [](Exponent a, Exponent b) { return std::max(a, b); });
}

Monomial gcd(const Monomial& u, const Monomial& v) {
  return combine(u, v, [](Exponent a, Exponent b) { return std::min(a, b); });
}

Monomial multiply(const Monomial& u, const Monomial& v) {
  return combine(u, v, [](Exponent a, Exponent b) {
    Exponent out{};
    if (__builtin_add_overflow(a, b, &out)) throw std::overflow_error("exponent overflow");
    return out;
  });
}

Monomial divide_exact(const Monomial& u, const Monomial& v) {
  if (!divides(v, u)) {
    throw std::invalid_argument(to_string(v) + " does not divide " + to_string(u));
  }
  return combine(u, v, [](Exponent a, Exponent b) { return a - b; });
}

std::vector<int> support(const Monomial& u) {
  std::vector<int> out;
  auto e = u.exponents();
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] > 0) out.push_back(static_cast<int>(i) + 1);
  }
  return out;
}

std::string to_string(const Monomial& u) {
  if (u.is_one()) return "1";
  std::string out;
  auto e = u.exponents();
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += ' ';
    out += 'x';
    out += std::to_string(i + 1);
    if (e[i] > 1) {
      out += '^';
      out += std::to_string(e[i]);
    }
  }
  return out;
}

void for_each_monomial_of_degree(int num_vars, int degree,
                                 const std::function<void(const Monomial&)>& fn) {
  if (degree < 0) return;
  if (num_vars == 0) {
    if (degree == 0) fn(Monomial(0));
    return;
  }
  std::array<Exponent, kMaxVariables> exps{};
  // Walk compositions of degree into num_vars parts in lex-descending order.
  auto recurse = [&](auto&& self, int var, int remaining) -> void {
    if (var == num_vars - 1) {
      exps[var] = remaining;
      fn(Monomial(num_vars, std::span<const Exponent>(exps.data(), num_vars)));
      return;
    }
    for (int e = remaining; e >= 0; --e) {
      exps[var] = e;
      self(self, var + 1, remaining - e);
    }
  };
  recurse(recurse, 0, degree);
}

std::int64_t count_monomials_of_degree(int num_vars, int degree) {
  if (degree < 0) return 0;
  if (num_vars == 0) return degree == 0 ? 1 : 0;
  // C(degree + n - 1, n - 1)
  std::int64_t result = 1;
  for (int k = 1; k <= num_vars - 1; ++k) {
    result = result * (degree + k) / k;
  }
  return result;
}

}  // namespace monreg
