#include "monreg/int_polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace monreg {

IntPolynomial::IntPolynomial(std::initializer_list<Coefficient> coefficients)
    : coeffs_(coefficients) {
  trim();
}

IntPolynomial::IntPolynomial(std::vector<Coefficient> coefficients)
    : coeffs_(std::move(coefficients)) {
  trim();
}

IntPolynomial IntPolynomial::monomial(Coefficient c, int power) {
  if (power < 0) throw std::invalid_argument("negative power");
  std::vector<Coefficient> v(static_cast<std::size_t>(power) + 1, 0);
  v.back() = c;
  return IntPolynomial(std::move(v));
}

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::optional<int> IntPolynomial::degree() const {
  if (coeffs_.empty()) return std::nullopt;
  return static_cast<int>(coeffs_.size()) - 1;
}

IntPolynomial::Coefficient IntPolynomial::coefficient(int power) const {
  if (power < 0 || power >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[static_cast<std::size_t>(power)];
}

IntPolynomial::Coefficient IntPolynomial::value_at_one() const {
  Coefficient s = 0;
  for (auto c : coeffs_) s += c;
  return s;
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), 0);
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  trim();
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), 0);
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  trim();
  return *this;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<IntPolynomial::Coefficient> out(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::shifted(int power) const {
  if (power < 0) throw std::invalid_argument("negative shift");
  if (is_zero()) return {};
  std::vector<Coefficient> out(static_cast<std::size_t>(power), 0);
  out.insert(out.end(), coeffs_.begin(), coeffs_.end());
  return IntPolynomial(std::move(out));
}

std::optional<IntPolynomial> IntPolynomial::divide_by_one_minus_t(int power) const {
  if (power < 0) throw std::invalid_argument("negative power");
  std::vector<Coefficient> cur = coeffs_;
  for (int step = 0; step < power; ++step) {
    if (cur.empty()) return IntPolynomial{};
    // p = (1 - t) q  <=>  q_k = p_0 + ... + p_k, with p(1) = 0 for exactness.
    Coefficient total = 0;
    for (auto c : cur) total += c;
    if (total != 0) return std::nullopt;
    std::vector<Coefficient> q(cur.size() - 1, 0);
    Coefficient running = 0;
    for (std::size_t k = 0; k + 1 < cur.size(); ++k) {
      running += cur[k];
      q[k] = running;
    }
    cur = std::move(q);
    while (!cur.empty() && cur.back() == 0) cur.pop_back();
  }
  return IntPolynomial(std::move(cur));
}

std::vector<IntPolynomial::Coefficient> IntPolynomial::series_coefficients(
    int power, int up_to_degree) const {
  if (power < 0) throw std::invalid_argument("negative power");
  std::vector<Coefficient> out(static_cast<std::size_t>(up_to_degree) + 1, 0);
  for (int k = 0; k <= up_to_degree; ++k) out[static_cast<std::size_t>(k)] = coefficient(k);
  // Dividing by (1 - t) is a prefix sum of the coefficient sequence.
  for (int step = 0; step < power; ++step) {
    for (std::size_t k = 1; k < out.size(); ++k) out[k] += out[k - 1];
  }
  return out;
}

std::string to_string(const IntPolynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  const auto& c = p.coefficients();
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (c[k] == 0) continue;
    auto mag = c[k] < 0 ? -c[k] : c[k];
    if (out.empty()) {
      if (c[k] < 0) out += '-';
    } else {
      out += c[k] < 0 ? " - " : " + ";
    }
    if (mag != 1 || k == 0) out += std::to_string(mag);
    if (k >= 1) out += 't';
    if (k >= 2) out += '^' + std::to_string(k);
  }
  return out;
}

}  // namespace monreg
