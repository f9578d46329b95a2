#include "monreg/monomial_ideal.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace monreg {

namespace {

void check_same_ring(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (a.num_vars() != b.num_vars()) {
    throw std::invalid_argument("ideals live in rings with " + std::to_string(a.num_vars()) +
                                " and " + std::to_string(b.num_vars()) + " variables");
  }
}

void check_var(const MonomialIdeal& ideal, int var) {
  if (var < 1 || var > ideal.num_vars()) {
    throw std::invalid_argument("variable index " + std::to_string(var) + " outside 1.." +
                                std::to_string(ideal.num_vars()));
  }
}

[[maybe_unused]] bool is_minimal_sorted(const std::vector<Monomial>& gens) {
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (i > 0 && !(gens[i - 1] < gens[i])) return false;
    for (std::size_t j = 0; j < i; ++j) {
      if (divides(gens[j], gens[i])) return false;
    }
  }
  return true;
}

}  // namespace

MonomialIdeal::MonomialIdeal(int num_vars) : num_vars_(num_vars) {
  if (num_vars < 0 || num_vars > kMaxVariables) {
    throw std::invalid_argument("variable count " + std::to_string(num_vars) + " outside 0.." +
                                std::to_string(kMaxVariables));
  }
}

MonomialIdeal::MonomialIdeal(int num_vars, std::vector<Monomial> generators)
    : MonomialIdeal(minimalize(num_vars, std::move(generators))) {}

MonomialIdeal::MonomialIdeal(Trusted, int num_vars, std::vector<Monomial> generators)
    : num_vars_(num_vars), gens_(std::move(generators)) {
  assert(is_minimal_sorted(gens_));
}

MonomialIdeal MonomialIdeal::unit(int num_vars) {
  return MonomialIdeal(Trusted{}, num_vars, {Monomial(num_vars)});
}

int MonomialIdeal::max_degree() const {
  int d = 0;
  for (const auto& g : gens_) d = std::max(d, g.degree());
  return d;
}

int MonomialIdeal::min_degree() const { return gens_.empty() ? 0 : gens_.front().degree(); }

std::optional<int> MonomialIdeal::m_index() const {
  std::optional<int> out;
  for (const auto& g : gens_) {
    auto m = monreg::m_index(g);
    if (m && (!out || *m > *out)) out = m;
  }
  return out;
}

Monomial MonomialIdeal::generator_lcm() const {
  Monomial out(num_vars_);
  for (const auto& g : gens_) out = lcm(out, g);
  return out;
}

MonomialIdeal minimalize(int num_vars, std::vector<Monomial> gens) {
  for (const auto& g : gens) {
    if (g.num_vars() != num_vars) {
      throw std::invalid_argument("generator " + to_string(g) + " has " +
                                  std::to_string(g.num_vars()) + " variables, expected " +
                                  std::to_string(num_vars));
    }
  }
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Monomial> kept;
  kept.reserve(gens.size());
  // Sorted by degree, so only earlier elements can divide later ones.
  for (const auto& g : gens) {
    bool redundant = std::any_of(kept.begin(), kept.end(),
                                 [&](const Monomial& k) { return divides(k, g); });
    if (!redundant) kept.push_back(g);
  }
  return MonomialIdeal(MonomialIdeal::Trusted{}, num_vars, std::move(kept));
}

bool contains(const MonomialIdeal& ideal, const Monomial& u) {
  if (u.num_vars() != ideal.num_vars()) {
    throw std::invalid_argument("monomial and ideal live in different rings");
  }
  for (const auto& g : ideal.generators()) {
    if (g.degree() > u.degree()) break;
    if (divides(g, u)) return true;
  }
  return false;
}

bool is_subideal(const MonomialIdeal& inner, const MonomialIdeal& outer) {
  check_same_ring(inner, outer);
  return std::all_of(inner.generators().begin(), inner.generators().end(),
                     [&](const Monomial& g) { return contains(outer, g); });
}

MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b) {
  check_same_ring(a, b);
  std::vector<Monomial> gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return minimalize(a.num_vars(), std::move(gens));
}

MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b) {
  check_same_ring(a, b);
  std::vector<Monomial> gens;
  gens.reserve(a.size() * b.size());
  for (const auto& g : a.generators()) {
    for (const auto& h : b.generators()) gens.push_back(multiply(g, h));
  }
  return minimalize(a.num_vars(), std::move(gens));
}

MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
  check_same_ring(a, b);
  std::vector<Monomial> gens;
  gens.reserve(a.size() * b.size());
  for (const auto& g : a.generators()) {
    for (const auto& h : b.generators()) gens.push_back(lcm(g, h));
  }
  return minimalize(a.num_vars(), std::move(gens));
}

MonomialIdeal colon_monomial(const MonomialIdeal& ideal, const Monomial& u) {
  if (u.num_vars() != ideal.num_vars()) {
    throw std::invalid_argument("monomial and ideal live in different rings");
  }
  std::vector<Monomial> gens;
  gens.reserve(ideal.size());
  for (const auto& g : ideal.generators()) gens.push_back(divide_exact(g, gcd(g, u)));
  return minimalize(ideal.num_vars(), std::move(gens));
}

MonomialIdeal colon_ideal(const MonomialIdeal& ideal, const MonomialIdeal& by) {
  check_same_ring(ideal, by);
  MonomialIdeal out = MonomialIdeal::unit(ideal.num_vars());
  for (const auto& v : by.generators()) out = intersect(out, colon_monomial(ideal, v));
  return out;
}

MonomialIdeal saturate_var(const MonomialIdeal& ideal, int var) {
  check_var(ideal, var);
  std::vector<Monomial> gens;
  gens.reserve(ideal.size());
  for (const auto& g : ideal.generators()) gens.push_back(g.with_exponent(var, 0));
  return minimalize(ideal.num_vars(), std::move(gens));
}

MonomialIdeal saturate_prefix(const MonomialIdeal& ideal, int prefix) {
  check_var(ideal, prefix);
  MonomialIdeal out = saturate_var(ideal, 1);
  for (int k = 2; k <= prefix; ++k) out = intersect(out, saturate_var(ideal, k));
  return out;
}

MonomialIdeal truncate(const MonomialIdeal& ideal, int degree) {
  if (degree < 0) throw std::invalid_argument("truncation degree must be non-negative");
  if (degree <= ideal.min_degree()) return ideal;
  const int n = ideal.num_vars();
  std::vector<Monomial> gens;
  for (const auto& g : ideal.generators()) {
    if (g.degree() >= degree) {
      gens.push_back(g);
      continue;
    }
    for_each_monomial_of_degree(n, degree - g.degree(),
                                [&](const Monomial& w) { gens.push_back(multiply(g, w)); });
  }
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  // A padded generator w*g dividing another generator h would force g | h, which
  // minimality of G(I) rules out; deduplication is all that is needed.
  return MonomialIdeal(MonomialIdeal::Trusted{}, n, std::move(gens));
}

Monomial change_ring(const Monomial& u, int num_vars) {
  std::array<Exponent, kMaxVariables> exps{};
  auto e = u.exponents();
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (static_cast<int>(i) < num_vars) {
      exps[i] = e[i];
    } else if (e[i] != 0) {
      throw std::invalid_argument(to_string(u) + " involves x" + std::to_string(i + 1) +
                                  ", outside a ring with " + std::to_string(num_vars) +
                                  " variables");
    }
  }
  return Monomial(num_vars, std::span<const Exponent>(exps.data(), num_vars));
}

MonomialIdeal extend_ring(const MonomialIdeal& ideal, int new_num_vars) {
  if (new_num_vars < ideal.num_vars()) {
    throw std::invalid_argument("extend_ring cannot shrink the variable count");
  }
  std::vector<Monomial> gens;
  gens.reserve(ideal.size());
  for (const auto& g : ideal.generators()) gens.push_back(change_ring(g, new_num_vars));
  return minimalize(new_num_vars, std::move(gens));
}

MonomialIdeal restrict_ring(const MonomialIdeal& ideal, int num_vars) {
  if (num_vars > ideal.num_vars()) {
    throw std::invalid_argument("restrict_ring cannot grow the variable count");
  }
  std::vector<Monomial> gens;
  gens.reserve(ideal.size());
  for (const auto& g : ideal.generators()) gens.push_back(change_ring(g, num_vars));
  return minimalize(num_vars, std::move(gens));
}

std::string to_string(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) return "(0)";
  std::string out = "(";
  for (std::size_t i = 0; i < ideal.size(); ++i) {
    if (i > 0) out += ", ";
    out += to_string(ideal.generators()[i]);
  }
  out += ')';
  return out;
}

}  // namespace monreg
