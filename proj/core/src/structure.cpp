#include "monreg/structure.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <unordered_set>

#include "monreg/error.hpp"

namespace monreg {

namespace {

/// Membership test tuned for the exchange scans: exact generator hits are hash
/// lookups, and only strictly lower-degree generators are scanned for division.
class Membership {
 public:
  explicit Membership(const MonomialIdeal& ideal)
      : ideal_(ideal), exact_(ideal.generators().begin(), ideal.generators().end()) {}

  bool contains(const Monomial& u) const {
    if (exact_.contains(u)) return true;
    for (const auto& g : ideal_.generators()) {
      if (g.degree() >= u.degree()) break;
      if (divides(g, u)) return true;
    }
    return false;
  }

 private:
  const MonomialIdeal& ideal_;
  std::unordered_set<Monomial> exact_;
};

Monomial exchange(const Monomial& u, int from, int to, Exponent amount) {
  return u.with_exponent(from, u.exponent(from) - amount)
      .with_exponent(to, u.exponent(to) + amount);
}

}  // namespace

bool is_stable(const MonomialIdeal& ideal) {
  if (ideal.is_zero() || ideal.is_unit()) return true;
  Membership member(ideal);
  for (const auto& g : ideal.generators()) {
    const int m = *m_index(g);
    for (int i = 1; i < m; ++i) {
      if (!member.contains(exchange(g, m, i, 1))) return false;
    }
  }
  return true;
}

bool is_strongly_stable(const MonomialIdeal& ideal) {
  if (ideal.is_zero() || ideal.is_unit()) return true;
  Membership member(ideal);
  for (const auto& g : ideal.generators()) {
    for (int i : support(g)) {
      for (int j = 1; j < i; ++j) {
        if (!member.contains(exchange(g, i, j, 1))) return false;
      }
    }
  }
  return true;
}

std::optional<int> first_borel_type_violation(const MonomialIdeal& ideal) {
  if (ideal.is_zero() || ideal.is_unit()) return std::nullopt;
  for (int j = 1; j <= ideal.num_vars(); ++j) {
    if (saturate_var(ideal, j) != saturate_prefix(ideal, j)) return j;
  }
  return std::nullopt;
}

bool is_borel_type_by_saturation(const MonomialIdeal& ideal) {
  return !first_borel_type_violation(ideal).has_value();
}

bool is_borel_type_by_exchange(const MonomialIdeal& ideal) {
  if (ideal.is_zero() || ideal.is_unit()) return true;
  const int n = ideal.num_vars();
  std::vector<MonomialIdeal> saturated;
  saturated.reserve(static_cast<std::size_t>(n));
  for (int j = 1; j <= n; ++j) saturated.push_back(saturate_var(ideal, j));
  for (const auto& g : ideal.generators()) {
    for (int i : support(g)) {
      Monomial stripped = g.with_exponent(i, 0);
      for (int j = 1; j < i; ++j) {
        if (!contains(saturated[static_cast<std::size_t>(j - 1)], stripped)) return false;
      }
    }
  }
  return true;
}

bool is_borel_type(const MonomialIdeal& ideal) {
  const bool verdict = is_borel_type_by_saturation(ideal);
  assert(verdict == is_borel_type_by_exchange(ideal));
  return verdict;
}

bool PrimeSupport::is_initial_segment() const {
  for (std::size_t k = 0; k < vars.size(); ++k) {
    if (vars[k] != static_cast<int>(k) + 1) return false;
  }
  return !vars.empty();
}

bool PrimeSupport::is_contained_in(const PrimeSupport& other) const {
  return std::includes(other.vars.begin(), other.vars.end(), vars.begin(), vars.end());
}

std::string to_string(const PrimeSupport& prime) {
  std::string out = "(";
  for (std::size_t k = 0; k < prime.vars.size(); ++k) {
    if (k > 0) out += ", ";
    out += 'x' + std::to_string(prime.vars[k]);
  }
  return out + ')';
}

std::vector<PrimeSupport> ass_primes(const MonomialIdeal& ideal) {
  if (ideal.is_zero() || ideal.is_unit()) {
    throw PreconditionError("associated primes need a proper nonzero ideal, got " +
                            to_string(ideal));
  }
  const int n = ideal.num_vars();
  const Monomial bound = ideal.generator_lcm();
  std::set<PrimeSupport> found;

  std::array<Exponent, kMaxVariables> exps{};
  // Odometer over the box 0 <= u <= lcm(G(I)); exponents beyond the lcm do not
  // change (I : u).
  while (true) {
    Monomial u(n, std::span<const Exponent>(exps.data(), static_cast<std::size_t>(n)));
    if (!contains(ideal, u)) {
      MonomialIdeal q = colon_monomial(ideal, u);
      bool prime = std::all_of(q.generators().begin(), q.generators().end(),
                               [](const Monomial& g) { return g.degree() == 1; });
      if (prime) {
        PrimeSupport p;
        for (const auto& g : q.generators()) p.vars.push_back(*m_index(g));
        std::sort(p.vars.begin(), p.vars.end());
        found.insert(std::move(p));
      }
    }
    int k = 0;
    while (k < n && exps[static_cast<std::size_t>(k)] == bound.exponent(k + 1)) {
      exps[static_cast<std::size_t>(k)] = 0;
      ++k;
    }
    if (k == n) break;
    ++exps[static_cast<std::size_t>(k)];
  }

  std::vector<PrimeSupport> out(found.begin(), found.end());
  std::stable_sort(out.begin(), out.end(), [](const PrimeSupport& a, const PrimeSupport& b) {
    return a.vars.size() < b.vars.size();
  });
  return out;
}

bool is_ass_chain(const MonomialIdeal& ideal) {
  auto primes = ass_primes(ideal);
  for (std::size_t a = 0; a < primes.size(); ++a) {
    for (std::size_t b = a + 1; b < primes.size(); ++b) {
      if (!primes[a].is_contained_in(primes[b]) && !primes[b].is_contained_in(primes[a])) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace monreg
