#include "monreg/hilbert.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace monreg {

namespace {

std::uint32_t support_mask(const Monomial& u) {
  std::uint32_t mask = 0;
  auto e = u.exponents();
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] > 0) mask |= 1u << i;
  }
  return mask;
}

IntPolynomial numerator(const MonomialIdeal& ideal) {
  const auto& gens = ideal.generators();
  const int n = ideal.num_vars();

  std::uint32_t seen = 0;
  bool coprime = true;
  std::vector<int> occurrences(static_cast<std::size_t>(n), 0);
  for (const auto& g : gens) {
    std::uint32_t m = support_mask(g);
    if (seen & m) coprime = false;
    seen |= m;
    for (int i = 0; i < n; ++i) {
      if (m & (1u << i)) ++occurrences[static_cast<std::size_t>(i)];
    }
  }
  if (coprime) {
    IntPolynomial out{1};
    for (const auto& g : gens) out = out * (IntPolynomial{1} - IntPolynomial::monomial(1, g.degree()));
    return out;
  }

  // Pivot variable: shared by the most generators.
  int var = static_cast<int>(std::max_element(occurrences.begin(), occurrences.end()) -
                             occurrences.begin()) + 1;
  // Exponent: median over generators that involve x_var but are not pure powers of
  // it. A pure power x_var^f in G(I) bounds those exponents strictly below f, so
  // the pivot lies outside I and both branches strictly enlarge I.
  std::vector<Exponent> candidates;
  for (const auto& g : gens) {
    Exponent e = g.exponent(var);
    if (e > 0 && e != g.degree()) candidates.push_back(e);
  }
  std::sort(candidates.begin(), candidates.end());
  Exponent power = candidates[candidates.size() / 2];
  Monomial pivot = Monomial::variable(n, var, power);

  std::vector<Monomial> with_pivot = gens;
  with_pivot.push_back(pivot);
  IntPolynomial out = numerator(minimalize(n, std::move(with_pivot)));
  out += numerator(colon_monomial(ideal, pivot)).shifted(power);
  return out;
}

}  // namespace

IntPolynomial hilbert_numerator(const MonomialIdeal& ideal) { return numerator(ideal); }

IntPolynomial hilbert_numerator_inclusion_exclusion(const MonomialIdeal& ideal,
                                                    std::size_t max_generators) {
  const auto& gens = ideal.generators();
  if (gens.size() > max_generators) {
    throw std::invalid_argument("inclusion-exclusion over " + std::to_string(gens.size()) +
                                " generators exceeds the limit of " +
                                std::to_string(max_generators));
  }
  std::vector<IntPolynomial::Coefficient> coeffs(1, 0);
  const std::uint64_t subsets = std::uint64_t{1} << gens.size();
  for (std::uint64_t mask = 0; mask < subsets; ++mask) {
    Monomial l(ideal.num_vars());
    for (std::size_t i = 0; i < gens.size(); ++i) {
      if (mask & (std::uint64_t{1} << i)) l = lcm(l, gens[i]);
    }
    auto d = static_cast<std::size_t>(l.degree());
    if (coeffs.size() <= d) coeffs.resize(d + 1, 0);
    coeffs[d] += (std::popcount(mask) % 2 == 0) ? 1 : -1;
  }
  return IntPolynomial(std::move(coeffs));
}

std::vector<std::int64_t> hilbert_function(const MonomialIdeal& ideal, int up_to_degree) {
  return hilbert_numerator(ideal).series_coefficients(ideal.num_vars(), up_to_degree);
}

}  // namespace monreg
