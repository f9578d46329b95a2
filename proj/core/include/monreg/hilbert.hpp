#pragma once

#include <cstdint>
#include <vector>

#include "monreg/int_polynomial.hpp"
#include "monreg/monomial_ideal.hpp"

namespace monreg {

/// Numerator N(t) of the Hilbert series of S/I, HS(S/I) = N(t) / (1 - t)^n.
///
/// Uses the pivot recursion N(I) = N(I + (p)) + t^deg(p) N(I : p) with p a power
/// of the variable shared by the most generators; the recursion bottoms out on
/// pairwise coprime generators, where N is the product of (1 - t^deg g).
IntPolynomial hilbert_numerator(const MonomialIdeal& ideal);

/// Same numerator by inclusion-exclusion over lcms of generator subsets. Only
/// usable for small generator counts; throws std::invalid_argument above max_generators.
IntPolynomial hilbert_numerator_inclusion_exclusion(const MonomialIdeal& ideal,
                                                    std::size_t max_generators = 20);

/// dim_K (S/I)_k for k = 0..up_to_degree.
std::vector<std::int64_t> hilbert_function(const MonomialIdeal& ideal, int up_to_degree);

}  // namespace monreg
