#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "monreg/monomial_ideal.hpp"

namespace monreg {

// Zero and unit ideals count as stable, strongly stable and of Borel type.

/// Stable: x_i * u / x_m(u) in I for every u in G(I) and i < m(u).
bool is_stable(const MonomialIdeal& ideal);

/// Strongly stable (Borel-fixed in characteristic 0): x_j * u / x_i in I for
/// every u in G(I), every x_i | u and every j < i.
bool is_strongly_stable(const MonomialIdeal& ideal);

/// Borel type: (I : x_j^inf) = (I : (x1..xj)^inf) for all j. Returns the
/// saturation-equality verdict; debug builds assert the exchange test agrees.
bool is_borel_type(const MonomialIdeal& ideal);

/// Saturation-equality test. Returns the first j where the two saturations
/// differ, or empty when I is of Borel type.
std::optional<int> first_borel_type_violation(const MonomialIdeal& ideal);
bool is_borel_type_by_saturation(const MonomialIdeal& ideal);

/// Exchange test: for every u in G(I), x_i^q || u and j < i, u / x_i^q lies in
/// (I : x_j^inf), i.e. x_j^t u / x_i^q is in I for some t.
bool is_borel_type_by_exchange(const MonomialIdeal& ideal);

/// A monomial prime (x_i1, ..., x_ik), held as its sorted variable indices.
struct PrimeSupport {
  std::vector<int> vars;

  /// True when the prime is (x1, ..., x_r).
  bool is_initial_segment() const;
  bool is_contained_in(const PrimeSupport& other) const;

  friend auto operator<=>(const PrimeSupport&, const PrimeSupport&) = default;
};

std::string to_string(const PrimeSupport& prime);

/// Ass(S/I) by brute force over witnesses u bounded componentwise by the lcm
/// of G(I): the primes among the colon ideals (I : u) with u not in I.
/// Requires I proper and nonzero. Sorted by (size, indices).
std::vector<PrimeSupport> ass_primes(const MonomialIdeal& ideal);

/// Ass(S/I) totally ordered by inclusion.
bool is_ass_chain(const MonomialIdeal& ideal);

}  // namespace monreg
