#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "monreg/monomial_ideal.hpp"

namespace monreg {

/// A simplicial complex on vertices 1..n; faces are vertex bitmasks (bit k-1 is
/// vertex k). The void complex has no faces; {∅} has only the empty face.
class SimplicialComplex {
 public:
  /// Builds the complex from a face list; throws std::invalid_argument unless
  /// the family is closed under taking subsets.
  SimplicialComplex(int num_vertices, std::vector<std::uint32_t> faces);

  int num_vertices() const { return num_vertices_; }
  const std::vector<std::uint32_t>& faces() const { return faces_; }
  bool is_void() const { return faces_.empty(); }
  bool contains(std::uint32_t face) const;
  /// Largest face dimension; -1 for {∅}, empty for the void complex.
  std::optional<int> dimension() const;

 private:
  int num_vertices_;
  std::vector<std::uint32_t> faces_;  // sorted by (size, mask)
};

/// Reduced homology over Q. dims[k + 1] = dim H̃_k for k = -1, 0, 1, ...
struct ReducedHomology {
  std::vector<std::int64_t> dims;

  std::int64_t dim(int k) const;
  bool is_acyclic() const;
};

/// Upper Koszul simplicial complex K^a(I): squarefree σ ≤ a with x^(a-σ) in I.
SimplicialComplex upper_koszul(const MonomialIdeal& ideal, const Monomial& multidegree);

/// Exact reduced homology ranks from fraction-free elimination of the boundary maps.
ReducedHomology reduced_homology_dims(const SimplicialComplex& complex);

/// Rank over Q of an integer matrix given row-major.
std::size_t rational_rank(std::vector<std::vector<std::int64_t>> rows);

/// Multigraded Betti numbers beta_{i,a}(I) (of the ideal, not of S/I).
class BettiTable {
 public:
  using Key = std::pair<int, Monomial>;

  void set(int homological, const Monomial& multidegree, std::int64_t value);
  std::int64_t value(int homological, const Monomial& multidegree) const;
  const std::map<Key, std::int64_t>& entries() const { return entries_; }

  /// max |a| - i over nonzero entries.
  std::optional<int> regularity() const;
  /// Sum of beta_{i,a} over a with fixed i.
  std::int64_t total(int homological) const;
  int projective_dimension() const;

  friend bool operator==(const BettiTable&, const BettiTable&) = default;

 private:
  std::map<Key, std::int64_t> entries_;  // nonzero entries only
};

/// Desk-scale guard for the oracle; exceeding it is refused, never truncated.
struct BettiLimits {
  int max_vars = 5;
  int max_lcm_degree = 40;
};

/// All lcms of nonempty subsets of G(I), sorted.
std::vector<Monomial> lcm_lattice(const MonomialIdeal& ideal);

/// beta_{i,a}(I) = dim H̃_{i-1}(K^a(I)) over the lcm lattice of G(I).
/// Throws PreconditionError for the zero ideal or when the guard is exceeded.
BettiTable betti_table(const MonomialIdeal& ideal, const BettiLimits& limits = {});

/// Same table computed over every a <= lcm(G(I)). Test-scale cross-check.
BettiTable betti_table_exhaustive(const MonomialIdeal& ideal, const BettiLimits& limits = {});

struct BettiRegularity {
  int value = 0;
  /// A nonzero beta_{i,a} attaining |a| - i = value.
  int homological = 0;
  Monomial multidegree;
};

/// reg(I) = max |a| - i over nonzero beta_{i,a}(I).
BettiRegularity regularity_betti(const MonomialIdeal& ideal, const BettiLimits& limits = {});

}  // namespace monreg
