#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "monreg/monomial.hpp"

namespace monreg {

/// A monomial ideal of K[x1..xn] held by its minimal generators G(I).
///
/// Generators are kept divisibility-minimal and sorted (degree, then x1 > x2 > ...),
/// so two ideals are equal iff their generator lists are equal. The zero ideal
/// has no generators; the unit ideal is generated by 1.
class MonomialIdeal {
 public:
  /// The zero ideal in n variables.
  explicit MonomialIdeal(int num_vars = 0);
  /// Minimalizes the given generators.
  MonomialIdeal(int num_vars, std::vector<Monomial> generators);

  static MonomialIdeal zero(int num_vars) { return MonomialIdeal(num_vars); }
  static MonomialIdeal unit(int num_vars);

  int num_vars() const { return num_vars_; }
  const std::vector<Monomial>& generators() const { return gens_; }
  std::size_t size() const { return gens_.size(); }

  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const { return gens_.size() == 1 && gens_.front().is_one(); }
  bool is_proper() const { return !is_unit(); }

  /// deg(I): largest degree of a minimal generator (0 for the zero ideal).
  int max_degree() const;
  /// Smallest degree of a minimal generator (0 for the zero ideal).
  int min_degree() const;
  /// m(I) = max m(u) over G(I); empty for the zero and unit ideals.
  std::optional<int> m_index() const;
  /// lcm of all minimal generators (1 for the zero ideal).
  Monomial generator_lcm() const;

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

 private:
  struct Trusted {};
  MonomialIdeal(Trusted, int num_vars, std::vector<Monomial> generators);
  friend MonomialIdeal minimalize(int num_vars, std::vector<Monomial> gens);
  friend MonomialIdeal truncate(const MonomialIdeal& ideal, int degree);

  int num_vars_ = 0;
  std::vector<Monomial> gens_;
};

/// The ideal generated by gens, keeping only divisibility-minimal elements.
MonomialIdeal minimalize(int num_vars, std::vector<Monomial> gens);

/// u in I iff some minimal generator divides u.
bool contains(const MonomialIdeal& ideal, const Monomial& u);
/// I ⊆ J.
bool is_subideal(const MonomialIdeal& inner, const MonomialIdeal& outer);

MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b);

/// (I : u)
MonomialIdeal colon_monomial(const MonomialIdeal& ideal, const Monomial& u);
/// (I : J) = intersection of (I : v) over v in G(J); the unit ideal when J = 0.
MonomialIdeal colon_ideal(const MonomialIdeal& ideal, const MonomialIdeal& by);

/// (I : x_var^inf): drop x_var from every generator.
MonomialIdeal saturate_var(const MonomialIdeal& ideal, int var);
/// (I : (x1..x_prefix)^inf) = intersection of saturate_var(I, k) for k <= prefix.
/// With prefix = n this is the saturation by the maximal ideal.
MonomialIdeal saturate_prefix(const MonomialIdeal& ideal, int prefix);

/// I_{>=degree}: generated by the monomials of I of degree >= degree.
MonomialIdeal truncate(const MonomialIdeal& ideal, int degree);

/// IS' for S' = K[x1..x_new_num_vars], new_num_vars >= n.
MonomialIdeal extend_ring(const MonomialIdeal& ideal, int new_num_vars);
/// The ideal generated by G(I) in K[x1..x_num_vars]; throws std::invalid_argument
/// if a generator involves a variable above num_vars.
MonomialIdeal restrict_ring(const MonomialIdeal& ideal, int num_vars);

/// Re-ambients a monomial; dropped variables must have exponent 0.
Monomial change_ring(const Monomial& u, int num_vars);

/// "(x1^2, x1 x2)" style text; "(0)" for the zero ideal.
std::string to_string(const MonomialIdeal& ideal);

}  // namespace monreg
