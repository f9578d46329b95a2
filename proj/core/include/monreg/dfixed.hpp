#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "monreg/monomial_ideal.hpp"

namespace monreg {

/// A divisibility chain 1 = d_0 | d_1 | ... | d_s of strictly increasing integers.
class DSequence {
 public:
  /// Throws std::invalid_argument unless entries form a valid d-sequence.
  explicit DSequence(std::vector<int> entries);
  /// Parses "1,2,4".
  static DSequence parse(std::string_view text);

  const std::vector<int>& entries() const { return entries_; }
  /// s, the index of the last entry.
  int top() const { return static_cast<int>(entries_.size()) - 1; }
  int operator[](int t) const { return entries_[static_cast<std::size_t>(t)]; }

  friend bool operator==(const DSequence&, const DSequence&) = default;

 private:
  std::vector<int> entries_;
};

/// "1|2|4"
std::string to_string(const DSequence& d);

/// All d-sequences whose entries are <= max_entry, including the trivial "1".
std::vector<DSequence> enumerate_dsequences(int max_entry);

/// Digits a_0..a_s with a = sum a_t d_t and 0 <= a_t < d_{t+1}/d_t for t < s.
struct DDecomposition {
  std::vector<int> digits;

  /// Largest t with a_t != 0; empty for a = 0.
  std::optional<int> top_nonzero() const;
  friend bool operator==(const DDecomposition&, const DDecomposition&) = default;
};

DDecomposition d_decompose(int value, const DSequence& d);
/// a <=_d b: digitwise comparison of the d-decompositions.
bool d_leq(int a, int b, const DSequence& d);

/// (x1^power, ..., x_prefix^power) in n variables.
MonomialIdeal frobenius_power(int prefix, int power, int num_vars);

/// Data attached to one factor x_{i_q}^{alpha_q} of a principal generator.
struct PrincipalFactor {
  int var = 0;             // i_q
  int exponent = 0;        // alpha_q
  DDecomposition digits;   // alpha_{q,j}
  int top_digit = 0;       // s_q
  int partial_degree = 0;  // d_{q, s_q}
  int bound = 0;           // D_q = d_{q,s_q} + (i_q - 1)(d_{s_q} - 1)
};

/// u = x1^a * prod_q x_{i_q}^{alpha_q} with 2 <= i_1 < ... < i_r, together with
/// the quantities entering the regularity formula for <u>_d.
struct PrincipalSpec {
  Monomial generator;
  DSequence dseq{{1}};
  int inert_degree = 0;  // a, the exponent of x1
  std::vector<PrincipalFactor> factors;
};

/// Throws std::invalid_argument for u = 1.
PrincipalSpec make_principal_spec(const Monomial& u, const DSequence& d);

/// The principal d-fixed ideal <u>_d, expanded as x1^a times the product of the
/// Frobenius powers (m_{i_q}^{[d_j]})^{alpha_{qj}}.
MonomialIdeal principal_dfixed(const Monomial& u, const DSequence& d);

/// I is d-fixed iff the sum of <g>_d over g in G(I) equals I. Needs I proper and nonzero.
bool is_d_fixed(const MonomialIdeal& ideal, const DSequence& d);

/// The defining move condition checked on minimal generators only:
/// g x_j^t / x_i^t in I for j < i and 0 < t <=_d nu_i(g). Necessary for
/// d-fixedness; kept for experiments next to the closure test.
bool satisfies_d_moves_on_generators(const MonomialIdeal& ideal, const DSequence& d);

struct DFixedSpec {
  Monomial generator;
  DSequence dseq;
};

/// Sum of principal d-fixed ideals; a D-fixed ideal by construction.
MonomialIdeal dfixed_sum(const std::vector<DFixedSpec>& specs);

/// Searches for a presentation of I as a sum of principal d-fixed ideals with
/// d-sequences drawn from `candidates`: each minimal generator g needs some d
/// with <g>_d inside I. Returns the witness or empty.
std::optional<std::vector<DFixedSpec>> find_dfixed_presentation(
    const MonomialIdeal& ideal, const std::vector<DSequence>& candidates);

/// Same, over all d-sequences with entries <= deg(I) (larger entries cannot
/// change any <g>_d for deg(g) <= deg(I)).
std::optional<std::vector<DFixedSpec>> find_dfixed_presentation(const MonomialIdeal& ideal);

/// reg(<u>_d) = inert degree + max_q D_q; a pure x1 power has its degree.
int pardue_regularity(const PrincipalSpec& spec);

/// max over specs of pardue_regularity; bounds reg(dfixed_sum(specs)) from above.
int dfixed_reg_bound(const std::vector<DFixedSpec>& specs);

}  // namespace monreg
