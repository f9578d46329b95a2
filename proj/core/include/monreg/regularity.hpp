#pragma once

#include <optional>
#include <string>
#include <vector>

#include "monreg/betti.hpp"
#include "monreg/error.hpp"
#include "monreg/int_polynomial.hpp"
#include "monreg/monomial_ideal.hpp"

namespace monreg {

/// One step I_l -> I_{l+1} = (I_l : x_{n_l}^inf) of the sequential chain.
struct ChainStep {
  int index = 0;
  MonomialIdeal ideal;       // I_l in the full ring
  int active_vars = 0;       // n_l = m(I_l)
  MonomialIdeal restricted;  // J_l: G(I_l) in K[x1..x_{n_l}]
  MonomialIdeal saturated;   // J_l^sat in K[x1..x_{n_l}]
  /// Hilbert series of the finite-length module J_l^sat / J_l (a polynomial).
  IntPolynomial quotient_hilbert;
  /// s(J_l^sat / J_l); empty when the quotient is zero.
  std::optional<int> top_degree;
};

struct SequentialChain {
  std::vector<ChainStep> steps;
  /// The terminal ideal I_r; always the unit ideal.
  MonomialIdeal last;

  int length() const { return static_cast<int>(steps.size()); }
};

/// Sequential chain of a proper nonzero Borel-type ideal. Throws
/// PreconditionError naming the first j with (I : x_j^inf) != (I : (x1..xj)^inf)
/// otherwise, and ContractViolation if a chain invariant fails.
SequentialChain sequential_chain(const MonomialIdeal& ideal);

/// Hilbert polynomial of J^sat / J for J proper in K[x1..xm]; throws
/// ContractViolation if the quotient does not have finite length.
IntPolynomial sat_quotient_hilbert(const MonomialIdeal& restricted);

/// s(J^sat / J), read from sat_quotient_hilbert; empty if J is saturated.
std::optional<int> sat_quotient_top_degree(const MonomialIdeal& restricted);

/// Top degree of J^sat / J by listing monomials of J^sat outside J in degrees
/// 0..degree_bound. Cross-check for the Hilbert route.
std::optional<int> sat_quotient_top_degree_enumerated(const MonomialIdeal& restricted,
                                                      int degree_bound);

struct ChainRegularity {
  int value = 0;
  SequentialChain chain;
  /// Every s_l was empty and the value fell back to deg(I).
  bool fallback = false;
};

/// reg(I) = max_l s(J_l^sat / J_l) + 1 over the sequential chain.
ChainRegularity regularity_chain_detailed(const MonomialIdeal& ideal);
int regularity_chain(const MonomialIdeal& ideal);

struct TruncationScan {
  int value = 0;
  int first_degree = 0;      // where the scan started: deg(I)
  std::vector<int> unstable;  // degrees scanned whose truncation was not stable
};

/// reg(I) = min { e >= deg(I) : I_{>=e} stable }. Needs I of Borel type, or with
/// Ass(S/I) a chain of primes (x1..xr). Throws ContractViolation if the scan
/// passes n (deg(I) - 1) + 1.
TruncationScan regularity_truncation_detailed(const MonomialIdeal& ideal);
int regularity_truncation(const MonomialIdeal& ideal);

/// n (deg(I) - 1) + 1.
int regularity_upper_bound(const MonomialIdeal& ideal);

enum class RegularityMethod { chain, truncation, oracle, all };

std::optional<RegularityMethod> parse_regularity_method(const std::string& name);
std::string to_string(RegularityMethod method);

struct RegularityReport {
  int value = 0;
  std::optional<ChainRegularity> chain;
  std::optional<TruncationScan> truncation;
  std::optional<BettiRegularity> oracle;
};

/// Raised when methods disagree. Carries the counterexample.
class MethodDisagreement : public ContractViolation {
 public:
  MethodDisagreement(MonomialIdeal ideal, RegularityReport report);

  const MonomialIdeal& ideal() const { return ideal_; }
  const RegularityReport& report() const { return report_; }

 private:
  MonomialIdeal ideal_;
  RegularityReport report_;
};

/// Runs the requested method(s). With `all`, every method must agree exactly; the
/// oracle value is reported as ground truth when they do not.
RegularityReport regularity(const MonomialIdeal& ideal, RegularityMethod method,
                            const BettiLimits& limits = {});

}  // namespace monreg
