#include "monreg/regularity.hpp"

#include <algorithm>

#include "monreg/hilbert.hpp"
#include "monreg/structure.hpp"

namespace monreg {

namespace {

void require_proper_nonzero(const MonomialIdeal& ideal, const char* what) {
  if (ideal.is_zero() || ideal.is_unit()) {
    throw PreconditionError(std::string(what) + " needs a proper nonzero ideal, got " +
                            to_string(ideal));
  }
}

void require_borel_type(const MonomialIdeal& ideal) {
  if (auto j = first_borel_type_violation(ideal)) {
    throw PreconditionError("ideal is not of Borel type: (I : x" + std::to_string(*j) +
                            "^inf) != (I : (x1,...,x" + std::to_string(*j) + ")^inf)");
  }
}

std::string describe(const RegularityReport& r) {
  std::string out;
  if (r.chain) out += " chain=" + std::to_string(r.chain->value);
  if (r.truncation) out += " truncation=" + std::to_string(r.truncation->value);
  if (r.oracle) out += " oracle=" + std::to_string(r.oracle->value);
  return out;
}

}  // namespace

SequentialChain sequential_chain(const MonomialIdeal& ideal) {
  require_proper_nonzero(ideal, "sequential chain");
  require_borel_type(ideal);
  const int n = ideal.num_vars();

  SequentialChain chain;
  MonomialIdeal current = ideal;
  std::optional<int> prev_active;
  while (!current.is_unit()) {
    if (chain.length() >= n) throw ContractViolation("sequential chain longer than n");
    ChainStep step;
    step.index = chain.length();
    step.ideal = current;
    step.active_vars = *current.m_index();
    if (prev_active && step.active_vars >= *prev_active) {
      throw ContractViolation("m(I_l) did not strictly decrease along the chain");
    }
    step.restricted = restrict_ring(current, step.active_vars);
    step.saturated = saturate_prefix(step.restricted, step.active_vars);
    step.quotient_hilbert = sat_quotient_hilbert(step.restricted);
    step.top_degree = step.quotient_hilbert.degree();

    MonomialIdeal next = saturate_var(current, step.active_vars);
    // For Borel type, J_l^sat S = (I_l : x_{n_l}^inf).
    if (extend_ring(step.saturated, n) != next) {
      throw ContractViolation("J^sat S differs from the next chain ideal at step " +
                              std::to_string(step.index));
    }
    prev_active = step.active_vars;
    chain.steps.push_back(std::move(step));
    current = std::move(next);
  }
  chain.last = current;
  return chain;
}

IntPolynomial sat_quotient_hilbert(const MonomialIdeal& restricted) {
  require_proper_nonzero(restricted, "s(J^sat/J)");
  const int m = restricted.num_vars();
  MonomialIdeal saturated = saturate_prefix(restricted, m);
  IntPolynomial diff = hilbert_numerator(restricted) - hilbert_numerator(saturated);
  auto quotient = diff.divide_by_one_minus_t(m);
  if (!quotient) {
    throw ContractViolation("J^sat/J has infinite length for J = " + to_string(restricted));
  }
  return *quotient;
}

std::optional<int> sat_quotient_top_degree(const MonomialIdeal& restricted) {
  return sat_quotient_hilbert(restricted).degree();
}

std::optional<int> sat_quotient_top_degree_enumerated(const MonomialIdeal& restricted,
                                                      int degree_bound) {
  require_proper_nonzero(restricted, "s(J^sat/J)");
  MonomialIdeal saturated = saturate_prefix(restricted, restricted.num_vars());
  std::optional<int> top;
  for (int d = 0; d <= degree_bound; ++d) {
    for_each_monomial_of_degree(restricted.num_vars(), d, [&](const Monomial& u) {
      if (contains(saturated, u) && !contains(restricted, u)) top = d;
    });
  }
  return top;
}

ChainRegularity regularity_chain_detailed(const MonomialIdeal& ideal) {
  ChainRegularity out;
  out.chain = sequential_chain(ideal);
  std::optional<int> top;
  for (const auto& step : out.chain.steps) {
    if (step.top_degree && (!top || *step.top_degree > *top)) top = step.top_degree;
  }
  if (top) {
    out.value = *top + 1;
  } else {
    out.value = ideal.max_degree();
    out.fallback = true;
  }
  return out;
}

int regularity_chain(const MonomialIdeal& ideal) { return regularity_chain_detailed(ideal).value; }

int regularity_upper_bound(const MonomialIdeal& ideal) {
  return ideal.num_vars() * (ideal.max_degree() - 1) + 1;
}

TruncationScan regularity_truncation_detailed(const MonomialIdeal& ideal) {
  require_proper_nonzero(ideal, "truncation regularity");
  if (!is_borel_type(ideal)) {
    auto primes = ass_primes(ideal);
    bool chain = is_ass_chain(ideal);
    bool initial = std::all_of(primes.begin(), primes.end(),
                               [](const PrimeSupport& p) { return p.is_initial_segment(); });
    if (!chain) {
      throw PreconditionError(
          "truncation criterion needs an ideal of Borel type or with Ass(S/I) totally ordered");
    }
    if (!initial) {
      throw PreconditionError(
          "Ass(S/I) is totally ordered but not of the form (x1..xr); renumber the variables first");
    }
  }
  TruncationScan scan;
  scan.first_degree = ideal.max_degree();
  const int bound = regularity_upper_bound(ideal);
  for (int e = scan.first_degree; e <= bound; ++e) {
    if (is_stable(truncate(ideal, e))) {
      scan.value = e;
      return scan;
    }
    scan.unstable.push_back(e);
  }
  throw ContractViolation("no stable truncation up to n(deg(I)-1)+1 = " + std::to_string(bound) +
                          " for " + to_string(ideal));
}

int regularity_truncation(const MonomialIdeal& ideal) {
  return regularity_truncation_detailed(ideal).value;
}

std::optional<RegularityMethod> parse_regularity_method(const std::string& name) {
  if (name == "chain") return RegularityMethod::chain;
  if (name == "truncation") return RegularityMethod::truncation;
  if (name == "oracle") return RegularityMethod::oracle;
  if (name == "all") return RegularityMethod::all;
  return std::nullopt;
}

std::string to_string(RegularityMethod method) {
  switch (method) {
    case RegularityMethod::chain: return "chain";
    case RegularityMethod::truncation: return "truncation";
    case RegularityMethod::oracle: return "oracle";
    case RegularityMethod::all: return "all";
  }
  return "unknown";
}

MethodDisagreement::MethodDisagreement(MonomialIdeal ideal, RegularityReport report)
    : ContractViolation("regularity methods disagree on " + to_string(ideal) + ":" +
                        describe(report)),
      ideal_(std::move(ideal)),
      report_(std::move(report)) {}

RegularityReport regularity(const MonomialIdeal& ideal, RegularityMethod method,
                            const BettiLimits& limits) {
  RegularityReport report;
  const bool all = method == RegularityMethod::all;
  if (all || method == RegularityMethod::chain) {
    report.chain = regularity_chain_detailed(ideal);
  }
  if (all || method == RegularityMethod::truncation) {
    report.truncation = regularity_truncation_detailed(ideal);
  }
  if (all || method == RegularityMethod::oracle) {
    report.oracle = regularity_betti(ideal, limits);
  }

  if (report.oracle) {
    report.value = report.oracle->value;
  } else if (report.chain) {
    report.value = report.chain->value;
  } else {
    report.value = report.truncation->value;
  }
  bool agree = (!report.chain || report.chain->value == report.value) &&
               (!report.truncation || report.truncation->value == report.value);
  if (!agree) throw MethodDisagreement(ideal, report);
  return report;
}

}  // namespace monreg
