#pragma once

// Deterministic generated corpora of Borel-type ideals for property tests.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "monreg/dfixed.hpp"
#include "monreg/monomial_ideal.hpp"

namespace monreg::testing {

/// The ideal of the sequential-chain worked example in K[x1..x4].
MonomialIdeal example_chain_ideal();

/// d-sequences exercised throughout the tests: 1|2, 1|3, 1|2|4, 1|3|9.
std::vector<DSequence> test_dsequences();

struct Fixture {
  std::string label;
  MonomialIdeal ideal;
};

/// Random monomial with 1 <= degree <= max_degree in n variables.
Monomial random_monomial(std::mt19937_64& rng, int num_vars, int max_degree);

/// Random principal d-fixed specs: n in 2..max_vars, degree <= max_degree, d from the test set.
std::vector<DFixedSpec> random_principal_specs(std::uint64_t seed, int count, int max_vars,
                                               int max_degree);

/// Random D-fixed sums of 1..3 principal pieces with independently chosen d.
std::vector<std::vector<DFixedSpec>> random_dfixed_sums(std::uint64_t seed, int count,
                                                        int max_vars, int max_degree);

/// Borel-type corpus: D-fixed sums, strongly stable closures and artinian ideals.
std::vector<Fixture> borel_fixtures(std::uint64_t seed, int count, int max_vars, int max_degree);

}  // namespace monreg::testing
