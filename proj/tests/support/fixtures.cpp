#include "fixtures.hpp"

#include "oracles.hpp"

namespace monreg::testing {

MonomialIdeal example_chain_ideal() {
  const int n = 4;
  return MonomialIdeal(n, {Monomial(n, {7, 0, 0, 0}), Monomial(n, {5, 1, 0, 0}),
                           Monomial(n, {2, 4, 0, 0}), Monomial(n, {1, 6, 0, 0}),
                           Monomial(n, {5, 0, 2, 0}), Monomial(n, {1, 4, 2, 0})});
}

std::vector<DSequence> test_dsequences() {
  return {DSequence({1, 2}), DSequence({1, 3}), DSequence({1, 2, 4}), DSequence({1, 3, 9})};
}

Monomial random_monomial(std::mt19937_64& rng, int num_vars, int max_degree) {
  std::uniform_int_distribution<int> deg_dist(1, max_degree);
  std::uniform_int_distribution<int> var_dist(1, num_vars);
  Monomial u(num_vars);
  for (int k = deg_dist(rng); k > 0; --k) {
    int v = var_dist(rng);
    u = u.with_exponent(v, u.exponent(v) + 1);
  }
  return u;
}

std::vector<DFixedSpec> random_principal_specs(std::uint64_t seed, int count, int max_vars,
                                               int max_degree) {
  std::mt19937_64 rng(seed);
  const auto dseqs = test_dsequences();
  std::uniform_int_distribution<int> n_dist(2, max_vars);
  std::uniform_int_distribution<std::size_t> d_dist(0, dseqs.size() - 1);
  std::vector<DFixedSpec> out;
  while (static_cast<int>(out.size()) < count) {
    int n = n_dist(rng);
    Monomial u = random_monomial(rng, n, max_degree);
    out.push_back({u, dseqs[d_dist(rng)]});
  }
  return out;
}

std::vector<std::vector<DFixedSpec>> random_dfixed_sums(std::uint64_t seed, int count,
                                                        int max_vars, int max_degree) {
  std::mt19937_64 rng(seed);
  const auto dseqs = test_dsequences();
  std::uniform_int_distribution<int> n_dist(2, max_vars);
  std::uniform_int_distribution<int> parts_dist(1, 3);
  std::uniform_int_distribution<std::size_t> d_dist(0, dseqs.size() - 1);
  std::vector<std::vector<DFixedSpec>> out;
  for (int k = 0; k < count; ++k) {
    int n = n_dist(rng);
    std::vector<DFixedSpec> specs;
    for (int p = parts_dist(rng); p > 0; --p) {
      specs.push_back({random_monomial(rng, n, max_degree), dseqs[d_dist(rng)]});
    }
    out.push_back(std::move(specs));
  }
  return out;
}

std::vector<Fixture> borel_fixtures(std::uint64_t seed, int count, int max_vars, int max_degree) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> n_dist(2, max_vars);
  std::uniform_int_distribution<int> kind_dist(0, 2);
  std::uniform_int_distribution<int> parts_dist(1, 3);
  const auto dseqs = test_dsequences();
  std::uniform_int_distribution<std::size_t> d_dist(0, dseqs.size() - 1);
  std::vector<Fixture> out;
  while (static_cast<int>(out.size()) < count) {
    const int n = n_dist(rng);
    const int kind = kind_dist(rng);
    const int parts = parts_dist(rng);
    Fixture f;
    if (kind == 0) {
      std::vector<DFixedSpec> specs;
      f.label = "dfixed:";
      for (int p = 0; p < parts; ++p) {
        specs.push_back({random_monomial(rng, n, max_degree), dseqs[d_dist(rng)]});
        f.label += " <" + to_string(specs.back().generator) + ">_" + to_string(specs.back().dseq);
      }
      f.ideal = dfixed_sum(specs);
    } else if (kind == 1) {
      std::vector<Monomial> seeds;
      for (int p = 0; p < parts; ++p) seeds.push_back(random_monomial(rng, n, max_degree));
      f.ideal = strongly_stable_closure(n, seeds);
      f.label = "strongly-stable closure";
    } else {
      // Artinian: a pure power of every variable plus a few mixed monomials.
      std::uniform_int_distribution<int> pow_dist(1, max_degree);
      std::vector<Monomial> gens;
      for (int v = 1; v <= n; ++v) gens.push_back(Monomial::variable(n, v, pow_dist(rng)));
      for (int p = 0; p < parts; ++p) gens.push_back(random_monomial(rng, n, max_degree));
      f.ideal = MonomialIdeal(n, gens);
      f.label = "artinian";
    }
    if (f.ideal.is_unit() || f.ideal.is_zero()) continue;
    f.label += " " + to_string(f.ideal);
    out.push_back(std::move(f));
  }
  return out;
}

}  // namespace monreg::testing
