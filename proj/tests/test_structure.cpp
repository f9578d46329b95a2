#include <doctest.h>

#include <stdexcept>

#include "fixtures.hpp"
#include "monreg/error.hpp"
#include "monreg/structure.hpp"
#include "oracles.hpp"

using namespace monreg;
using monreg::testing::example_chain_ideal;

namespace {

MonomialIdeal make(int n, std::vector<std::vector<Exponent>> gens) {
  std::vector<Monomial> v;
  for (const auto& g : gens) v.emplace_back(n, std::span<const Exponent>(g));
  return MonomialIdeal(n, v);
}

std::vector<PrimeSupport> primes(std::vector<std::vector<int>> sets) {
  std::vector<PrimeSupport> out;
  for (auto& s : sets) out.push_back(PrimeSupport{s});
  return out;
}

}  // namespace

TEST_CASE("stable") {
  CHECK(is_stable(make(2, {{2, 0}, {1, 1}, {0, 3}})));
  CHECK_FALSE(is_stable(make(2, {{1, 6}})));
  CHECK(is_stable(MonomialIdeal::unit(3)));
  CHECK(is_stable(MonomialIdeal::zero(3)));
}

TEST_CASE("strongly stable") {
  CHECK(is_strongly_stable(make(2, {{2, 0}, {1, 1}, {0, 2}})));
  CHECK(is_strongly_stable(make(2, {{1, 0}, {0, 2}})));
  CHECK_FALSE(is_strongly_stable(make(2, {{0, 1}})));
  CHECK_FALSE(is_strongly_stable(example_chain_ideal()));
  // Stable but not strongly stable.
  auto I = make(3, {{2, 0, 0}, {1, 1, 0}, {0, 2, 0}, {1, 0, 1}, {0, 1, 1}});
  CHECK(is_stable(I) == monreg::testing::stable_up_to_degree(I, 5));
  CHECK(is_strongly_stable(I) == monreg::testing::strongly_stable_up_to_degree(I, 5));
}

TEST_CASE("Borel type by both methods") {
  auto I = example_chain_ideal();
  CHECK(is_borel_type(I));
  CHECK(is_borel_type_by_exchange(I));

  auto xy = make(2, {{1, 1}});
  CHECK_FALSE(is_borel_type(xy));
  CHECK_FALSE(is_borel_type_by_exchange(xy));
  CHECK(first_borel_type_violation(xy) == 2);

  auto contrast = make(2, {{3, 0}, {1, 1}, {0, 2}});
  CHECK(is_borel_type_by_saturation(contrast));
  CHECK(is_borel_type_by_exchange(contrast));
  CHECK_FALSE(is_stable(contrast));

  CHECK(is_borel_type(MonomialIdeal::zero(2)));
  CHECK(is_borel_type(MonomialIdeal::unit(2)));
}

TEST_CASE("associated primes") {
  CHECK(ass_primes(make(2, {{1, 1}})) == primes({{1}, {2}}));
  CHECK(ass_primes(make(2, {{2, 0}, {1, 1}})) == primes({{1}, {1, 2}}));
  auto ex = ass_primes(example_chain_ideal());
  CHECK(ex == primes({{1}, {1, 2}, {1, 2, 3}}));
  CHECK_THROWS_AS(ass_primes(MonomialIdeal::unit(2)), PreconditionError);
  CHECK_THROWS_AS(ass_primes(MonomialIdeal::zero(2)), PreconditionError);
}

TEST_CASE("totally ordered Ass") {
  CHECK_FALSE(is_ass_chain(make(2, {{1, 1}})));
  CHECK(is_ass_chain(example_chain_ideal()));
  CHECK(is_ass_chain(make(3, {{2, 0, 0}, {1, 1, 0}, {0, 3, 0}})));  // (x1,x2)-primary
}

TEST_CASE("classifier properties on the Borel corpus and on random ideals") {
  for (const auto& f : monreg::testing::borel_fixtures(21, 120, 4, 6)) {
    CAPTURE(f.label);
    const auto& I = f.ideal;
    const bool borel = is_borel_type_by_saturation(I);
    CHECK(borel);
    CHECK(borel == is_borel_type_by_exchange(I));
    CHECK(borel == monreg::testing::borel_type_by_power_search(I));
    if (is_strongly_stable(I)) CHECK(is_stable(I));
    if (is_stable(I)) CHECK(borel);
    for (const auto& p : ass_primes(I)) CHECK(p.is_initial_segment());
    CHECK(is_ass_chain(I));
  }

  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = 2 + trial % 3;
    std::vector<Monomial> gens;
    for (int k = 0; k < 1 + trial % 4; ++k) gens.push_back(monreg::testing::random_monomial(rng, n, 5));
    MonomialIdeal I(n, gens);
    CAPTURE(to_string(I));
    const bool borel = is_borel_type_by_saturation(I);
    CHECK(borel == is_borel_type_by_exchange(I));
    CHECK(borel == monreg::testing::borel_type_by_power_search(I));
    CHECK(is_stable(I) == monreg::testing::stable_up_to_degree(I, I.max_degree() + 2));
    CHECK(is_strongly_stable(I) == monreg::testing::strongly_stable_up_to_degree(I, I.max_degree() + 2));
    if (is_strongly_stable(I)) CHECK(is_stable(I));
    if (is_stable(I)) CHECK(borel);
  }
}

TEST_CASE("Borel type is closed under sum, product, intersection and colon") {
  auto corpus = monreg::testing::borel_fixtures(31, 80, 3, 5);
  std::mt19937_64 rng(3);
  int pairs = 0;
  for (std::size_t a = 0; a < corpus.size() && pairs < 100; ++a) {
    for (std::size_t b = a + 1; b < corpus.size() && pairs < 100; ++b) {
      const auto& I = corpus[a].ideal;
      const auto& J = corpus[b].ideal;
      if (I.num_vars() != J.num_vars()) continue;
      ++pairs;
      CAPTURE(to_string(I));
      CAPTURE(to_string(J));
      CHECK(is_borel_type(sum(I, J)));
      CHECK(is_borel_type(product(I, J)));
      CHECK(is_borel_type(intersect(I, J)));
      CHECK(is_borel_type(colon_monomial(I, monreg::testing::random_monomial(rng, I.num_vars(), 4))));
      CHECK(is_borel_type(colon_ideal(I, J)));
    }
  }
  CHECK(pairs == 100);
}
