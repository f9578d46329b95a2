#include <doctest.h>

#include <stdexcept>

#include "fixtures.hpp"
#include "monreg/error.hpp"
#include "monreg/dfixed.hpp"
#include "monreg/regularity.hpp"
#include "monreg/structure.hpp"
#include "oracles.hpp"

using namespace monreg;
namespace mt = monreg::testing;

TEST_CASE("d-sequence validation and parsing") {
  CHECK(DSequence::parse("1,2,4").entries() == std::vector<int>{1, 2, 4});
  CHECK(to_string(DSequence({1, 3, 9})) == "1|3|9");
  CHECK(DSequence({1}).top() == 0);
  CHECK_THROWS_AS(DSequence({2, 4}), std::invalid_argument);
  CHECK_THROWS_AS(DSequence({1, 2, 3}), std::invalid_argument);
  CHECK_THROWS_AS(DSequence({1, 2, 2}), std::invalid_argument);
  CHECK_THROWS_AS(DSequence({}), std::invalid_argument);
  CHECK_THROWS_AS(DSequence::parse("1,,2"), std::invalid_argument);
  CHECK_THROWS_AS(DSequence::parse("1,x"), std::invalid_argument);

  auto all = enumerate_dsequences(4);
  CHECK(all.size() == 5);  // 1, 1|2, 1|3, 1|4, 1|2|4
}

TEST_CASE("d-decomposition") {
  DSequence d({1, 2, 4});
  CHECK(d_decompose(7, d).digits == std::vector<int>{1, 1, 1});
  CHECK(d_decompose(9, d).digits == std::vector<int>{1, 0, 2});
  CHECK(d_decompose(0, d).digits == std::vector<int>{0, 0, 0});
  CHECK_FALSE(d_decompose(0, d).top_nonzero().has_value());
  CHECK(d_decompose(8, d).top_nonzero() == 2);
  CHECK(d_leq(2, 3, d));
  CHECK_FALSE(d_leq(1, 2, d));

  for (const auto& seq : mt::test_dsequences()) {
    for (int a = 0; a <= 60; ++a) {
      auto vectors = mt::all_digit_vectors(a, seq);
      REQUIRE(vectors.size() == 1);
      CHECK(vectors.front() == d_decompose(a, seq).digits);
    }
  }
}

TEST_CASE("<=_d is a partial order") {
  for (const auto& d : mt::test_dsequences()) {
    for (int a = 0; a <= 30; ++a) {
      CHECK(d_leq(a, a, d));
      for (int b = 0; b <= 30; ++b) {
        CHECK(d_leq(a, b, d) == mt::brute_d_leq(a, b, d));
        if (a != b && d_leq(a, b, d)) CHECK_FALSE(d_leq(b, a, d));
        if (!d_leq(a, b, d)) continue;
        for (int c = 0; c <= 30; ++c)
          if (d_leq(b, c, d)) CHECK(d_leq(a, c, d));
      }
    }
  }
}

TEST_CASE("principal d-fixed ideals") {
  CHECK(frobenius_power(2, 3, 3) ==
        MonomialIdeal(3, {Monomial(3, {3, 0, 0}), Monomial(3, {0, 3, 0})}));
  auto u = Monomial(3, {0, 0, 4});
  auto I = principal_dfixed(u, DSequence({1, 2}));
  CHECK(contains(I, Monomial(3, {4, 0, 0})));
  CHECK(contains(I, Monomial(3, {2, 0, 2})));
  CHECK_FALSE(contains(I, Monomial(3, {1, 0, 3})));
  CHECK(is_d_fixed(I, DSequence({1, 2})));
  CHECK_FALSE(is_strongly_stable(I));
  CHECK(is_borel_type(I));

  auto spec = make_principal_spec(u, DSequence({1, 2}));
  CHECK(spec.inert_degree == 0);
  REQUIRE(spec.factors.size() == 1);
  CHECK(spec.factors[0].top_digit == 1);
  CHECK(spec.factors[0].partial_degree == 4);
  CHECK(spec.factors[0].bound == 6);
  CHECK(pardue_regularity(spec) == 6);
  CHECK(pardue_regularity(make_principal_spec(Monomial(3, {0, 2, 1}), DSequence({1, 2}))) == 3);
  CHECK(pardue_regularity(make_principal_spec(Monomial(3, {5, 0, 0}), DSequence({1, 2}))) == 5);
  CHECK_THROWS_AS(make_principal_spec(Monomial(3), DSequence({1, 2})), std::invalid_argument);
}

TEST_CASE("principal d-fixed ideal equals the move closure") {
  for (const auto& d : mt::test_dsequences()) {
    for (int n = 1; n <= 4; ++n) {
      for (int deg = 1; deg <= 8; ++deg) {
        for_each_monomial_of_degree(n, deg, [&](const Monomial& u) {
          CAPTURE(to_string(u));
          CAPTURE(to_string(d));
          auto closure = mt::d_move_closure(u, d);
          auto expanded = principal_dfixed(u, d);
          CHECK(expanded == MonomialIdeal(n, {closure.begin(), closure.end()}));
        });
      }
    }
  }
}

TEST_CASE("d-fixed predicates") {
  MonomialIdeal powers(3, {Monomial(3, {2, 0, 0}), Monomial(3, {0, 3, 0}), Monomial(3, {0, 0, 4})});
  CHECK_FALSE(is_d_fixed(powers, DSequence({1, 2})));
  CHECK_THROWS_AS(is_d_fixed(MonomialIdeal::unit(3), DSequence({1, 2})), PreconditionError);

  // Strongly stable ideals are d-fixed for every d.
  MonomialIdeal ss(3, {Monomial(3, {2, 0, 0}), Monomial(3, {1, 1, 0}), Monomial(3, {0, 2, 0})});
  for (const auto& d : mt::test_dsequences()) CHECK(is_d_fixed(ss, d));

  for (const auto& specs : mt::random_dfixed_sums(11, 40, 4, 6)) {
    if (specs.size() != 1) continue;
    auto I = dfixed_sum(specs);
    CHECK(is_d_fixed(I, specs.front().dseq));
    CHECK(satisfies_d_moves_on_generators(I, specs.front().dseq));
    CHECK(mt::d_fixed_up_to_degree(I, specs.front().dseq, I.max_degree() + 2));
  }
}

TEST_CASE("d-fixed ideals of Frobenius powers of the maximal ideal") {
  for (int d1 = 2; d1 <= 8; ++d1) {
    CAPTURE(d1);
    DSequence d({1, d1});
    auto I = frobenius_power(3, d1, 3);
    CHECK(is_d_fixed(I, d));
    CHECK(is_borel_type(I));
    CHECK(regularity_chain(I) == 3 * d1 - 2);
    CHECK(pardue_regularity(make_principal_spec(Monomial(3, {0, 0, d1}), d)) == 3 * d1 - 2);
  }
}

TEST_CASE("presentation search") {
  auto I = principal_dfixed(Monomial(3, {0, 0, 4}), DSequence({1, 2}));
  auto witness = find_dfixed_presentation(I);
  REQUIRE(witness);
  CHECK(dfixed_sum(*witness) == I);

  MonomialIdeal powers(2, {Monomial(2, {2, 0}), Monomial(2, {1, 1}), Monomial(2, {0, 3})});
  auto w2 = find_dfixed_presentation(powers);
  REQUIRE(w2);
  CHECK(dfixed_sum(*w2) == powers);

  MonomialIdeal not_borel(2, {Monomial(2, {1, 1})});
  CHECK_FALSE(find_dfixed_presentation(not_borel).has_value());
}

TEST_CASE("closed formula against the chain on random principal ideals") {
  for (const auto& spec : mt::random_principal_specs(7, 60, 4, 7)) {
    CAPTURE(to_string(spec.generator));
    CAPTURE(to_string(spec.dseq));
    auto I = principal_dfixed(spec.generator, spec.dseq);
    CHECK(regularity_chain(I) == pardue_regularity(make_principal_spec(spec.generator, spec.dseq)));
  }
}

TEST_CASE("sum bound") {
  for (const auto& specs : mt::random_dfixed_sums(13, 60, 4, 6)) {
    auto I = dfixed_sum(specs);
    CHECK(is_borel_type(I));
    CHECK(regularity_chain(I) <= dfixed_reg_bound(specs));
  }
}
