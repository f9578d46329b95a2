#include <doctest.h>

#include <stdexcept>

#include <random>

#include "monreg/monomial.hpp"

using namespace monreg;

TEST_CASE("m_index") {
  CHECK(m_index(Monomial(4, {5, 0, 2, 0})) == 3);
  CHECK_FALSE(m_index(Monomial(3)).has_value());
  CHECK(m_index(Monomial(4, {1, 0, 0, 0})) == 1);
}

TEST_CASE("divides") {
  CHECK(divides(Monomial(2, {1, 4}), Monomial(2, {1, 6})));
  CHECK_FALSE(divides(Monomial(2, {5, 0}), Monomial(2, {2, 4})));
  CHECK(divides(Monomial(3), Monomial(3, {0, 7, 1})));
  CHECK_THROWS_AS(divides(Monomial(2), Monomial(3)), std::invalid_argument);
}

TEST_CASE("lcm, gcd, divide_exact") {
  CHECK(lcm(Monomial(2, {5, 0}), Monomial(2, {1, 4})) == Monomial(2, {5, 4}));
  CHECK(gcd(Monomial(3, {5, 0, 2}), Monomial(3, {1, 4, 2})) == Monomial(3, {1, 0, 2}));
  CHECK(divide_exact(Monomial(3, {5, 0, 2}), Monomial(3, {0, 0, 2})) == Monomial(3, {5, 0, 0}));
  CHECK_THROWS_AS(divide_exact(Monomial(2, {1, 0}), Monomial(2, {0, 1})), std::invalid_argument);
}

TEST_CASE("construction guards") {
  CHECK_THROWS_AS(Monomial(2, {1, -1}), std::invalid_argument);
  CHECK_THROWS_AS(Monomial(3, {1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(Monomial(kMaxVariables + 1), std::invalid_argument);
  CHECK_THROWS_AS(Monomial(2).exponent(3), std::out_of_range);
  CHECK_THROWS_AS(multiply(Monomial::variable(1, 1, 2'000'000'000), Monomial::variable(1, 1, 2'000'000'000)),
                  std::overflow_error);
}

TEST_CASE("text form and ordering") {
  CHECK(to_string(Monomial(4, {1, 4, 2, 0})) == "x1 x2^4 x3^2");
  CHECK(to_string(Monomial(2)) == "1");
  CHECK(Monomial(2, {2, 0}) < Monomial(2, {1, 1}));
  CHECK(Monomial(2, {0, 3}) < Monomial(2, {4, 0}));
}

TEST_CASE("enumeration by degree") {
  int count = 0;
  for_each_monomial_of_degree(3, 4, [&](const Monomial& m) {
    CHECK(m.degree() == 4);
    ++count;
  });
  CHECK(count == 15);
  CHECK(count_monomials_of_degree(3, 4) == 15);
  CHECK(count_monomials_of_degree(1, 9) == 1);
  CHECK(count_monomials_of_degree(4, 0) == 1);
}

TEST_CASE("arithmetic invariants on random monomials") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> e(0, 3);
  auto random = [&](int n) {
    std::vector<Exponent> v(static_cast<std::size_t>(n));
    for (auto& x : v) x = e(rng);
    return Monomial(n, std::span<const Exponent>(v));
  };
  for (int trial = 0; trial < 500; ++trial) {
    const int n = 1 + trial % 5;
    Monomial u = random(n), v = random(n);
    if (divides(u, v) && divides(v, u)) CHECK(u == v);
    CHECK(divides(gcd(u, v), u));
    CHECK(divides(u, lcm(u, v)));
    CHECK(multiply(u, v).degree() == u.degree() + v.degree());
    auto mu = m_index(u), mv = m_index(v), muv = m_index(multiply(u, v));
    std::optional<int> expected = mu;
    if (mv && (!expected || *mv > *expected)) expected = mv;
    CHECK(muv == expected);
    CHECK(divide_exact(multiply(u, v), v) == u);
  }
}
