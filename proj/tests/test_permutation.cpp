#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "pel/permutation.hpp"
#include "test_util.hpp"

using namespace pel;

namespace {

// Independent oracle: multiply until the identity comes back.
Integer order_by_powering(const Permutation& p, unsigned long long bailout = 2000000) {
  Permutation acc = p;
  Integer n = 1;
  while (!acc.is_identity()) {
    acc = acc * p;
    ++n;
    REQUIRE(n <= bailout);
  }
  return n;
}

}  // namespace

TEST_CASE("order of the identity is 1") {
  REQUIRE(order_of(Permutation(5)) == 1);
}

TEST_CASE("order of a single cycle") {
  Permutation p = Permutation::from_cycles(5, {{0, 1, 2}});
  REQUIRE(order_of(p) == 3);
}

TEST_CASE("order of (0 1 2)(3 4) is 6, matching brute-force powering") {
  Permutation p = Permutation::from_cycles(5, {{0, 1, 2}, {3, 4}});
  REQUIRE(order_by_powering(p) == 6);
  REQUIRE(order_of(p) == 6);
}

TEST_CASE("cycle-type order equals repeated-composition order on random permutations") {
  std::mt19937_64 rng(20240811);
  for (int trial = 0; trial < 1000; ++trial) {
    unsigned degree = 1 + static_cast<unsigned>(Group::uniform_below(rng, 50));
    Permutation p = test::random_permutation(degree, rng);
    REQUIRE(order_of(p) == order_by_powering(p));
  }
}

TEST_CASE("p-element test") {
  REQUIRE(is_p_element(Permutation(4), 2));  // identity has order 2^0
  REQUIRE_FALSE(is_p_element(Permutation::from_cycles(5, {{0, 1, 2}, {3, 4}}), 2));
  REQUIRE(is_p_element(Permutation::from_cycles(6, {{0, 1}, {2, 3, 4, 5}}), 2));
  REQUIRE_THROWS_AS(is_p_element(Permutation(3), 6), std::invalid_argument);
  REQUIRE_THROWS_AS(is_p_element(Permutation(3), 1), std::invalid_argument);
}

TEST_CASE("a p-element is never a q-element for q != p unless it is the identity") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    // Random 2-elements: products of disjoint cycles of 2-power length.
    unsigned degree = 8;
    Permutation p = test::random_permutation(degree, rng);
    Integer o = order_of(p);
    // Power p into a 2-element: p^(odd part of o) has 2-power order.
    Integer odd = o;
    while (odd % 2 == 0) odd /= 2;
    Permutation two_el = p.power(static_cast<long long>(odd));
    REQUIRE(is_p_element(two_el, 2));
    for (std::uint64_t q : {3ull, 5ull, 7ull}) {
      if (two_el.is_identity()) {
        REQUIRE(is_p_element(two_el, q));
      } else {
        REQUIRE_FALSE(is_p_element(two_el, q));
      }
    }
  }
}

TEST_CASE("composition with the inverse gives the identity") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 100; ++trial) {
    Permutation p = test::random_permutation(12, rng);
    REQUIRE((p * p.inverse()).is_identity());
    REQUIRE((p.inverse() * p).is_identity());
  }
}

TEST_CASE("conjugation preserves order") {
  std::mt19937_64 rng(123);
  for (int trial = 0; trial < 100; ++trial) {
    Permutation p = test::random_permutation(10, rng);
    Permutation q = test::random_permutation(10, rng);
    REQUIRE(order_of(p.conjugated_by(q)) == order_of(p));
  }
}

TEST_CASE("power is consistent with repeated products") {
  Permutation p = Permutation::from_cycles(7, {{0, 1, 2, 3}, {4, 5, 6}});
  Permutation acc(7);
  for (int e = 0; e < 15; ++e) {
    REQUIRE(p.power(e) == acc);
    acc = acc * p;
  }
  REQUIRE(p.power(-3) == p.inverse().power(3));
}

TEST_CASE("malformed image arrays are rejected") {
  REQUIRE_THROWS_AS(Permutation({0, 0, 1}), std::invalid_argument);
  REQUIRE_THROWS_AS(Permutation({0, 3}), std::invalid_argument);
}

TEST_CASE("degree mismatch in products is rejected") {
  REQUIRE_THROWS_AS(Permutation(3) * Permutation(4), std::invalid_argument);
}
