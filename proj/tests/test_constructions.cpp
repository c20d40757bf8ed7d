#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "pel/census.hpp"
#include "pel/constructions.hpp"
#include "pel/group_spec.hpp"

using namespace pel;

TEST_CASE("direct power of Sym(3)") {
  Group G = direct_power(build_group("sym:3"), 2);
  REQUIRE(G.order() == 36);
  REQUIRE(G.degree() == 6);
}

TEST_CASE("order of a tuple is the lcm of the component orders") {
  Group base = build_group("sym:4");
  Group G = direct_power(base, 3);
  std::mt19937_64 rng(10);
  for (int trial = 0; trial < 50; ++trial) {
    Permutation g = G.sample(rng);
    Integer expected = 1;
    for (unsigned b = 0; b < 3; ++b) {
      // restriction of g to block b
      std::vector<unsigned> images(4);
      for (unsigned x = 0; x < 4; ++x) images[x] = g(b * 4 + x) - b * 4;
      expected = boost::multiprecision::lcm(expected, order_of(Permutation(images)));
    }
    REQUIRE(order_of(g) == expected);
  }
}

TEST_CASE("2-element count of Alt(6)^2 is 136^2, by structure and by enumeration") {
  Group A6sq = direct_power(build_group("alt:6"), 2);
  CensusReport structured = p_census(A6sq, 2);
  REQUIRE(structured.count == 136 * 136);
  REQUIRE(p_element_count_by_enumeration(A6sq, 2) == 136 * 136);
}

TEST_CASE("subdirect power at t=1 is X itself") {
  auto [X, S] = m10();
  Group G1 = subdirect_power(X, S, 1);
  REQUIRE(G1.order() == 720);
  REQUIRE(G1.degree() == 10);
}

TEST_CASE("subdirect power at t=2 has order 2*360^2") {
  auto [X, S] = m10();
  Group G2 = subdirect_power(X, S, 2);
  REQUIRE(G2.order() == 259200);
  REQUIRE(G2.degree() == 20);
}

TEST_CASE("every subdirect element lies in S^t or has every block outer") {
  auto [X, S] = m10();
  Group G2 = subdirect_power(X, S, 2);
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 100; ++trial) {
    Permutation g = G2.sample(rng);
    bool in0, in1;
    {
      std::vector<unsigned> b0(10), b1(10);
      for (unsigned x = 0; x < 10; ++x) {
        b0[x] = g(x);
        b1[x] = g(10 + x) - 10;
      }
      in0 = S.contains(Permutation(b0));
      in1 = S.contains(Permutation(b1));
    }
    REQUIRE(in0 == in1);  // the defining congruence mod S
  }
}

TEST_CASE("subdirect power demands index 2") {
  Group big = classical_group(ClassicalKind::pgammal2, 9);
  Group S = classical_group(ClassicalKind::psl2, 9);
  REQUIRE_THROWS_AS(subdirect_power(big, S, 2), std::invalid_argument);
}

TEST_CASE("wreath tower Y_0 is M10, Y_1 has order 4*360^2 on 20 points") {
  auto [X, S] = m10();
  const Permutation& a = X.generators().back();
  Group Y0 = wreath_cyclic(S, a, 0);
  REQUIRE(Y0.order() == 720);
  Group Y1 = wreath_cyclic(S, a, 1);
  REQUIRE(Y1.order() == 518400);
  REQUIRE(Y1.degree() == 20);
}

TEST_CASE("wreath construction rejects a inside S") {
  auto [X, S] = m10();
  REQUIRE_THROWS_AS(wreath_cyclic(S, S.generators().front(), 1), std::invalid_argument);
}

TEST_CASE("metacyclic affine instances") {
  Group s3_like = metacyclic_affine(3, 1, 2, 1);
  REQUIRE(s3_like.order() == 6);
  REQUIRE(p_census(s3_like, 2).probability == Rational(2, 3));

  Group frob21 = metacyclic_affine(7, 1, 3, 1);
  REQUIRE(frob21.order() == 21);
  CensusReport c = p_census(frob21, 3);
  REQUIRE(c.count == 15);
  REQUIRE(c.probability == Rational(5, 7));
}

TEST_CASE("metacyclic censuses over the small corpus: (p^n - 1) q^m + 1") {
  struct Instance {
    std::uint64_t q;
    unsigned m;
    std::uint64_t p;
    unsigned n;
  };
  for (Instance inst : {Instance{3, 2, 2, 1}, {3, 4, 2, 1}, {7, 1, 3, 1}, {13, 1, 3, 1},
                        {5, 2, 2, 2}, {11, 1, 5, 1}}) {
    CAPTURE(inst.q, inst.m, inst.p, inst.n);
    Group G = metacyclic_affine(inst.q, inst.m, inst.p, inst.n);
    Integer qm = ipow(Integer(inst.q), inst.m);
    Integer pn = ipow(Integer(inst.p), inst.n);
    REQUIRE(qm <= 10000);
    CensusReport c = p_census(G, inst.p);
    REQUIRE(c.count == (pn - 1) * qm + 1);
  }
}

TEST_CASE("metacyclic divisibility hypothesis is enforced") {
  REQUIRE_THROWS_AS(metacyclic_affine(5, 1, 2, 3), std::invalid_argument);
  REQUIRE_THROWS_AS(metacyclic_affine(4, 1, 3, 1), std::invalid_argument);
}

TEST_CASE("direct product of distinct groups") {
  Group G = direct_product(build_group("alt:5"), build_group("cyc:3"));
  REQUIRE(G.order() == 180);
  REQUIRE(G.degree() == 8);
  Group padded = embed_padded(build_group("alt:5"), 8);
  REQUIRE(padded.is_normal_in(G));
}

TEST_CASE("tower closed forms") {
  TowerSpec gt = TowerSpec::gt(136, 360, 360);
  REQUIRE(gt.value_at(1) == Rational(496, 720));
  REQUIRE(gt.value_at(2) == Rational(136 * 136 + 360 * 360, 2 * 360 * 360));
  REQUIRE(gt.limit() == Rational(1, 2));

  TowerSpec yt = TowerSpec::yt();
  REQUIRE(yt.value_at(1) == Rational(3, 4));
  REQUIRE(yt.limit() == 1);

  TowerSpec meta = TowerSpec::metacyclic(3, 0, 2, 1);
  REQUIRE(meta.value_at(1) == Rational(2, 3));
  REQUIRE(meta.limit() == Rational(1, 2));

  Rational prod12 = TowerSpec::partial_product(1, 2);
  REQUIRE(prod12 == Rational(3, 4) * Rational(7, 8));
}
