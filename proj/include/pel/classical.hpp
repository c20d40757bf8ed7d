#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "pel/finite_field.hpp"
#include "pel/numeric.hpp"
#include "pel/permutation.hpp"
#include "pel/stabilizer_chain.hpp"

namespace pel {

/// Points of PG(1,q), indexed [x:1] for x = 0..q-1 in field-element order,
/// then [1:0] at index q. Degree of every classical group here is q+1.
inline unsigned projective_degree(const FieldSpec& F) {
  return static_cast<unsigned>(F.size()) + 1;
}

/// The projective action of an invertible matrix [[a,b],[c,d]] on PG(1,q).
inline Permutation moebius_permutation(const FieldSpec& F, std::uint64_t a, std::uint64_t b,
                                       std::uint64_t c, std::uint64_t d) {
  const std::uint64_t q = F.size();
  auto apply = [&](std::uint64_t x, std::uint64_t y) -> unsigned {
    std::uint64_t nx = F.add(F.mul(a, x), F.mul(b, y));
    std::uint64_t ny = F.add(F.mul(c, x), F.mul(d, y));
    if (ny != 0) return static_cast<unsigned>(F.mul(nx, F.inv(ny)));
    if (nx == 0) throw std::invalid_argument("moebius_permutation: singular matrix");
    return static_cast<unsigned>(q);
  };
  std::vector<unsigned> images(q + 1);
  for (std::uint64_t x = 0; x < q; ++x) images[x] = apply(x, 1);
  images[q] = apply(1, 0);
  return Permutation(std::move(images));
}

/// [x:y] -> [x^r:y^r]; order k as a permutation, identity when k = 1.
inline Permutation frobenius_permutation(const FieldSpec& F) {
  const std::uint64_t q = F.size();
  std::vector<unsigned> images(q + 1);
  for (std::uint64_t x = 0; x < q; ++x) images[x] = static_cast<unsigned>(F.frobenius(x));
  images[q] = static_cast<unsigned>(q);
  return Permutation(std::move(images));
}

namespace detail {

/// Generators of PSL(2,q) on the projective line: the translation z -> z+1,
/// the square scaling z -> w^2 z and the inversion z -> -1/z. The first two
/// generate the full point stabilizer of [1:0], which is maximal, so adding
/// the inversion generates the whole group; the caller certifies the order.
inline std::vector<Permutation> psl2_generators(const FieldSpec& F) {
  const std::uint64_t w = F.generator();
  return {
      moebius_permutation(F, 1, 1, 0, 1),
      moebius_permutation(F, w, 0, 0, F.inv(w)),
      moebius_permutation(F, 0, F.neg(1), 1, 0),
  };
}

inline Permutation diagonal_rep(const FieldSpec& F) {
  return moebius_permutation(F, F.generator(), 0, 0, 1);
}

inline void certify_order(const Group& G, const Integer& expected, const std::string& name) {
  if (G.order() != expected)
    throw std::logic_error(name + ": constructed order " + G.order().str() +
                           " differs from " + expected.str());
}

inline std::pair<std::uint64_t, unsigned> factor_prime_power(std::uint64_t q) {
  if (q < 2) throw std::invalid_argument("prime power expected, got " + std::to_string(q));
  std::uint64_t r = q;
  for (std::uint64_t d = 2; d * d <= q; ++d)
    if (q % d == 0) {
      r = d;
      break;
    }
  unsigned k = 0;
  std::uint64_t m = q;
  while (m % r == 0) {
    m /= r;
    ++k;
  }
  if (m != 1) throw std::invalid_argument(std::to_string(q) + " is not a prime power");
  return {r, k};
}

}  // namespace detail

enum class ClassicalKind { psl2, pgl2, pgammal2 };

/// PSL(2,q), PGL(2,q) or PGammaL(2,q) acting on the q+1 projective points,
/// with the exact classical order certified against the chain.
inline Group classical_group(ClassicalKind kind, std::uint64_t q) {
  auto [r, k] = detail::factor_prime_power(q);
  if (q < 4) throw std::invalid_argument("classical_group: q must be at least 4");
  if (r == 2 && kind != ClassicalKind::psl2)
    throw std::invalid_argument("classical_group: even q is supported for psl2 only");
  FieldSpec F(r, k);
  std::vector<Permutation> gens = detail::psl2_generators(F);
  Integer qq = q;
  Integer base_order = qq * (qq * qq - 1);
  Integer expected;
  switch (kind) {
    case ClassicalKind::psl2:
      expected = base_order / (r == 2 ? 1 : 2);
      break;
    case ClassicalKind::pgl2:
      gens.push_back(detail::diagonal_rep(F));
      expected = base_order;
      break;
    case ClassicalKind::pgammal2:
      gens.push_back(detail::diagonal_rep(F));
      gens.push_back(frobenius_permutation(F));
      expected = Integer(k) * base_order;
      break;
  }
  Group G = Group::generated_by(std::move(gens));
  detail::certify_order(G, expected,
                        kind == ClassicalKind::psl2    ? "PSL(2," + std::to_string(q) + ")"
                        : kind == ClassicalKind::pgl2 ? "PGL(2," + std::to_string(q) + ")"
                                                      : "PGammaL(2," + std::to_string(q) + ")");
  return G;
}

/// A coset rep * socle inside an ambient group.
struct LabeledCoset {
  Group ambient;
  Group socle;
  Permutation rep;

  LabeledCoset(Group ambient_, Group socle_, Permutation rep_)
      : ambient(std::move(ambient_)), socle(std::move(socle_)), rep(std::move(rep_)) {
    if (!ambient.contains(rep)) throw std::invalid_argument("LabeledCoset: rep not in ambient");
    if (!socle.is_subgroup_of(ambient))
      throw std::invalid_argument("LabeledCoset: socle not inside ambient");
  }

  const Integer& size() const { return socle.order(); }
};

/// M10 = <PSL(2,9), d*phi> for d in PGL(2,9) \ PSL(2,9) and phi the
/// Frobenius permutation of PG(1,9). The outer representative is searched
/// deterministically until it has order 8; the construction certifies
/// |M10| = 720 and that every outer element has 2-power order.
inline std::pair<Group, Group> m10() {
  FieldSpec F(3, 2);
  Group socle = classical_group(ClassicalKind::psl2, 9);
  Permutation phi = frobenius_permutation(F);
  Permutation d = detail::diagonal_rep(F);

  Permutation rep = d * phi;
  if (order_of(rep) != 8) {
    bool found = false;
    socle.for_each_element([&](const Permutation& s) {
      if (found) return;
      Permutation candidate = (d * s) * phi;
      if (order_of(candidate) == 8) {
        rep = candidate;
        found = true;
      }
    });
    if (!found) throw std::logic_error("m10: no order-8 outer representative found");
  }

  std::vector<Permutation> gens = socle.generators();
  gens.push_back(rep);
  Group X = Group::generated_by(std::move(gens));
  detail::certify_order(X, 720, "M10");
  socle.for_each_element([&](const Permutation& s) {
    Integer o = order_of(rep * s);
    if (o != 4 && o != 8)
      throw std::logic_error("m10: outer element of order " + o.str());
  });
  return {std::move(X), std::move(socle)};
}

enum class OuterKind { diag, frob, diag_frob };

/// The cosets g*PSL(2,q) used throughout: diag is the PGL \ PSL coset,
/// frob is the Frobenius coset in PSL x| <phi>, diag_frob is the coset of
/// alpha = d*phi. For diag_frob the rep is the first candidate of order 4k.
inline LabeledCoset outer_coset(OuterKind kind, std::uint64_t q) {
  auto [r, k] = detail::factor_prime_power(q);
  if (r == 2 || q < 5) throw std::invalid_argument("outer_coset: odd q >= 5 required");
  if (kind != OuterKind::diag && k < 2)
    throw std::invalid_argument("outer_coset: Frobenius cosets need a non-prime field");
  FieldSpec F(r, k);
  Group socle = classical_group(ClassicalKind::psl2, q);

  switch (kind) {
    case OuterKind::diag: {
      Group ambient = classical_group(ClassicalKind::pgl2, q);
      return LabeledCoset(std::move(ambient), std::move(socle), detail::diagonal_rep(F));
    }
    case OuterKind::frob: {
      Permutation phi = frobenius_permutation(F);
      std::vector<Permutation> gens = socle.generators();
      gens.push_back(phi);
      Group ambient = Group::generated_by(std::move(gens));
      detail::certify_order(ambient, Integer(k) * socle.order(), "PSL x| <phi>");
      return LabeledCoset(std::move(ambient), std::move(socle), std::move(phi));
    }
    case OuterKind::diag_frob: {
      Permutation phi = frobenius_permutation(F);
      Permutation d = detail::diagonal_rep(F);
      Permutation rep = d * phi;
      const Integer target = Integer(4) * k;
      if (order_of(rep) != target) {
        bool found = false;
        socle.for_each_element([&](const Permutation& s) {
          if (found) return;
          Permutation candidate = (d * s) * phi;
          if (order_of(candidate) == target) {
            rep = candidate;
            found = true;
          }
        });
        // Every coset element has order dividing 4k; if none attains it,
        // keep the deterministic d*phi.
      }
      std::vector<Permutation> gens = socle.generators();
      gens.push_back(rep);
      Group ambient = Group::generated_by(std::move(gens));
      return LabeledCoset(std::move(ambient), std::move(socle), std::move(rep));
    }
  }
  throw std::logic_error("outer_coset: unreachable");
}

}  // namespace pel
