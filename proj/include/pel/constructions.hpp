#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "pel/classical.hpp"
#include "pel/numeric.hpp"
#include "pel/permutation.hpp"
#include "pel/stabilizer_chain.hpp"

namespace pel {

namespace detail {

/// Plants p into block `block` of `blocks` copies of its domain.
inline Permutation plant(const Permutation& p, unsigned block, unsigned blocks) {
  unsigned d = p.degree();
  std::vector<unsigned> images(static_cast<std::size_t>(d) * blocks);
  for (unsigned b = 0; b < blocks; ++b)
    for (unsigned x = 0; x < d; ++x)
      images[static_cast<std::size_t>(b) * d + x] =
          b == block ? block * d + p(x) : b * d + x;
  return Permutation(std::move(images));
}

/// (p, p, ..., p) acting identically on every block.
inline Permutation diagonal(const Permutation& p, unsigned blocks) {
  unsigned d = p.degree();
  std::vector<unsigned> images(static_cast<std::size_t>(d) * blocks);
  for (unsigned b = 0; b < blocks; ++b)
    for (unsigned x = 0; x < d; ++x)
      images[static_cast<std::size_t>(b) * d + x] = b * d + p(x);
  return Permutation(std::move(images));
}

}  // namespace detail

/// G^t acting on t disjoint blocks; order |G|^t. The handle carries a
/// direct-power tag so censuses can count componentwise.
inline Group direct_power(const Group& G, unsigned t) {
  if (t == 0) throw std::invalid_argument("direct_power: t must be positive");
  if (static_cast<std::uint64_t>(G.degree()) * t > caps::enumeration_cap)
    throw CapExceeded("direct_power: degree cap exceeded");
  std::vector<Permutation> gens;
  for (unsigned b = 0; b < t; ++b)
    for (const auto& g : G.generators()) gens.push_back(detail::plant(g, b, t));
  Group P = Group::generated_by(std::move(gens));
  if (P.order() != ipow(G.order(), t))
    throw std::logic_error("direct_power: order is not |G|^t");
  auto st = std::make_shared<PowerStructure>();
  st->kind = PowerStructure::Kind::direct_power;
  st->base = std::make_shared<Group>(G);
  st->copies = t;
  P.set_structure(std::move(st));
  return P;
}

/// X_t = {(x_1,...,x_t) in X^t : x_i = x_j mod S} for S <= X of index 2:
/// generated by S planted in each block plus the diagonal of one a in X\S.
/// Order 2|S|^t; tagged for componentwise censuses.
inline Group subdirect_power(const Group& X, const Group& S, unsigned t) {
  if (t == 0) throw std::invalid_argument("subdirect_power: t must be positive");
  if (X.order() != 2 * S.order() || !S.is_subgroup_of(X))
    throw std::invalid_argument("subdirect_power: S must sit in X with index 2");
  Permutation outer = X.identity();
  bool found = false;
  for (const auto& g : X.generators())
    if (!S.contains(g)) {
      outer = g;
      found = true;
      break;
    }
  if (!found) throw std::invalid_argument("subdirect_power: no generator outside S");

  std::vector<Permutation> gens;
  for (unsigned b = 0; b < t; ++b)
    for (const auto& s : S.generators()) gens.push_back(detail::plant(s, b, t));
  gens.push_back(detail::diagonal(outer, t));
  Group P = Group::generated_by(std::move(gens));
  if (P.order() != 2 * ipow(S.order(), t))
    throw std::logic_error("subdirect_power: order is not 2|S|^t");
  auto st = std::make_shared<PowerStructure>();
  st->kind = PowerStructure::Kind::subdirect_power;
  st->socle = std::make_shared<Group>(S);
  st->top = std::make_shared<Group>(X);
  st->outer_rep = outer;
  st->copies = t;
  P.set_structure(std::move(st));
  return P;
}

/// Y_t = <S^n, g> inside X wr C_n with n = 2^t blocks and g = (a,1,...,1)s,
/// s the n-cycle on blocks. Order 2^{t+1} |S|^n when a has order 2 mod S.
inline Group wreath_cyclic(const Group& S, const Permutation& a, unsigned t) {
  if (a.degree() != S.degree())
    throw std::invalid_argument("wreath_cyclic: degree mismatch");
  if (S.contains(a)) throw std::invalid_argument("wreath_cyclic: a must lie outside S");
  for (const auto& s : S.generators())
    if (!S.contains(s.conjugated_by(a)))
      throw std::invalid_argument("wreath_cyclic: a must normalize S");
  if (!S.contains(a * a))
    throw std::invalid_argument("wreath_cyclic: a^2 must lie in S");
  const unsigned n = 1u << t;
  const unsigned d = S.degree();
  if (static_cast<std::uint64_t>(d) * n > caps::enumeration_cap)
    throw CapExceeded("wreath_cyclic: degree cap exceeded");

  std::vector<Permutation> gens;
  for (unsigned b = 0; b < n; ++b)
    for (const auto& s : S.generators()) gens.push_back(detail::plant(s, b, n));

  // g = (a,1,...,1)s: apply a on block 0, then rotate block b to block b+1.
  std::vector<unsigned> images(static_cast<std::size_t>(d) * n);
  for (unsigned b = 0; b < n; ++b)
    for (unsigned x = 0; x < d; ++x) {
      unsigned y = b == 0 ? a(x) : x;
      images[static_cast<std::size_t>(b) * d + x] = ((b + 1) % n) * d + y;
    }
  gens.push_back(Permutation(std::move(images)));

  Group Y = Group::generated_by(std::move(gens));
  if (Y.order() != ipow(2, t + 1) * ipow(S.order(), n))
    throw std::logic_error("wreath_cyclic: order is not 2^{t+1} |S|^n");
  return Y;
}

/// A x B on the disjoint union of the two domains.
inline Group direct_product(const Group& A, const Group& B) {
  const unsigned da = A.degree(), db = B.degree();
  std::vector<Permutation> gens;
  for (const auto& g : A.generators()) {
    std::vector<unsigned> images(da + db);
    for (unsigned x = 0; x < da; ++x) images[x] = g(x);
    for (unsigned x = 0; x < db; ++x) images[da + x] = da + x;
    gens.push_back(Permutation(std::move(images)));
  }
  for (const auto& g : B.generators()) {
    std::vector<unsigned> images(da + db);
    for (unsigned x = 0; x < da; ++x) images[x] = x;
    for (unsigned x = 0; x < db; ++x) images[da + x] = da + g(x);
    gens.push_back(Permutation(std::move(images)));
  }
  Group P = Group::generated_by(std::move(gens));
  if (P.order() != A.order() * B.order())
    throw std::logic_error("direct_product: order is not |A||B|");
  return P;
}

/// The same group acting on a larger point set, new points fixed. Used to
/// embed a normal-subgroup spec of smaller degree into its ambient group.
inline Group embed_padded(const Group& G, unsigned degree) {
  if (degree < G.degree())
    throw std::invalid_argument("embed_padded: target degree is smaller than the group's");
  if (degree == G.degree()) return G;
  std::vector<Permutation> gens;
  for (const auto& g : G.generators()) {
    std::vector<unsigned> images(degree);
    for (unsigned x = 0; x < G.degree(); ++x) images[x] = g(x);
    for (unsigned x = G.degree(); x < degree; ++x) images[x] = x;
    gens.push_back(Permutation(std::move(images)));
  }
  return Group::generated_by(std::move(gens));
}

/// (Z/q^m) x| C_{p^n} as affine maps x -> ux + b on Z/q^m, where u is the
/// unique order-p^n element of the subgroup generated by the smallest
/// primitive root. Requires p^n | q-1; order p^n q^m.
inline Group metacyclic_affine(std::uint64_t q, unsigned m, std::uint64_t p, unsigned n) {
  if (!is_prime_u64(q) || !is_prime_u64(p))
    throw std::invalid_argument("metacyclic_affine: q and p must be prime");
  if (m == 0 || n == 0) throw std::invalid_argument("metacyclic_affine: m, n must be positive");
  std::uint64_t pn = 1;
  for (unsigned i = 0; i < n; ++i) pn *= p;
  if ((q - 1) % pn != 0)
    throw std::invalid_argument("metacyclic_affine: " + std::to_string(pn) +
                                " does not divide q-1 = " + std::to_string(q - 1));
  std::uint64_t modulus = 1;
  for (unsigned i = 0; i < m; ++i) {
    modulus *= q;
    if (modulus > caps::enumeration_cap)
      throw CapExceeded("metacyclic_affine: degree cap exceeded");
  }
  std::uint64_t phi = modulus / q * (q - 1);  // Euler phi of q^m

  auto mulmod = [&](std::uint64_t a, std::uint64_t b) {
    return static_cast<std::uint64_t>((__uint128_t)a * b % modulus);
  };
  auto powmod = [&](std::uint64_t a, std::uint64_t e) {
    std::uint64_t acc = 1;
    while (e > 0) {
      if (e & 1) acc = mulmod(acc, a);
      a = mulmod(a, a);
      e >>= 1;
    }
    return acc;
  };
  auto order_mod = [&](std::uint64_t a) {
    std::uint64_t o = 1, x = a;
    while (x != 1) {
      x = mulmod(x, a);
      ++o;
    }
    return o;
  };

  // Smallest primitive root mod q^m, by exhaustive order testing.
  std::uint64_t root = 0;
  for (std::uint64_t g = 2; g < modulus; ++g) {
    if (g % q == 0) continue;
    if (order_mod(g) == phi) {
      root = g;
      break;
    }
  }
  if (root == 0) throw std::logic_error("metacyclic_affine: no primitive root found");
  std::uint64_t u = powmod(root, phi / pn);

  std::vector<unsigned> shift(modulus), mult(modulus);
  for (std::uint64_t x = 0; x < modulus; ++x) {
    shift[x] = static_cast<unsigned>((x + 1) % modulus);
    mult[x] = static_cast<unsigned>(mulmod(u, x));
  }
  Group G = Group::generated_by({Permutation(std::move(shift)), Permutation(std::move(mult))});
  if (G.order() != Integer(pn) * modulus)
    throw std::logic_error("metacyclic_affine: order is not p^n q^m");
  return G;
}

/// Closed-form probability laws for the tower families of the paper; the
/// exact enumeration legs live with the verification harness.
struct TowerSpec {
  enum class Family { Gt, Yt, Xu, metacyclic };
  Family family;
  // Constants entering the closed form. For Gt these are the 2-element
  // counts of the socle and of the outer coset plus the socle order; for
  // metacyclic they are q, m, p, n.
  Integer socle_count;
  Integer coset_count;
  Integer socle_order;
  std::uint64_t q = 0, p = 0;
  unsigned m = 0, n = 0;

  static TowerSpec gt(Integer socle_count, Integer coset_count, Integer socle_order) {
    TowerSpec s;
    s.family = Family::Gt;
    s.socle_count = std::move(socle_count);
    s.coset_count = std::move(coset_count);
    s.socle_order = std::move(socle_order);
    return s;
  }

  static TowerSpec yt() {
    TowerSpec s;
    s.family = Family::Yt;
    return s;
  }

  static TowerSpec xu() {
    TowerSpec s;
    s.family = Family::Xu;
    return s;
  }

  static TowerSpec metacyclic(std::uint64_t q, unsigned m, std::uint64_t p, unsigned n) {
    TowerSpec s;
    s.family = Family::metacyclic;
    s.q = q;
    s.m = m;
    s.p = p;
    s.n = n;
    return s;
  }

  /// Closed-form value at the given depth parameter.
  ///   Gt:  (c_S^t + c_out^t) / (2 |S|^t)
  ///   Yt:  the lower bound (2^{t+1}-1) / 2^{t+1}
  ///   Xu:  the partial product prod_{t=u}^{depth} (1 - 2^{-(t+1)})
  ///   metacyclic: ((p^n - 1) q^m + 1) / (p^n q^m) at m = depth
  Rational value_at(unsigned depth) const {
    switch (family) {
      case Family::Gt: {
        Integer num = ipow(socle_count, depth) + ipow(coset_count, depth);
        Integer den = 2 * ipow(socle_order, depth);
        return Rational(num, den);
      }
      case Family::Yt: {
        Integer den = ipow(2, depth + 1);
        return Rational(den - 1, den);
      }
      case Family::Xu:
        throw std::logic_error("TowerSpec: Xu needs a truncation range, use partial_product");
      case Family::metacyclic: {
        Integer pn = ipow(Integer(p), n);
        Integer qm = ipow(Integer(q), depth);
        return Rational((pn - 1) * qm + 1, pn * qm);
      }
    }
    throw std::logic_error("TowerSpec: unreachable");
  }

  /// Limit of the family as the depth grows.
  Rational limit() const {
    switch (family) {
      case Family::Gt:
        return Rational(1, 2);
      case Family::Yt:
      case Family::Xu:
        return Rational(1, 1);
      case Family::metacyclic: {
        Integer pn = ipow(Integer(p), n);
        return Rational(pn - 1, pn);
      }
    }
    throw std::logic_error("TowerSpec: unreachable");
  }

  /// prod_{t=u}^{last} (1 - 2^{-(t+1)}), the X_u truncation.
  static Rational partial_product(unsigned u, unsigned last) {
    Rational acc(1);
    for (unsigned t = u; t <= last; ++t) {
      Integer den = ipow(2, t + 1);
      acc *= Rational(den - 1, den);
    }
    return acc;
  }
};

}  // namespace pel
