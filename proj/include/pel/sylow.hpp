#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "pel/numeric.hpp"
#include "pel/permutation.hpp"
#include "pel/stabilizer_chain.hpp"

namespace pel {

/// N_G(H) by full scan: every element of G is tested for conjugating the
/// generators of H back into H. Capped, not backtracked.
inline Group normalizer(const Group& G, const Group& H) {
  if (G.order() > caps::normalizer_cap)
    throw CapExceeded("normalizer: |G| = " + G.order().str() + " above the scan cap");
  if (H.degree() != G.degree()) throw std::invalid_argument("normalizer: degree mismatch");

  std::vector<Permutation> gens;
  Group N = Group::trivial(G.degree());
  G.for_each_element([&](const Permutation& g) {
    for (const auto& h : H.generators())
      if (!H.contains(h.conjugated_by(g))) return;
    if (!N.contains(g)) {
      gens.push_back(g);
      N = Group::generated_by(gens);
    }
  });
  return N;
}

/// A Sylow p-subgroup by deterministic normalizer ascent: seed with the
/// first nontrivial p-element in enumeration order, then repeatedly adjoin
/// the first p-element of N_G(P) \ P until the order reaches the p-part of
/// |G|. Certified by exact order equality.
inline Group sylow(const Group& G, std::uint64_t p) {
  if (!is_prime_u64(p)) throw std::invalid_argument("sylow: p must be prime");
  if (G.order() % p != 0)
    throw std::invalid_argument("sylow: " + std::to_string(p) + " does not divide |G| = " +
                                G.order().str());
  const Integer target = p_part(G.order(), p);

  Permutation seed = G.identity();
  bool found = false;
  G.for_each_element([&](const Permutation& g) {
    if (found || g.is_identity() || !is_p_element(g, p)) return;
    seed = g;
    found = true;
  });
  if (!found) throw std::logic_error("sylow: no nontrivial p-element found");

  std::vector<Permutation> gens{seed};
  Group P = Group::generated_by(gens);
  while (P.order() < target) {
    Group N = normalizer(G, P);
    bool extended = false;
    N.for_each_element([&](const Permutation& y) {
      if (extended || !is_p_element(y, p) || P.contains(y)) return;
      std::vector<Permutation> joined = gens;
      joined.push_back(y);
      Group J = Group::generated_by(joined);
      if (!is_power_of(J.order(), p))
        throw std::logic_error("sylow: join with a normalizing p-element is not a p-group");
      gens = std::move(joined);
      P = std::move(J);
      extended = true;
    });
    if (!extended) throw std::logic_error("sylow: ascent stalled below the p-part");
  }
  if (P.order() != target) throw std::logic_error("sylow: overshot the p-part");
  return P;
}

}  // namespace pel
