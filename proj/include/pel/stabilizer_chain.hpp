#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <memory>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

#include "pel/numeric.hpp"
#include "pel/permutation.hpp"

namespace pel {

struct CapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

namespace caps {
/// Process-wide defaults; the CLI overrides them from flags / environment.
inline std::uint64_t enumeration_cap = 1ULL << 28;
inline std::uint64_t pair_cap = 5000;
inline std::uint64_t quotient_index_cap = 10000;
inline std::uint64_t normalizer_cap = 1ULL << 21;
}  // namespace caps

class Group;

/// Census shortcut tag: handles built as direct or subdirect powers carry
/// their factors so counts can be taken componentwise instead of by
/// enumeration.
struct PowerStructure {
  enum class Kind { direct_power, subdirect_power };
  Kind kind;
  std::shared_ptr<const Group> base;       // the repeated factor (direct power)
  std::shared_ptr<const Group> socle;      // S for the subdirect power
  std::shared_ptr<const Group> top;        // X with S <= X of index 2
  Permutation outer_rep;                   // a in X \ S
  unsigned copies = 1;
};

/// A finite permutation group held as generators plus a deterministic
/// Schreier-Sims stabilizer chain. Immutable after construction; the exact
/// order is the product of the transversal sizes.
class Group {
 public:
  /// Builds the chain from generators (all of equal degree, list nonempty).
  /// `forced_base` optionally fixes the base point sequence up front; it must
  /// then cover every point moved by the group (used for coset
  /// canonicalization, where the base is 0,1,...,degree-1).
  static Group generated_by(std::vector<Permutation> generators,
                            std::vector<unsigned> forced_base = {}) {
    if (generators.empty())
      throw std::invalid_argument("generated_by: generator list is empty");
    unsigned deg = generators.front().degree();
    for (const auto& g : generators)
      if (g.degree() != deg)
        throw std::invalid_argument("generated_by: generator degree mismatch");
    Group G;
    G.degree_ = deg;
    G.generators_ = std::move(generators);
    G.build_chain(std::move(forced_base));
    return G;
  }

  static Group trivial(unsigned degree) {
    return generated_by({Permutation(degree)});
  }

  unsigned degree() const { return degree_; }
  const Integer& order() const { return order_; }
  const std::vector<Permutation>& generators() const { return generators_; }
  const std::vector<unsigned>& base() const { return base_; }

  Permutation identity() const { return Permutation(degree_); }

  /// Membership by sifting through the chain.
  bool contains(const Permutation& p) const {
    if (p.degree() != degree_)
      throw std::invalid_argument("contains: degree mismatch");
    return sift(p).is_identity();
  }

  bool contains_all(const std::vector<Permutation>& ps) const {
    for (const auto& p : ps)
      if (!contains(p)) return false;
    return true;
  }

  /// Chain residue of p: identity iff p is a member.
  Permutation sift(Permutation p) const {
    for (const auto& lvl : levels_) {
      int pos = lvl.orbit_pos[p(lvl.beta)];
      if (pos < 0) return p;
      p = p * lvl.transversal_inv[static_cast<std::size_t>(pos)];
    }
    return p;
  }

  bool is_subgroup_of(const Group& other) const {
    return other.contains_all(generators_);
  }

  bool same_group_as(const Group& other) const {
    return order_ == other.order_ && is_subgroup_of(other);
  }

  bool is_normal_in(const Group& ambient) const {
    if (!is_subgroup_of(ambient)) return false;
    for (const auto& g : ambient.generators())
      for (const auto& s : generators_)
        if (!contains(s.conjugated_by(g))) return false;
    return true;
  }

  /// Visits each element exactly once as a product of one transversal
  /// element per level. Throws CapExceeded when the order is above `cap`.
  template <typename Fn>
  void for_each_element(Fn&& fn, std::uint64_t cap = caps::enumeration_cap) const {
    if (order_ > cap)
      throw CapExceeded("enumeration cap exceeded: |G| = " + order_.str());
    enumerate_from_level(0, Permutation(degree_), fn);
  }

  std::vector<Permutation> elements(std::uint64_t cap = caps::enumeration_cap) const {
    std::vector<Permutation> out;
    if (order_ <= cap) out.reserve(static_cast<std::size_t>(order_));
    for_each_element([&](const Permutation& p) { out.push_back(p); }, cap);
    return out;
  }

  /// Exactly uniform: one independent uniform transversal pick per level.
  Permutation sample(std::mt19937_64& rng) const {
    Permutation acc(degree_);
    for (const auto& lvl : levels_) {
      const Permutation& u =
          lvl.transversal[uniform_below(rng, static_cast<std::uint64_t>(lvl.orbit.size()))];
      acc = u * acc;
    }
    return acc;
  }

  /// Number of chain levels (for tests and for coset splitting).
  std::size_t chain_length() const { return levels_.size(); }

  std::vector<unsigned> level_orbit(std::size_t level) const { return levels_.at(level).orbit; }
  std::vector<Permutation> level_transversal(std::size_t level) const {
    return levels_.at(level).transversal;
  }

  /// Transversal of the first chain level; the group is the disjoint union
  /// of Stab(beta_0) * u over these u (used to split parallel censuses).
  std::vector<Permutation> first_level_transversal() const {
    if (levels_.empty()) return {Permutation(degree_)};
    return levels_.front().transversal;
  }

  /// Elements of the point stabilizer part under the first level:
  /// for_each_element restricted to levels >= 1, composed with `suffix`.
  template <typename Fn>
  void for_each_element_with_suffix(const Permutation& suffix, Fn&& fn) const {
    enumerate_from_level(levels_.empty() ? 0 : 1, suffix, fn);
  }

  const std::shared_ptr<const PowerStructure>& structure() const { return structure_; }
  void set_structure(std::shared_ptr<const PowerStructure> s) { structure_ = std::move(s); }

  static std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n) {
    // Fixed rejection sampler so sequences are reproducible across platforms.
    if (n <= 1) return 0;
    std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                          std::numeric_limits<std::uint64_t>::max() % n;
    std::uint64_t v;
    do {
      v = rng();
    } while (v >= limit);
    return v % n;
  }

 private:
  struct Level {
    unsigned beta = 0;
    std::vector<Permutation> gens;           // strong generators fixing the base prefix
    std::vector<unsigned> orbit;             // BFS discovery order
    std::vector<int> orbit_pos;              // point -> index in orbit, -1 outside
    std::vector<Permutation> transversal;    // u with u(beta) = orbit[i]
    std::vector<Permutation> transversal_inv;

    void recompute_orbit(unsigned degree) {
      orbit.clear();
      transversal.clear();
      transversal_inv.clear();
      orbit_pos.assign(degree, -1);
      orbit.push_back(beta);
      orbit_pos[beta] = 0;
      transversal.push_back(Permutation(degree));
      transversal_inv.push_back(Permutation(degree));
      for (std::size_t qi = 0; qi < orbit.size(); ++qi) {
        unsigned gamma = orbit[qi];
        for (const auto& s : gens) {
          unsigned delta = s(gamma);
          if (orbit_pos[delta] < 0) {
            orbit_pos[delta] = static_cast<int>(orbit.size());
            orbit.push_back(delta);
            Permutation u = transversal[qi] * s;
            transversal_inv.push_back(u.inverse());
            transversal.push_back(std::move(u));
          }
        }
      }
    }
  };

  // Deterministic incremental Schreier-Sims, verified level by level from
  // the bottom of the chain upward.
  void build_chain(std::vector<unsigned> forced_base) {
    const bool base_is_forced = !forced_base.empty();
    base_ = std::move(forced_base);
    if (base_is_forced) {
      for (const auto& g : generators_)
        if (!g.is_identity() && moves_no_base_point(g))
          throw std::invalid_argument("forced base does not cover the group's support");
    } else {
      for (const auto& g : generators_)
        if (!g.is_identity() && moves_no_base_point(g)) base_.push_back(first_moved(g));
    }

    levels_.resize(base_.size());
    for (std::size_t i = 0; i < base_.size(); ++i) levels_[i].beta = base_[i];
    for (const auto& g : generators_) {
      if (g.is_identity()) continue;
      for (std::size_t i = 0; i < base_.size(); ++i) {
        levels_[i].gens.push_back(g);
        if (g(base_[i]) != base_[i]) break;  // g does not fix beta_i: stop here
      }
    }
    for (auto& lvl : levels_) lvl.recompute_orbit(degree_);

    std::ptrdiff_t i = static_cast<std::ptrdiff_t>(levels_.size()) - 1;
    while (i >= 0) {
      Level& lvl = levels_[static_cast<std::size_t>(i)];
      lvl.recompute_orbit(degree_);
      bool complete = true;
      for (std::size_t oi = 0; oi < lvl.orbit.size() && complete; ++oi) {
        for (const auto& s : lvl.gens) {
          unsigned image = s(lvl.orbit[oi]);
          Permutation schreier =
              lvl.transversal[oi] * s *
              lvl.transversal_inv[static_cast<std::size_t>(lvl.orbit_pos[image])];
          if (schreier.is_identity()) continue;
          auto [residue, drop] = sift_from(std::move(schreier), static_cast<std::size_t>(i) + 1);
          if (residue.is_identity()) continue;
          if (drop == levels_.size()) {
            if (base_is_forced)
              throw std::logic_error("forced base cannot absorb residue");
            base_.push_back(first_moved(residue));
            levels_.emplace_back();
            levels_.back().beta = base_.back();
            levels_.back().recompute_orbit(degree_);
          }
          for (std::size_t l = static_cast<std::size_t>(i) + 1; l <= drop; ++l) {
            levels_[l].gens.push_back(residue);
            levels_[l].recompute_orbit(degree_);
          }
          i = static_cast<std::ptrdiff_t>(drop);
          complete = false;
          break;
        }
      }
      if (complete) --i;
    }

    order_ = 1;
    for (const auto& lvl : levels_) order_ *= static_cast<std::uint64_t>(lvl.orbit.size());
  }

  std::pair<Permutation, std::size_t> sift_from(Permutation p, std::size_t start) const {
    for (std::size_t l = start; l < levels_.size(); ++l) {
      const Level& lvl = levels_[l];
      int pos = lvl.orbit_pos[p(lvl.beta)];
      if (pos < 0) return {std::move(p), l};
      p = p * lvl.transversal_inv[static_cast<std::size_t>(pos)];
    }
    return {std::move(p), levels_.size()};
  }

  bool moves_no_base_point(const Permutation& g) const {
    for (unsigned b : base_)
      if (g(b) != b) return false;
    return true;
  }

  static unsigned first_moved(const Permutation& g) {
    for (unsigned x = 0; x < g.degree(); ++x)
      if (g(x) != x) return x;
    throw std::logic_error("first_moved called on identity");
  }

  template <typename Fn>
  void enumerate_from_level(std::size_t level, const Permutation& acc, Fn&& fn) const {
    if (level >= levels_.size()) {
      fn(acc);
      return;
    }
    for (const auto& u : levels_[level].transversal)
      enumerate_from_level(level + 1, u * acc, fn);
  }

  unsigned degree_ = 0;
  std::vector<Permutation> generators_;
  std::vector<unsigned> base_;
  std::vector<Level> levels_;
  Integer order_ = 1;
  std::shared_ptr<const PowerStructure> structure_;
};

/// Subgroup generated inside an ambient group; degree checking only, the
/// caller asserts containment where it matters.
inline Group subgroup(const std::vector<Permutation>& gens, unsigned degree) {
  if (gens.empty()) return Group::trivial(degree);
  return Group::generated_by(gens);
}

/// The subgroup generated by two elements; the workhorse of the pair tests.
inline Group generated_pair(const Permutation& a, const Permutation& b) {
  return Group::generated_by({a, b});
}

}  // namespace pel
