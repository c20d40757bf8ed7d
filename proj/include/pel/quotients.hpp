#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "pel/numeric.hpp"
#include "pel/permutation.hpp"
#include "pel/stabilizer_chain.hpp"
#include "pel/sylow.hpp"

namespace pel {

inline Permutation commutator(const Permutation& a, const Permutation& b) {
  return a.inverse() * b.inverse() * a * b;
}

/// Smallest normal subgroup of G containing the seeds: closes the seed set
/// under conjugation by the generators of G.
inline Group normal_closure(const Group& G, const std::vector<Permutation>& seeds) {
  for (const auto& s : seeds)
    if (!G.contains(s)) throw std::invalid_argument("normal_closure: seed outside the group");
  std::vector<Permutation> gens;
  for (const auto& s : seeds)
    if (!s.is_identity()) gens.push_back(s);
  if (gens.empty()) return Group::trivial(G.degree());

  Group K = Group::generated_by(gens);
  bool closed = false;
  while (!closed) {
    closed = true;
    for (std::size_t i = 0; i < gens.size() && closed; ++i)
      for (const auto& g : G.generators()) {
        Permutation c = gens[i].conjugated_by(g);
        if (!K.contains(c)) {
          gens.push_back(std::move(c));
          K = Group::generated_by(gens);
          closed = false;
          break;
        }
      }
  }
  return K;
}

/// Iterated derived series; solvable iff it reaches the trivial group.
/// A perfect step (D = previous term) ends the descent immediately.
inline bool is_solvable(const Group& G) {
  Group current = G;
  while (current.order() > 1) {
    std::vector<Permutation> comms;
    const auto& gens = current.generators();
    for (std::size_t i = 0; i < gens.size(); ++i)
      for (std::size_t j = i + 1; j < gens.size(); ++j) {
        Permutation c = commutator(gens[i], gens[j]);
        if (!c.is_identity()) comms.push_back(std::move(c));
      }
    Group derived = normal_closure(current, comms);
    if (derived.order() == current.order()) return false;
    current = std::move(derived);
  }
  return true;
}

namespace detail {

struct ImageVectorHash {
  std::size_t operator()(const std::vector<unsigned>& v) const {
    std::size_t h = 1469598103934665603ULL;
    for (unsigned x : v) {
      h ^= x;
      h *= 1099511628211ULL;
    }
    return h;
  }
};

}  // namespace detail

/// Canonical representatives of right cosets N*h: the chain of N is forced
/// onto the base 0,1,...,d-1, and the representative is the coset element
/// whose image vector is lexicographically least. Two elements lie in the
/// same coset exactly when their canonical forms agree.
class CosetCanonicalizer {
 public:
  explicit CosetCanonicalizer(const Group& N)
      : chain_(build_full_base(N)) {}

  Permutation canonical(Permutation h) const {
    // Greedy: at the level of point b, pick the transversal u whose orbit
    // point minimizes h(u(b)); deeper levels fix all earlier points, so the
    // image vector is minimized lexicographically. Images are distinct, so
    // the minimizer at each level is unique.
    return chain_.canonical_in_coset(std::move(h));
  }

 private:
  struct FullBaseChain {
    struct Level {
      unsigned beta;
      std::vector<unsigned> orbit;
      std::vector<Permutation> transversal;
    };
    std::vector<Level> levels;

    Permutation canonical_in_coset(Permutation h) const {
      for (const auto& lvl : levels) {
        if (lvl.orbit.size() == 1) continue;
        std::size_t best = 0;
        unsigned best_image = h(lvl.orbit[0]);
        for (std::size_t i = 1; i < lvl.orbit.size(); ++i) {
          unsigned img = h(lvl.orbit[i]);
          if (img < best_image) {
            best_image = img;
            best = i;
          }
        }
        if (best != 0) h = lvl.transversal[best] * h;
      }
      return h;
    }
  };

  static FullBaseChain build_full_base(const Group& N) {
    std::vector<unsigned> full(N.degree());
    for (unsigned i = 0; i < N.degree(); ++i) full[i] = i;
    Group chain = Group::generated_by(N.generators(), full);
    FullBaseChain out;
    out.levels.resize(chain.chain_length());
    for (std::size_t l = 0; l < chain.chain_length(); ++l) {
      out.levels[l].beta = chain.base()[l];
      out.levels[l].orbit = chain.level_orbit(l);
      out.levels[l].transversal = chain.level_transversal(l);
    }
    return out;
  }

  FullBaseChain chain_;
};

/// The coset action of G on the cosets of a normal subgroup N: image acts
/// faithfully and transitively on the |G:N| cosets, so |image| = |G|/|N|.
class QuotientMap {
 public:
  QuotientMap(Group source, Group kernel)
      : source_(std::move(source)), kernel_(std::move(kernel)), canon_(kernel_) {
    if (!kernel_.is_normal_in(source_))
      throw std::invalid_argument("quotient_by: kernel is not normal in the source");
    Integer index = source_.order() / kernel_.order();
    if (index > caps::quotient_index_cap)
      throw CapExceeded("quotient_by: index " + index.str() + " exceeds the cap");

    // BFS over cosets; representative order is generator-driven and fixed.
    reps_.push_back(canon_.canonical(source_.identity()));
    index_of_.emplace(reps_[0].images(), 0);
    for (std::size_t i = 0; i < reps_.size(); ++i)
      for (const auto& g : source_.generators()) {
        Permutation next = canon_.canonical(reps_[i] * g);
        if (index_of_.emplace(next.images(), reps_.size()).second)
          reps_.push_back(std::move(next));
    }
    if (Integer(reps_.size()) != index)
      throw std::logic_error("quotient_by: coset count mismatch");

    std::vector<Permutation> image_gens;
    image_gens.reserve(source_.generators().size());
    for (const auto& g : source_.generators()) image_gens.push_back(project_raw(g));
    image_ = std::make_unique<Group>(Group::generated_by(std::move(image_gens)));
    if (image_->order() != index)
      throw std::logic_error("quotient_by: image order differs from the index");
  }

  QuotientMap(QuotientMap&&) = default;

  const Group& source() const { return source_; }
  const Group& kernel() const { return kernel_; }
  const Group& image() const { return *image_; }

  /// Image of an arbitrary source element under the coset action.
  Permutation project(const Permutation& x) const {
    if (!source_.contains(x))
      throw std::invalid_argument("QuotientMap: element outside the source group");
    return project_raw(x);
  }

  /// Any source element mapping onto the given coset point's class:
  /// the stored canonical representative of coset i.
  const Permutation& coset_representative(std::size_t i) const { return reps_[i]; }
  std::size_t coset_count() const { return reps_.size(); }

 private:
  Permutation project_raw(const Permutation& x) const {
    std::vector<unsigned> images(reps_.size());
    for (std::size_t i = 0; i < reps_.size(); ++i) {
      auto it = index_of_.find(canon_.canonical(reps_[i] * x).images());
      if (it == index_of_.end()) throw std::logic_error("QuotientMap: coset table incomplete");
      images[i] = static_cast<unsigned>(it->second);
    }
    return Permutation(std::move(images));
  }

  Group source_;
  Group kernel_;
  CosetCanonicalizer canon_;
  std::vector<Permutation> reps_;
  std::unordered_map<std::vector<unsigned>, std::size_t, detail::ImageVectorHash> index_of_;
  std::unique_ptr<Group> image_;
};

inline QuotientMap quotient_by(const Group& G, const Group& N) { return QuotientMap(G, N); }

/// One representative per conjugacy class, in enumeration order.
inline std::vector<Permutation> conjugacy_class_representatives(
    const Group& G, std::uint64_t cap = 1000000) {
  if (G.order() > cap)
    throw CapExceeded("conjugacy classes: |G| = " + G.order().str() + " above cap");
  std::vector<Permutation> elements = G.elements(cap);
  std::unordered_map<std::vector<unsigned>, std::size_t, detail::ImageVectorHash> index_of;
  index_of.reserve(elements.size() * 2);
  for (std::size_t i = 0; i < elements.size(); ++i) index_of.emplace(elements[i].images(), i);

  std::vector<bool> seen(elements.size(), false);
  std::vector<Permutation> reps;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (seen[i]) continue;
    reps.push_back(elements[i]);
    std::vector<std::size_t> queue{i};
    seen[i] = true;
    while (!queue.empty()) {
      std::size_t cur = queue.back();
      queue.pop_back();
      for (const auto& g : G.generators()) {
        auto it = index_of.find(elements[cur].conjugated_by(g).images());
        if (it == index_of.end()) throw std::logic_error("conjugacy BFS left the group");
        if (!seen[it->second]) {
          seen[it->second] = true;
          queue.push_back(it->second);
        }
      }
    }
  }
  return reps;
}

struct ChiefSeriesStep {
  Group lower;
  Group upper;
  Integer factor_order;
  bool is_abelian;

  bool is_p_coprime(std::uint64_t p) const { return factor_order % p != 0; }
};

/// Chief series from 1 up to G. Each term is produced as the normal closure
/// of the previous term plus one conjugacy class representative, taking the
/// closure of least order; minimality over class representatives certifies
/// that no normal subgroup of G sits strictly between consecutive terms.
inline std::vector<ChiefSeriesStep> chief_series(const Group& G, std::uint64_t cap = 1000000) {
  std::vector<Permutation> reps = conjugacy_class_representatives(G, cap);
  std::vector<ChiefSeriesStep> steps;
  Group lower = Group::trivial(G.degree());
  while (lower.order() < G.order()) {
    bool have_best = false;
    Group best = lower;
    for (const auto& x : reps) {
      if (lower.contains(x)) continue;
      std::vector<Permutation> seeds = lower.generators();
      seeds.push_back(x);
      Group K = normal_closure(G, seeds);
      if (!have_best || K.order() < best.order()) {
        best = std::move(K);
        have_best = true;
      }
    }
    if (!have_best) throw std::logic_error("chief_series: no extension found");

    bool abelian = true;
    const auto& ugens = best.generators();
    for (std::size_t i = 0; i < ugens.size() && abelian; ++i)
      for (std::size_t j = i + 1; j < ugens.size(); ++j)
        if (!lower.contains(commutator(ugens[i], ugens[j]))) {
          abelian = false;
          break;
        }
    steps.push_back(ChiefSeriesStep{lower, best, best.order() / lower.order(), abelian});
    lower = std::move(best);
  }
  return steps;
}

inline std::size_t non_abelian_chief_factor_count(const std::vector<ChiefSeriesStep>& series) {
  std::size_t n = 0;
  for (const auto& s : series)
    if (!s.is_abelian) ++n;
  return n;
}

/// O_p(G): the intersection of all conjugates of one Sylow p-subgroup,
/// certified to be a normal p-subgroup.
inline Group o_p(const Group& G, std::uint64_t p) {
  if (!is_prime_u64(p)) throw std::invalid_argument("o_p: p must be prime");
  if (G.order() % p != 0) return Group::trivial(G.degree());
  Group P = sylow(G, p);

  auto sorted_elements = [](const Group& H) {
    std::vector<Permutation> elems = H.elements();
    std::sort(elems.begin(), elems.end());
    return elems;
  };

  std::vector<Permutation> intersection = sorted_elements(P);
  std::vector<std::vector<Permutation>> queue{intersection};
  std::unordered_map<std::vector<unsigned>, bool, detail::ImageVectorHash> seen;
  auto key_of = [](const std::vector<Permutation>& elems) {
    std::vector<unsigned> key;
    key.reserve(elems.size() * elems.front().degree());
    for (const auto& e : elems)
      for (unsigned i = 0; i < e.degree(); ++i) key.push_back(e(i));
    return key;
  };
  seen.emplace(key_of(intersection), true);

  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    if (intersection.size() == 1) break;  // cannot shrink below the identity
    std::vector<Permutation> current = queue[qi];
    for (const auto& g : G.generators()) {
      std::vector<Permutation> conj;
      conj.reserve(current.size());
      for (const auto& x : current) conj.push_back(x.conjugated_by(g));
      std::sort(conj.begin(), conj.end());
      if (seen.emplace(key_of(conj), true).second) {
        std::vector<Permutation> meet;
        std::set_intersection(intersection.begin(), intersection.end(), conj.begin(),
                              conj.end(), std::back_inserter(meet));
        intersection = std::move(meet);
        queue.push_back(std::move(conj));
        if (seen.size() > 100000) throw CapExceeded("o_p: conjugate orbit above cap");
      }
    }
  }

  Group core = intersection.size() == 1 ? Group::trivial(G.degree())
                                        : Group::generated_by(intersection);
  if (!is_power_of(core.order(), p)) throw std::logic_error("o_p: core is not a p-group");
  if (!core.is_normal_in(G)) throw std::logic_error("o_p: core is not normal");
  return core;
}

}  // namespace pel
