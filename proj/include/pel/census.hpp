#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <random>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "pel/classical.hpp"
#include "pel/numeric.hpp"
#include "pel/outcome.hpp"
#include "pel/permutation.hpp"
#include "pel/quotients.hpp"
#include "pel/stabilizer_chain.hpp"
#include "pel/sylow.hpp"

namespace pel {

/// Exact count of p-elements of a group (or of a labeled coset), with the
/// probability count/order as an exact rational.
struct CensusReport {
  std::string group;
  std::uint64_t prime = 0;
  Integer order;
  Integer count;
  Rational probability;
  std::vector<std::pair<std::string, Rational>> per_coset;
};

/// Exact pair statistics: |Omega_p(g,G)| for a fixed g, or the two-variable
/// count behind P_p(G,G).
struct PairReport {
  std::string group;
  std::uint64_t prime = 0;
  std::string element;
  Integer count;
  Rational probability;
};

/// Monte Carlo point estimate with a fixed 95% Wilson interval.
struct EstimateReport {
  std::string group;
  std::uint64_t prime = 0;
  double estimate = 0.0;
  double wilson_low = 0.0;
  double wilson_high = 1.0;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  std::uint64_t hits = 0;
};

/// Exact p-element count by plain enumeration, optionally split over the
/// first-level transversal cosets (the counts merge by exact addition, so
/// the result is independent of the split).
inline Integer p_element_count_by_enumeration(const Group& G, std::uint64_t p,
                                              unsigned jobs = 1,
                                              std::uint64_t cap = caps::enumeration_cap) {
  if (G.order() > cap)
    throw CapExceeded("census: |G| = " + G.order().str() + " above the enumeration cap");
  if (!is_prime_u64(p)) throw std::invalid_argument("census: p must be prime");

  std::vector<Permutation> transversal = G.first_level_transversal();
  if (jobs <= 1 || transversal.size() <= 1) {
    std::uint64_t count = 0;
    G.for_each_element([&](const Permutation& x) { count += is_p_element(x, p); }, cap);
    return count;
  }

  unsigned workers = std::min<unsigned>(jobs, static_cast<unsigned>(transversal.size()));
  std::vector<std::uint64_t> counts(workers, 0);
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w)
    pool.emplace_back([&, w]() {
      std::uint64_t local = 0;
      for (std::size_t i = w; i < transversal.size(); i += workers)
        G.for_each_element_with_suffix(
            transversal[i], [&](const Permutation& x) { local += is_p_element(x, p); });
      counts[w] = local;
    });
  for (auto& t : pool) t.join();
  Integer total = 0;
  for (std::uint64_t c : counts) total += c;
  return total;
}

inline CensusReport coset_p_census(const LabeledCoset& coset, std::uint64_t p,
                                   std::string id = "");

/// p-element census. Handles tagged as direct or subdirect powers are
/// counted componentwise (a tuple is a p-element iff every component is);
/// everything else is enumerated under the cap.
inline CensusReport p_census(const Group& G, std::uint64_t p, std::string id = "",
                             unsigned jobs = 1) {
  if (!is_prime_u64(p)) throw std::invalid_argument("census: p must be prime");
  CensusReport r;
  r.group = std::move(id);
  r.prime = p;
  r.order = G.order();

  if (const auto& st = G.structure()) {
    switch (st->kind) {
      case PowerStructure::Kind::direct_power: {
        CensusReport base = p_census(*st->base, p);
        r.count = ipow(base.count, st->copies);
        r.probability = Rational(r.count, r.order);
        return r;
      }
      case PowerStructure::Kind::subdirect_power: {
        CensusReport socle = p_census(*st->socle, p);
        LabeledCoset outer(*st->top, *st->socle, st->outer_rep);
        CensusReport coset = coset_p_census(outer, p);
        r.count = ipow(socle.count, st->copies) + ipow(coset.count, st->copies);
        r.probability = Rational(r.count, r.order);
        r.per_coset.emplace_back("socle^t", Rational(ipow(socle.count, st->copies),
                                                     ipow(socle.order, st->copies)));
        r.per_coset.emplace_back("outer^t", Rational(ipow(coset.count, st->copies),
                                                     ipow(socle.order, st->copies)));
        return r;
      }
    }
  }

  r.count = p_element_count_by_enumeration(G, p, jobs);
  r.probability = Rational(r.count, r.order);
  return r;
}

/// Exact count of p-elements in rep * socle.
inline CensusReport coset_p_census(const LabeledCoset& coset, std::uint64_t p,
                                   std::string id) {
  if (!is_prime_u64(p)) throw std::invalid_argument("census: p must be prime");
  CensusReport r;
  r.group = std::move(id);
  r.prime = p;
  r.order = coset.socle.order();
  std::uint64_t count = 0;
  coset.socle.for_each_element(
      [&](const Permutation& s) { count += is_p_element(coset.rep * s, p); });
  r.count = count;
  r.probability = Rational(r.count, r.order);
  return r;
}

/// Eq-style Sylow bound: P_p(G) <= |P| / |N_G(P)| as exact rationals.
inline VerificationOutcome sylow_bound_check(const Group& G, std::uint64_t p,
                                             std::string id = "") {
  OutcomeTimer timer;
  Group P = sylow(G, p);
  Group N = normalizer(G, P);
  CensusReport census = p_census(G, p, id);
  Rational bound(P.order(), N.order());

  VerificationOutcome out;
  out.claim = "sylow-bound";
  out.add_param("group", id.empty() ? "order:" + G.order().str() : id);
  out.add_param("p", std::to_string(p));
  out.add_computed("P_p(G)", fraction_string(census.probability));
  out.add_computed("|P|/|N_G(P)|", fraction_string(bound));
  out.relation = "P_p(G) <= |P|/|N_G(P)|";
  out.pass = census.probability <= bound;
  out.ms = timer.elapsed_ms();
  return out;
}

/// Omega_p(g,G) = {y : <g,y> is a p-group}. Nonmembers of Omega_p(G) are
/// never partners, so only p-elements are scanned.
inline PairReport omega_pair_set(const Group& G, const Permutation& g, std::uint64_t p,
                                 std::string id = "") {
  if (!is_prime_u64(p)) throw std::invalid_argument("pair set: p must be prime");
  if (!G.contains(g)) throw std::invalid_argument("pair set: g outside the group");
  if (G.order() > caps::pair_cap)
    throw CapExceeded("pair set: |G| = " + G.order().str() + " above the pair cap");

  PairReport r;
  r.group = std::move(id);
  r.prime = p;
  r.element = g.to_string();
  if (!is_p_element(g, p)) {  // <g,y> contains the non-p-element g
    r.count = 0;
    r.probability = 0;
    return r;
  }
  std::uint64_t count = 0;
  G.for_each_element([&](const Permutation& y) {
    if (!is_p_element(y, p)) return;
    count += is_power_of(generated_pair(g, y).order(), p);
  });
  r.count = count;
  r.probability = Rational(r.count, G.order());
  return r;
}

/// P_p(G,G): pairs are scanned over Omega_p x Omega_p with <x,y> = <y,x>
/// computed once per unordered pair.
inline PairReport pair_probability(const Group& G, std::uint64_t p, std::string id = "") {
  if (!is_prime_u64(p)) throw std::invalid_argument("pair probability: p must be prime");
  if (G.order() > caps::pair_cap)
    throw CapExceeded("pair probability: |G| = " + G.order().str() + " above the pair cap");

  std::vector<Permutation> omega;
  G.for_each_element([&](const Permutation& x) {
    if (is_p_element(x, p)) omega.push_back(x);
  });
  Integer pairs = 0;
  for (std::size_t i = 0; i < omega.size(); ++i) {
    pairs += 1;  // (i, i): <x,x> is cyclic of p-power order
    for (std::size_t j = i + 1; j < omega.size(); ++j)
      if (is_power_of(generated_pair(omega[i], omega[j]).order(), p)) pairs += 2;
  }
  PairReport r;
  r.group = std::move(id);
  r.prime = p;
  r.count = pairs;
  r.probability = Rational(pairs, G.order() * G.order());
  return r;
}

/// omega_p(g,G): abelian chief factors of order coprime to p that g fails
/// to centralize, counted along one chief series.
inline unsigned omega_weight(const Group& G, const Permutation& g, std::uint64_t p,
                             const std::vector<ChiefSeriesStep>* series = nullptr) {
  if (!is_p_element(g, p)) throw std::invalid_argument("omega_weight: g is not a p-element");
  std::vector<ChiefSeriesStep> own;
  if (series == nullptr) {
    own = chief_series(G);
    series = &own;
  }
  unsigned weight = 0;
  for (const auto& step : *series) {
    if (!step.is_abelian || !step.is_p_coprime(p)) continue;
    for (const auto& x : step.upper.generators())
      if (!step.lower.contains(commutator(g, x))) {
        ++weight;
        break;
      }
  }
  return weight;
}

/// The Baer intersection: computes cap_{g in Omega_p(G)} Omega_p(g,G)
/// elementwise and certifies that it equals O_p(G). Returns the subgroup
/// and its measure |O_p(G)| / |G| = |G : O_p(G)|^{-1}.
inline std::pair<Group, Rational> baer_intersection(const Group& G, std::uint64_t p) {
  if (G.order() > caps::pair_cap)
    throw CapExceeded("baer: |G| = " + G.order().str() + " above the pair cap");

  std::vector<Permutation> omega;
  G.for_each_element([&](const Permutation& x) {
    if (is_p_element(x, p) && !x.is_identity()) omega.push_back(x);
  });

  std::vector<Permutation> survivors;
  auto survives = [&](const Permutation& y) {
    for (const auto& g : omega)
      if (!is_power_of(generated_pair(g, y).order(), p)) return false;
    return true;
  };
  survivors.push_back(G.identity());  // <g,1> = <g> is always a p-group
  for (const auto& y : omega)
    if (survives(y)) survivors.push_back(y);

  Group B = survivors.size() == 1 ? Group::trivial(G.degree())
                                  : Group::generated_by(survivors);
  if (B.order() != Integer(survivors.size()))
    throw std::logic_error("baer: intersection is not closed");
  Group core = o_p(G, p);
  if (!B.same_group_as(core))
    throw std::logic_error("baer: intersection differs from O_p(G)");
  return {std::move(B), Rational(B.order(), G.order())};
}

/// Per-coset 2-element ratios of a simple socle inside an overgroup:
/// the maximum over the nontrivial cosets plus the socle's own ratio.
struct GammaReport {
  Rational outer_max;
  Rational identity_ratio;
  std::vector<std::pair<std::string, Rational>> per_coset;
};

inline GammaReport gamma_simple(const Group& S, const Group& overgroup) {
  if (!S.is_normal_in(overgroup))
    throw std::invalid_argument("gamma_simple: socle is not normal in the overgroup");
  Integer index = overgroup.order() / S.order();
  if (index > caps::quotient_index_cap) throw CapExceeded("gamma_simple: index above cap");

  QuotientMap q(overgroup, S);
  GammaReport report;
  report.identity_ratio = 0;
  report.outer_max = 0;
  for (std::size_t i = 0; i < q.coset_count(); ++i) {
    const Permutation& rep = q.coset_representative(i);
    std::uint64_t count = 0;
    S.for_each_element([&](const Permutation& s) { count += is_p_element(rep * s, 2); });
    Rational ratio(Integer(count), S.order());
    bool trivial_coset = S.contains(rep);
    report.per_coset.emplace_back(trivial_coset ? "S" : "coset" + std::to_string(i), ratio);
    if (trivial_coset)
      report.identity_ratio = ratio;
    else
      report.outer_max = std::max(report.outer_max, ratio);
  }
  return report;
}

/// Proportions of permutations all of whose cycle lengths are 2-powers, for
/// S_n, A_n and the odd coset, from the cycle-type counting formula
/// n! / prod_j (j^{c_j} c_j!) summed over partitions of n into 2-power
/// parts. No group is enumerated.
struct SnProportions {
  Rational symmetric;
  Rational alternating;
  Rational odd_coset;
  Integer even_count;
  Integer odd_count;
};

inline SnProportions sn_two_proportion(unsigned n) {
  if (n == 0 || n > 60) throw std::invalid_argument("sn_two_proportion: need 1 <= n <= 60");
  Integer factorial = 1;
  for (unsigned i = 2; i <= n; ++i) factorial *= i;

  std::vector<unsigned> parts;
  for (unsigned p = 1; p <= n; p *= 2) parts.push_back(p);

  Integer even_total = 0, odd_total = 0;
  // mult[i] = multiplicity of part parts[i]; recurse over part sizes.
  std::vector<unsigned> mult(parts.size(), 0);
  std::function<void(std::size_t, unsigned)> rec = [&](std::size_t pi, unsigned left) {
    if (left == 0) {
      Integer ways = factorial;
      unsigned transpositions = 0;
      for (std::size_t i = 0; i < parts.size(); ++i) {
        for (unsigned c = 0; c < mult[i]; ++c) ways /= parts[i];
        Integer fact_c = 1;
        for (unsigned c = 2; c <= mult[i]; ++c) fact_c *= c;
        ways /= fact_c;
        transpositions += mult[i] * (parts[i] - 1);
      }
      (transpositions % 2 == 0 ? even_total : odd_total) += ways;
      return;
    }
    if (pi == parts.size()) return;
    for (unsigned c = 0; c * parts[pi] <= left; ++c) {
      mult[pi] = c;
      rec(pi + 1, left - c * parts[pi]);
    }
    mult[pi] = 0;
  };
  rec(0, n);

  SnProportions out;
  out.even_count = even_total;
  out.odd_count = odd_total;
  out.symmetric = Rational(even_total + odd_total, factorial);
  if (n >= 2) {
    Integer half = factorial / 2;
    out.alternating = Rational(even_total, half);
    out.odd_coset = Rational(odd_total, half);
  } else {
    out.alternating = Rational(even_total, factorial);
    out.odd_coset = 0;
  }
  return out;
}

namespace detail {

inline void wilson_interval(std::uint64_t hits, std::uint64_t n, double& low, double& high) {
  // Fixed two-sided 95% level.
  const double z = 1.959963984540054;
  const double nn = static_cast<double>(n);
  const double phat = static_cast<double>(hits) / nn;
  const double z2 = z * z;
  const double denom = 1.0 + z2 / nn;
  const double centre = phat + z2 / (2.0 * nn);
  const double half = z * std::sqrt(phat * (1.0 - phat) / nn + z2 / (4.0 * nn * nn));
  low = std::max(0.0, (centre - half) / denom);
  high = std::min(1.0, (centre + half) / denom);
}

}  // namespace detail

/// Unbiased p-element proportion estimate over a group, reproducible from
/// the seed; one uniform chain sample per draw.
inline EstimateReport mc_estimate(const Group& G, std::uint64_t p, std::uint64_t samples,
                                  std::uint64_t seed, std::string id = "") {
  if (samples == 0) throw std::invalid_argument("mc_estimate: samples must be positive");
  if (!is_prime_u64(p)) throw std::invalid_argument("mc_estimate: p must be prime");
  std::mt19937_64 rng(seed);
  std::uint64_t hits = 0;
  for (std::uint64_t i = 0; i < samples; ++i)
    hits += is_p_element(G.sample(rng), p);

  EstimateReport r;
  r.group = std::move(id);
  r.prime = p;
  r.samples = samples;
  r.seed = seed;
  r.hits = hits;
  r.estimate = static_cast<double>(hits) / static_cast<double>(samples);
  detail::wilson_interval(hits, samples, r.wilson_low, r.wilson_high);
  return r;
}

/// Same estimator over a coset rep * socle (uniform socle sample times rep).
inline EstimateReport mc_estimate(const LabeledCoset& coset, std::uint64_t p,
                                  std::uint64_t samples, std::uint64_t seed,
                                  std::string id = "") {
  if (samples == 0) throw std::invalid_argument("mc_estimate: samples must be positive");
  if (!is_prime_u64(p)) throw std::invalid_argument("mc_estimate: p must be prime");
  std::mt19937_64 rng(seed);
  std::uint64_t hits = 0;
  for (std::uint64_t i = 0; i < samples; ++i)
    hits += is_p_element(coset.rep * coset.socle.sample(rng), p);

  EstimateReport r;
  r.group = std::move(id);
  r.prime = p;
  r.samples = samples;
  r.seed = seed;
  r.hits = hits;
  r.estimate = static_cast<double>(hits) / static_cast<double>(samples);
  detail::wilson_interval(hits, samples, r.wilson_low, r.wilson_high);
  return r;
}

}  // namespace pel
