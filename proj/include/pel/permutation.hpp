#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "pel/numeric.hpp"

namespace pel {

/// A bijection on {0, ..., degree-1}. Products compose left to right:
/// (p * q)(x) = q(p(x)), the usual right-action convention.
class Permutation {
 public:
  Permutation() = default;

  explicit Permutation(unsigned degree) : images_(degree) {
    std::iota(images_.begin(), images_.end(), 0u);
  }

  explicit Permutation(std::vector<unsigned> images) : images_(std::move(images)) {
    validate();
  }

  /// Builds the permutation from disjoint cycles, e.g. {{0,1,2},{3,4}}.
  static Permutation from_cycles(unsigned degree,
                                 const std::vector<std::vector<unsigned>>& cycles) {
    Permutation p(degree);
    for (const auto& cyc : cycles) {
      for (std::size_t i = 0; i < cyc.size(); ++i) {
        unsigned from = cyc[i];
        unsigned to = cyc[(i + 1) % cyc.size()];
        if (from >= degree || to >= degree)
          throw std::invalid_argument("from_cycles: point out of range");
        p.images_[from] = to;
      }
    }
    p.validate();
    return p;
  }

  unsigned degree() const { return static_cast<unsigned>(images_.size()); }

  unsigned operator()(unsigned point) const { return images_[point]; }

  const std::vector<unsigned>& images() const { return images_; }

  bool is_identity() const {
    for (unsigned i = 0; i < degree(); ++i)
      if (images_[i] != i) return false;
    return true;
  }

  friend Permutation operator*(const Permutation& p, const Permutation& q) {
    if (p.degree() != q.degree())
      throw std::invalid_argument("permutation product: degree mismatch");
    Permutation r;
    r.images_.resize(p.degree());
    for (unsigned i = 0; i < p.degree(); ++i) r.images_[i] = q.images_[p.images_[i]];
    return r;
  }

  Permutation inverse() const {
    Permutation r;
    r.images_.resize(degree());
    for (unsigned i = 0; i < degree(); ++i) r.images_[images_[i]] = i;
    return r;
  }

  Permutation power(long long e) const {
    Permutation base = e < 0 ? inverse() : *this;
    unsigned long long n = e < 0 ? static_cast<unsigned long long>(-e)
                                 : static_cast<unsigned long long>(e);
    Permutation acc(degree());
    while (n > 0) {
      if (n & 1) acc = acc * base;
      base = base * base;
      n >>= 1;
    }
    return acc;
  }

  /// q^{-1} * p * q, i.e. p conjugated by q.
  Permutation conjugated_by(const Permutation& q) const {
    if (degree() != q.degree())
      throw std::invalid_argument("conjugation: degree mismatch");
    Permutation r;
    r.images_.resize(degree());
    for (unsigned i = 0; i < degree(); ++i) r.images_[q.images_[i]] = q.images_[images_[i]];
    return r;
  }

  std::vector<unsigned> cycle_lengths() const {
    std::vector<unsigned> lengths;
    std::vector<bool> seen(degree(), false);
    for (unsigned start = 0; start < degree(); ++start) {
      if (seen[start]) continue;
      unsigned len = 0, x = start;
      do {
        seen[x] = true;
        x = images_[x];
        ++len;
      } while (x != start);
      lengths.push_back(len);
    }
    return lengths;
  }

  bool is_even() const {
    unsigned transpositions = 0;
    for (unsigned len : cycle_lengths()) transpositions += len - 1;
    return transpositions % 2 == 0;
  }

  friend bool operator==(const Permutation& a, const Permutation& b) {
    return a.images_ == b.images_;
  }
  friend bool operator!=(const Permutation& a, const Permutation& b) {
    return !(a == b);
  }
  friend bool operator<(const Permutation& a, const Permutation& b) {
    return a.images_ < b.images_;
  }

  /// Cycle notation on the moved points, "()" for the identity.
  std::string to_string() const {
    std::ostringstream out;
    std::vector<bool> seen(degree(), false);
    bool any = false;
    for (unsigned start = 0; start < degree(); ++start) {
      if (seen[start] || images_[start] == start) continue;
      any = true;
      out << '(';
      unsigned x = start;
      bool first = true;
      do {
        if (!first) out << ' ';
        out << x;
        seen[x] = true;
        x = images_[x];
        first = false;
      } while (x != start);
      out << ')';
    }
    return any ? out.str() : "()";
  }

 private:
  void validate() const {
    std::vector<bool> hit(images_.size(), false);
    for (unsigned img : images_) {
      if (img >= images_.size() || hit[img])
        throw std::invalid_argument("permutation images are not a bijection");
      hit[img] = true;
    }
  }

  std::vector<unsigned> images_;
};

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const {
    std::size_t h = 1469598103934665603ULL;
    for (unsigned img : p.images()) {
      h ^= img;
      h *= 1099511628211ULL;
    }
    return h;
  }
};

/// Least m >= 1 with p^m = identity: the lcm of the cycle lengths.
inline Integer order_of(const Permutation& p) {
  Integer order = 1;
  for (unsigned len : p.cycle_lengths()) order = boost::multiprecision::lcm(order, Integer(len));
  return order;
}

/// True iff every cycle length is a power of `prime` (order is then p^k, k >= 0).
inline bool is_p_element(const Permutation& p, std::uint64_t prime) {
  if (!is_prime_u64(prime))
    throw std::invalid_argument("is_p_element: " + std::to_string(prime) + " is not prime");
  for (unsigned len : p.cycle_lengths()) {
    unsigned m = len;
    while (m % prime == 0) m /= static_cast<unsigned>(prime);
    if (m != 1) return false;
  }
  return true;
}

}  // namespace pel
