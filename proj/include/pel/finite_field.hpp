#pragma once

#include <cstdint>
#include <memory>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "pel/numeric.hpp"

namespace pel {

/// GF(r^k) with elements encoded as integers in [0, r^k): the element with
/// index sum c_j r^j is the polynomial residue sum c_j x^j. Index 0 is zero
/// and index 1 is the multiplicative identity. The modulus is the monic
/// irreducible polynomial of degree k whose non-leading coefficient word
/// has the smallest integer encoding, so every run picks the same field.
class FieldSpec {
 public:
  static constexpr std::uint64_t kSizeCap = 1ULL << 20;

  FieldSpec(std::uint64_t characteristic, unsigned degree)
      : r_(characteristic), k_(degree) {
    if (!is_prime_u64(r_))
      throw std::invalid_argument("FieldSpec: characteristic " + std::to_string(r_) +
                                  " is not prime");
    if (k_ == 0) throw std::invalid_argument("FieldSpec: degree must be positive");
    std::uint64_t q = 1;
    for (unsigned i = 0; i < k_; ++i) {
      q *= r_;
      if (q > kSizeCap) throw std::invalid_argument("FieldSpec: field size cap exceeded");
    }
    q_ = q;
    modulus_ = smallest_irreducible();
    generator_ = find_generator();
  }

  std::uint64_t characteristic() const { return r_; }
  unsigned degree() const { return k_; }
  std::uint64_t size() const { return q_; }

  /// Coefficients c_0..c_k of the modulus, constant term first (c_k = 1).
  const std::vector<unsigned>& modulus() const { return modulus_; }

  /// A fixed generator of the (cyclic) multiplicative group.
  std::uint64_t generator() const { return generator_; }

  std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
    std::uint64_t result = 0, place = 1;
    for (unsigned i = 0; i < k_; ++i) {
      result += ((a % r_ + b % r_) % r_) * place;
      a /= r_;
      b /= r_;
      place *= r_;
    }
    return result;
  }

  std::uint64_t neg(std::uint64_t a) const {
    std::uint64_t result = 0, place = 1;
    for (unsigned i = 0; i < k_; ++i) {
      result += ((r_ - a % r_) % r_) * place;
      a /= r_;
      place *= r_;
    }
    return result;
  }

  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return add(a, neg(b)); }

  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
    std::vector<unsigned> pa = decode(a), pb = decode(b);
    std::vector<unsigned> prod(2 * k_ - 1, 0);
    for (unsigned i = 0; i < k_; ++i)
      for (unsigned j = 0; j < k_; ++j)
        prod[i + j] = static_cast<unsigned>((prod[i + j] + std::uint64_t(pa[i]) * pb[j]) % r_);
    reduce(prod);
    return encode(prod);
  }

  std::uint64_t pow(std::uint64_t a, std::uint64_t e) const {
    std::uint64_t acc = 1;
    while (e > 0) {
      if (e & 1) acc = mul(acc, a);
      a = mul(a, a);
      e >>= 1;
    }
    return acc;
  }

  std::uint64_t inv(std::uint64_t a) const {
    if (a == 0) throw std::domain_error("FieldSpec: inverse of zero");
    return pow(a, q_ - 2);
  }

  /// x -> x^r, the Frobenius field automorphism.
  std::uint64_t frobenius(std::uint64_t a) const { return pow(a, r_); }

  /// Multiplicative order of a nonzero element, by exact divisor descent.
  std::uint64_t element_order(std::uint64_t a) const {
    if (a == 0) throw std::domain_error("FieldSpec: order of zero");
    std::uint64_t n = q_ - 1;
    std::uint64_t m = q_ - 1;
    for (std::uint64_t p = 2; p * p <= m; ++p) {
      if (m % p != 0) continue;
      while (m % p == 0) m /= p;
      while (n % p == 0 && pow(a, n / p) == 1) n /= p;
    }
    if (m > 1)
      while (n % m == 0 && pow(a, n / m) == 1) n /= m;
    return n;
  }

 private:
  std::vector<unsigned> decode(std::uint64_t a) const {
    std::vector<unsigned> c(k_, 0);
    for (unsigned i = 0; i < k_; ++i) {
      c[i] = static_cast<unsigned>(a % r_);
      a /= r_;
    }
    return c;
  }

  std::uint64_t encode(const std::vector<unsigned>& c) const {
    std::uint64_t a = 0, place = 1;
    for (unsigned i = 0; i < k_; ++i) {
      a += c[i] * place;
      place *= r_;
    }
    return a;
  }

  // Reduces a coefficient vector of degree < 2k-1 by the monic modulus.
  void reduce(std::vector<unsigned>& c) const {
    for (std::size_t d = c.size(); d-- > k_;) {
      unsigned lead = c[d];
      if (lead == 0) continue;
      c[d] = 0;
      for (unsigned j = 0; j < k_; ++j) {
        std::uint64_t sub_term = std::uint64_t(lead) * modulus_[j] % r_;
        c[d - k_ + j] = static_cast<unsigned>((c[d - k_ + j] + r_ - sub_term) % r_);
      }
    }
    c.resize(k_);
  }

  // --- modulus search (plain polynomial arithmetic over GF(r), no field ops) ---

  using Poly = std::vector<unsigned>;  // dense, constant term first

  static Poly poly_trim(Poly p) {
    while (p.size() > 1 && p.back() == 0) p.pop_back();
    return p;
  }

  Poly poly_mul_mod(const Poly& a, const Poly& b, const Poly& mod) const {
    Poly prod(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < b.size(); ++j)
        prod[i + j] = static_cast<unsigned>((prod[i + j] + std::uint64_t(a[i]) * b[j]) % r_);
    // mod is monic of degree k
    for (std::size_t d = prod.size(); d-- > mod.size() - 1;) {
      unsigned lead = prod[d];
      if (lead == 0) continue;
      prod[d] = 0;
      for (std::size_t j = 0; j + 1 < mod.size(); ++j) {
        std::uint64_t t = std::uint64_t(lead) * mod[j] % r_;
        prod[d - (mod.size() - 1) + j] =
            static_cast<unsigned>((prod[d - (mod.size() - 1) + j] + r_ - t) % r_);
      }
    }
    prod.resize(mod.size() - 1);
    return prod;
  }

  Poly poly_xpow_mod(Integer e, const Poly& mod) const {
    Poly acc{1};
    acc.resize(mod.size() - 1, 0);
    Poly base{0, 1};
    base.resize(mod.size() - 1 > 1 ? mod.size() - 1 : 2, 0);
    while (e > 0) {
      if ((e & 1) != 0) acc = poly_mul_mod(acc, base, mod);
      base = poly_mul_mod(base, base, mod);
      e >>= 1;
    }
    return acc;
  }

  Poly poly_gcd(Poly a, Poly b) const {
    a = poly_trim(std::move(a));
    b = poly_trim(std::move(b));
    auto is_zero = [](const Poly& p) { return p.size() == 1 && p[0] == 0; };
    while (!is_zero(b)) {
      // a mod b with b made monic on the fly
      unsigned lead_inv = 1;
      {  // inverse of b's leading coefficient mod r
        unsigned lead = b.back();
        for (unsigned t = 1; t < r_; ++t)
          if (std::uint64_t(lead) * t % r_ == 1) {
            lead_inv = t;
            break;
          }
      }
      while (a.size() >= b.size() && !is_zero(a)) {
        unsigned factor = static_cast<unsigned>(std::uint64_t(a.back()) * lead_inv % r_);
        std::size_t shift = a.size() - b.size();
        for (std::size_t j = 0; j < b.size(); ++j) {
          std::uint64_t t = std::uint64_t(factor) * b[j] % r_;
          a[shift + j] = static_cast<unsigned>((a[shift + j] + r_ - t) % r_);
        }
        a = poly_trim(std::move(a));
        if (a.size() == 1 && a[0] == 0) break;
      }
      std::swap(a, b);
    }
    return poly_trim(std::move(a));
  }

  bool is_irreducible(const Poly& f) const {
    unsigned k = static_cast<unsigned>(f.size()) - 1;
    if (k == 1) return true;
    // x^(r^k) == x mod f
    Poly xq = poly_xpow_mod(ipow(Integer(r_), k), f);
    Poly x{0, 1};
    x.resize(k > 1 ? k : 2, 0);
    x.resize(xq.size(), 0);
    if (poly_trim(xq) != poly_trim(x)) return false;
    // gcd(x^(r^(k/t)) - x, f) == 1 for every prime t | k
    for (unsigned t = 2; t <= k; ++t) {
      if (k % t != 0 || !is_prime_u64(t)) continue;
      Poly xe = poly_xpow_mod(ipow(Integer(r_), k / t), f);
      xe.resize(std::max<std::size_t>(xe.size(), 2), 0);
      xe[1] = static_cast<unsigned>((xe[1] + r_ - 1) % r_);
      Poly g = poly_gcd(xe, f);
      if (!(g.size() == 1 && g[0] != 0)) return false;
    }
    return true;
  }

  std::vector<unsigned> smallest_irreducible() const {
    for (std::uint64_t word = 0; word < q_; ++word) {
      Poly f(k_ + 1, 0);
      std::uint64_t w = word;
      for (unsigned i = 0; i < k_; ++i) {
        f[i] = static_cast<unsigned>(w % r_);
        w /= r_;
      }
      f[k_] = 1;
      if (is_irreducible(f)) return f;
    }
    throw std::logic_error("no irreducible polynomial found");  // unreachable
  }

  std::uint64_t find_generator() const {
    for (std::uint64_t a = 1; a < q_; ++a)
      if (element_order(a) == q_ - 1) return a;
    throw std::logic_error("no multiplicative generator found");  // unreachable
  }

  std::uint64_t r_;
  unsigned k_;
  std::uint64_t q_ = 0;
  std::vector<unsigned> modulus_;
  std::uint64_t generator_ = 0;
};

/// Element view tying an index to its field, for readable test code.
struct FieldElement {
  const FieldSpec* field = nullptr;
  std::uint64_t idx = 0;

  friend FieldElement operator+(FieldElement a, FieldElement b) {
    return {a.field, a.field->add(a.idx, b.idx)};
  }
  friend FieldElement operator-(FieldElement a, FieldElement b) {
    return {a.field, a.field->sub(a.idx, b.idx)};
  }
  friend FieldElement operator*(FieldElement a, FieldElement b) {
    return {a.field, a.field->mul(a.idx, b.idx)};
  }
  friend bool operator==(FieldElement a, FieldElement b) { return a.idx == b.idx; }
};

inline FieldSpec field_make(std::uint64_t r, unsigned k) { return FieldSpec(r, k); }

}  // namespace pel
