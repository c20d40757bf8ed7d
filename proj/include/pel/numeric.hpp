#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace pel {

// All orders, counts and probabilities are exact. cpp_rational keeps
// values in lowest terms, so fraction strings are canonical.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer ipow(Integer base, std::uint64_t exp) {
  Integer result = 1;
  while (exp > 0) {
    if (exp & 1) result *= base;
    base *= base;
    exp >>= 1;
  }
  return result;
}

inline bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

/// True iff n == p^k for some k >= 0 (so 1 always qualifies).
inline bool is_power_of(const Integer& n, std::uint64_t p) {
  if (n <= 0) return false;
  Integer m = n;
  while (m % p == 0) m /= p;
  return m == 1;
}

/// Largest power of p dividing n.
inline Integer p_part(Integer n, std::uint64_t p) {
  if (n == 0) throw std::invalid_argument("p_part: n must be nonzero");
  Integer part = 1;
  while (n % p == 0) {
    n /= p;
    part *= p;
  }
  return part;
}

/// Canonical "num/den" rendering, always with an explicit denominator.
inline std::string fraction_string(const Rational& r) {
  return boost::multiprecision::numerator(r).str() + "/" +
         boost::multiprecision::denominator(r).str();
}

/// splitmix64 step; used to derive independent per-run seeds from a root seed.
inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace pel
