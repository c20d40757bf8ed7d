#pragma once

#include <cctype>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "pel/classical.hpp"
#include "pel/constructions.hpp"
#include "pel/stabilizer_chain.hpp"

namespace pel {

/// Parse failure with the byte offset of the offending token.
struct SpecParseError : std::runtime_error {
  SpecParseError(const std::string& message, std::size_t offset)
      : std::runtime_error(message + " (at byte " + std::to_string(offset) + ")"),
        offset(offset) {}
  std::size_t offset;
};

/// The group mini-language:
///   sym:n | alt:n | cyc:n | psl2:q | pgl2:q | pgammal2:q | m10
///   xt:t | yt:t | meta:q,m,p,n | dp:(SPEC),t | prod:(SPEC),(SPEC)
/// Specs round-trip through parse -> render.
struct GroupSpec {
  enum class Family { sym, alt, cyc, psl2, pgl2, pgammal2, m10, xt, yt, meta, dp, prod };

  Family family;
  std::vector<std::uint64_t> numbers;
  std::vector<GroupSpec> children;

  std::string render() const {
    switch (family) {
      case Family::sym:
        return "sym:" + std::to_string(numbers[0]);
      case Family::alt:
        return "alt:" + std::to_string(numbers[0]);
      case Family::cyc:
        return "cyc:" + std::to_string(numbers[0]);
      case Family::psl2:
        return "psl2:" + std::to_string(numbers[0]);
      case Family::pgl2:
        return "pgl2:" + std::to_string(numbers[0]);
      case Family::pgammal2:
        return "pgammal2:" + std::to_string(numbers[0]);
      case Family::m10:
        return "m10";
      case Family::xt:
        return "xt:" + std::to_string(numbers[0]);
      case Family::yt:
        return "yt:" + std::to_string(numbers[0]);
      case Family::meta:
        return "meta:" + std::to_string(numbers[0]) + "," + std::to_string(numbers[1]) + "," +
               std::to_string(numbers[2]) + "," + std::to_string(numbers[3]);
      case Family::dp:
        return "dp:(" + children[0].render() + ")," + std::to_string(numbers[0]);
      case Family::prod:
        return "prod:(" + children[0].render() + "),(" + children[1].render() + ")";
    }
    throw std::logic_error("GroupSpec::render: unreachable");
  }
};

namespace detail {

class SpecParser {
 public:
  explicit SpecParser(const std::string& text) : text_(text) {}

  GroupSpec parse_full() {
    GroupSpec spec = parse_spec();
    if (pos_ != text_.size()) fail("trailing characters after group spec");
    return spec;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const {
    throw SpecParseError(message, pos_);
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  std::uint64_t parse_number() {
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a number");
    std::uint64_t value = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      value = value * 10 + static_cast<std::uint64_t>(text_[pos_] - '0');
      if (value > (1ULL << 40)) fail("parameter too large");
      ++pos_;
    }
    return value;
  }

  std::string parse_name() {
    std::size_t start = pos_;
    while (std::isalnum(static_cast<unsigned char>(peek()))) ++pos_;
    if (pos_ == start) fail("expected a family name");
    return text_.substr(start, pos_ - start);
  }

  GroupSpec parse_spec() {
    std::size_t name_at = pos_;
    std::string name = parse_name();
    GroupSpec spec;
    auto one_number = [&](GroupSpec::Family fam, std::uint64_t min_value,
                          const std::string& what) {
      spec.family = fam;
      expect(':');
      std::size_t at = pos_;
      std::uint64_t n = parse_number();
      if (n < min_value)
        throw SpecParseError(what + " must be at least " + std::to_string(min_value), at);
      spec.numbers.push_back(n);
    };

    if (name == "sym") {
      one_number(GroupSpec::Family::sym, 1, "sym degree");
    } else if (name == "alt") {
      one_number(GroupSpec::Family::alt, 1, "alt degree");
    } else if (name == "cyc") {
      one_number(GroupSpec::Family::cyc, 1, "cyc order");
    } else if (name == "psl2" || name == "pgl2" || name == "pgammal2") {
      GroupSpec::Family fam = name == "psl2"    ? GroupSpec::Family::psl2
                              : name == "pgl2" ? GroupSpec::Family::pgl2
                                               : GroupSpec::Family::pgammal2;
      spec.family = fam;
      expect(':');
      std::size_t at = pos_;
      std::uint64_t q = parse_number();
      try {
        auto [r, k] = detail::factor_prime_power(q);
        if (q < 4) throw std::invalid_argument("q < 4");
        if (r == 2 && fam != GroupSpec::Family::psl2)
          throw std::invalid_argument("even q needs psl2");
        (void)k;
      } catch (const std::invalid_argument& e) {
        throw SpecParseError(std::string("invalid q: ") + e.what(), at);
      }
      spec.numbers.push_back(q);
    } else if (name == "m10") {
      spec.family = GroupSpec::Family::m10;
    } else if (name == "xt") {
      one_number(GroupSpec::Family::xt, 1, "tower depth");
    } else if (name == "yt") {
      spec.family = GroupSpec::Family::yt;
      expect(':');
      spec.numbers.push_back(parse_number());
    } else if (name == "meta") {
      spec.family = GroupSpec::Family::meta;
      expect(':');
      std::size_t at = pos_;
      for (int i = 0; i < 4; ++i) {
        if (i > 0) expect(',');
        spec.numbers.push_back(parse_number());
      }
      std::uint64_t q = spec.numbers[0], m = spec.numbers[1], p = spec.numbers[2],
                    n = spec.numbers[3];
      if (!is_prime_u64(q) || !is_prime_u64(p))
        throw SpecParseError("meta: q and p must be prime", at);
      if (m == 0 || n == 0) throw SpecParseError("meta: m and n must be positive", at);
      std::uint64_t pn = 1;
      for (std::uint64_t i = 0; i < n; ++i) {
        pn *= p;
        if (pn > q) break;
      }
      if ((q - 1) % pn != 0)
        throw SpecParseError("meta: " + std::to_string(pn) + " does not divide q-1 = " +
                                 std::to_string(q - 1),
                             at);
    } else if (name == "dp") {
      spec.family = GroupSpec::Family::dp;
      expect(':');
      expect('(');
      spec.children.push_back(parse_spec());
      expect(')');
      expect(',');
      std::size_t at = pos_;
      std::uint64_t t = parse_number();
      if (t == 0) throw SpecParseError("dp: power must be positive", at);
      spec.numbers.push_back(t);
    } else if (name == "prod") {
      spec.family = GroupSpec::Family::prod;
      expect(':');
      expect('(');
      spec.children.push_back(parse_spec());
      expect(')');
      expect(',');
      expect('(');
      spec.children.push_back(parse_spec());
      expect(')');
    } else {
      throw SpecParseError("unknown group family '" + name + "'", name_at);
    }
    return spec;
  }

  const std::string& text_;
  std::size_t pos_ = 0;
};

inline Group build_sym(std::uint64_t n) {
  unsigned deg = static_cast<unsigned>(n);
  if (deg == 1) return Group::trivial(1);
  std::vector<Permutation> gens{Permutation::from_cycles(deg, {{0, 1}})};
  if (deg > 2) {
    std::vector<unsigned> cycle(deg);
    for (unsigned i = 0; i < deg; ++i) cycle[i] = i;
    gens.push_back(Permutation::from_cycles(deg, {cycle}));
  }
  return Group::generated_by(std::move(gens));
}

inline Group build_alt(std::uint64_t n) {
  unsigned deg = static_cast<unsigned>(n);
  if (deg < 3) return Group::trivial(deg);
  std::vector<Permutation> gens;
  for (unsigned i = 2; i < deg; ++i) gens.push_back(Permutation::from_cycles(deg, {{0, 1, i}}));
  return Group::generated_by(std::move(gens));
}

inline Group build_cyc(std::uint64_t n) {
  unsigned deg = static_cast<unsigned>(n);
  if (deg == 1) return Group::trivial(1);
  std::vector<unsigned> cycle(deg);
  for (unsigned i = 0; i < deg; ++i) cycle[i] = i;
  return Group::generated_by({Permutation::from_cycles(deg, {cycle})});
}

}  // namespace detail

inline GroupSpec parse_group_spec(const std::string& text) {
  return detail::SpecParser(text).parse_full();
}

/// Builds the permutation group a spec describes. Construction-level
/// certification (exact orders) happens inside the constructors.
inline Group build_group(const GroupSpec& spec) {
  switch (spec.family) {
    case GroupSpec::Family::sym:
      return detail::build_sym(spec.numbers[0]);
    case GroupSpec::Family::alt:
      return detail::build_alt(spec.numbers[0]);
    case GroupSpec::Family::cyc:
      return detail::build_cyc(spec.numbers[0]);
    case GroupSpec::Family::psl2:
      return classical_group(ClassicalKind::psl2, spec.numbers[0]);
    case GroupSpec::Family::pgl2:
      return classical_group(ClassicalKind::pgl2, spec.numbers[0]);
    case GroupSpec::Family::pgammal2:
      return classical_group(ClassicalKind::pgammal2, spec.numbers[0]);
    case GroupSpec::Family::m10:
      return m10().first;
    case GroupSpec::Family::xt: {
      auto [X, S] = m10();
      return subdirect_power(X, S, static_cast<unsigned>(spec.numbers[0]));
    }
    case GroupSpec::Family::yt: {
      auto [X, S] = m10();
      return wreath_cyclic(S, X.generators().back(), static_cast<unsigned>(spec.numbers[0]));
    }
    case GroupSpec::Family::meta:
      return metacyclic_affine(spec.numbers[0], static_cast<unsigned>(spec.numbers[1]),
                               spec.numbers[2], static_cast<unsigned>(spec.numbers[3]));
    case GroupSpec::Family::dp:
      return direct_power(build_group(spec.children[0]),
                          static_cast<unsigned>(spec.numbers[0]));
    case GroupSpec::Family::prod:
      return direct_product(build_group(spec.children[0]), build_group(spec.children[1]));
  }
  throw std::logic_error("build_group: unreachable");
}

inline Group build_group(const std::string& text) { return build_group(parse_group_spec(text)); }

/// Cycle notation like "(0 1)(2 3 4)"; "()" is the identity. Points may be
/// separated by spaces or commas.
inline Permutation parse_permutation(const std::string& text, unsigned degree) {
  std::vector<std::vector<unsigned>> cycles;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == ',')) ++i;
  };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(') throw SpecParseError("expected '(' in cycle notation", i);
    ++i;
    std::vector<unsigned> cycle;
    skip_ws();
    while (i < text.size() && text[i] != ')') {
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        throw SpecParseError("expected a point number", i);
      unsigned value = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        value = value * 10 + static_cast<unsigned>(text[i] - '0');
        ++i;
      }
      if (value >= degree)
        throw SpecParseError("point " + std::to_string(value) + " outside degree " +
                                 std::to_string(degree),
                             i);
      cycle.push_back(value);
      skip_ws();
    }
    if (i == text.size()) throw SpecParseError("unterminated cycle", i);
    ++i;  // ')'
    if (!cycle.empty()) cycles.push_back(std::move(cycle));
    skip_ws();
  }
  return Permutation::from_cycles(degree, cycles);
}

}  // namespace pel
