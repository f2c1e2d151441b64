#pragma once

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <functional>
#include <iterator>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "sdim/error.hpp"
#include "sdim/number_theory.hpp"

namespace sdim {

struct GroupSpec;

namespace spec {

struct Cyclic {
  std::uint64_t n;
};
// Dihedral group of order 2n.
struct Dihedral {
  std::uint64_t order;
};
// Generalized quaternion (dicyclic) group Q_{4n}.
struct GeneralizedQuaternion {
  std::uint64_t order;
};
struct ElementaryAbelian {
  std::uint64_t p;
  int k;
};
// Invariant factors d_1 | d_2 | ... | d_k.
struct Abelian {
  std::vector<std::uint64_t> invariants;
};
struct Symmetric {
  int n;
};
struct Alternating {
  int n;
};
struct DirectProduct {
  std::vector<GroupSpec> factors;
};
struct CayleyFile {
  std::string path;
};
struct PermFile {
  std::string path;
};

}  // namespace spec

struct GroupSpec {
  using Variant = std::variant<spec::Cyclic, spec::Dihedral, spec::GeneralizedQuaternion, spec::ElementaryAbelian,
                               spec::Abelian, spec::Symmetric, spec::Alternating, spec::DirectProduct,
                               spec::CayleyFile, spec::PermFile>;
  Variant variant;

  template <typename T>
  bool is() const noexcept {
    return std::holds_alternative<T>(variant);
  }
  template <typename T>
  const T& as() const {
    return std::get<T>(variant);
  }
};

namespace detail {

inline std::uint64_t parse_uint(std::string_view text, std::string_view whole) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size())
    throw Error(ErrorKind::InvalidSpec, "expected an integer in '" + std::string(whole) + "'");
  return value;
}

inline void validate(const GroupSpec& g);

inline GroupSpec parse_atom(std::string_view s) {
  if (s.empty()) throw Error(ErrorKind::InvalidSpec, "empty group spec");
  GroupSpec out;
  if (s.starts_with("Ab[")) {
    if (!s.ends_with("]")) throw Error(ErrorKind::InvalidSpec, "unterminated '" + std::string(s) + "'");
    std::string_view body = s.substr(3, s.size() - 4);
    spec::Abelian ab;
    while (!body.empty()) {
      auto comma = body.find(',');
      ab.invariants.push_back(parse_uint(body.substr(0, comma), s));
      if (comma == std::string_view::npos) break;
      body.remove_prefix(comma + 1);
      if (body.empty()) throw Error(ErrorKind::InvalidSpec, "trailing comma in '" + std::string(s) + "'");
    }
    out.variant = std::move(ab);
  } else if (s[0] == 'Z') {
    out.variant = spec::Cyclic{parse_uint(s.substr(1), s)};
  } else if (s[0] == 'D') {
    out.variant = spec::Dihedral{parse_uint(s.substr(1), s)};
  } else if (s[0] == 'Q') {
    out.variant = spec::GeneralizedQuaternion{parse_uint(s.substr(1), s)};
  } else if (s[0] == 'E') {
    auto caret = s.find('^');
    if (caret == std::string_view::npos) throw Error(ErrorKind::InvalidSpec, "expected E<p>^<k>, got '" + std::string(s) + "'");
    out.variant = spec::ElementaryAbelian{parse_uint(s.substr(1, caret - 1), s),
                                          static_cast<int>(parse_uint(s.substr(caret + 1), s))};
  } else if (s[0] == 'S') {
    out.variant = spec::Symmetric{static_cast<int>(parse_uint(s.substr(1), s))};
  } else if (s[0] == 'A') {
    out.variant = spec::Alternating{static_cast<int>(parse_uint(s.substr(1), s))};
  } else {
    throw Error(ErrorKind::InvalidSpec, "unknown group spec '" + std::string(s) + "'");
  }
  validate(out);
  return out;
}

inline void validate(const GroupSpec& g) {
  auto bad = [](const std::string& msg) { throw Error(ErrorKind::InvalidSpec, msg); };
  std::visit(
      [&](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, spec::Cyclic>) {
          if (v.n < 1) bad("cyclic order must be >= 1");
        } else if constexpr (std::is_same_v<T, spec::Dihedral>) {
          if (v.order % 2 != 0 || v.order < 6) bad("dihedral order must be even and >= 6");
        } else if constexpr (std::is_same_v<T, spec::GeneralizedQuaternion>) {
          if (v.order % 4 != 0 || v.order < 8) bad("generalized quaternion order must be divisible by 4 and >= 8");
        } else if constexpr (std::is_same_v<T, spec::ElementaryAbelian>) {
          if (!is_prime(v.p)) bad("elementary abelian base must be prime");
          if (v.k < 1) bad("elementary abelian rank must be >= 1");
        } else if constexpr (std::is_same_v<T, spec::Abelian>) {
          if (v.invariants.empty()) bad("abelian spec needs at least one invariant factor");
          for (std::size_t i = 0; i < v.invariants.size(); ++i) {
            if (v.invariants[i] < 2) bad("invariant factors must be >= 2");
            if (i + 1 < v.invariants.size() && v.invariants[i + 1] % v.invariants[i] != 0)
              bad("invariant factors must satisfy d_i | d_{i+1}");
          }
        } else if constexpr (std::is_same_v<T, spec::Symmetric> || std::is_same_v<T, spec::Alternating>) {
          if (v.n < 1 || v.n > 6) bad("symmetric/alternating degree must be in 1..6");
        } else if constexpr (std::is_same_v<T, spec::DirectProduct>) {
          if (v.factors.size() < 2) bad("direct product needs at least two factors");
          for (const auto& f : v.factors) validate(f);
        } else {
          if (v.path.empty()) bad("empty file path");
        }
      },
      g.variant);
}

}  // namespace detail

// Grammar: Z<n>, D<order>, Q<order>, E<p>^<k>, Ab[d1,d2,...], S<n>, A<n>,
// products joined with 'x' (Z3xQ8), cayley:<path>, perm:<path>.
inline GroupSpec parse_group_spec(std::string_view text) {
  if (text.starts_with("cayley:")) {
    GroupSpec g{spec::CayleyFile{std::string(text.substr(7))}};
    detail::validate(g);
    return g;
  }
  if (text.starts_with("perm:")) {
    GroupSpec g{spec::PermFile{std::string(text.substr(5))}};
    detail::validate(g);
    return g;
  }
  std::vector<GroupSpec> factors;
  while (true) {
    auto pos = text.find('x');
    factors.push_back(detail::parse_atom(text.substr(0, pos)));
    if (pos == std::string_view::npos) break;
    text.remove_prefix(pos + 1);
  }
  if (factors.size() == 1) return std::move(factors.front());
  return GroupSpec{spec::DirectProduct{std::move(factors)}};
}

inline std::string to_string(const GroupSpec& g) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, spec::Cyclic>) {
          return "Z" + std::to_string(v.n);
        } else if constexpr (std::is_same_v<T, spec::Dihedral>) {
          return "D" + std::to_string(v.order);
        } else if constexpr (std::is_same_v<T, spec::GeneralizedQuaternion>) {
          return "Q" + std::to_string(v.order);
        } else if constexpr (std::is_same_v<T, spec::ElementaryAbelian>) {
          return "E" + std::to_string(v.p) + "^" + std::to_string(v.k);
        } else if constexpr (std::is_same_v<T, spec::Abelian>) {
          std::string s = "Ab[";
          for (std::size_t i = 0; i < v.invariants.size(); ++i) s += (i ? "," : "") + std::to_string(v.invariants[i]);
          return s + "]";
        } else if constexpr (std::is_same_v<T, spec::Symmetric>) {
          return "S" + std::to_string(v.n);
        } else if constexpr (std::is_same_v<T, spec::Alternating>) {
          return "A" + std::to_string(v.n);
        } else if constexpr (std::is_same_v<T, spec::DirectProduct>) {
          std::string s;
          for (std::size_t i = 0; i < v.factors.size(); ++i) s += (i ? "x" : "") + to_string(v.factors[i]);
          return s;
        } else if constexpr (std::is_same_v<T, spec::CayleyFile>) {
          return "cayley:" + v.path;
        } else {
          return "perm:" + v.path;
        }
      },
      g.variant);
}

// Cyclic factor orders when the spec describes an abelian group built from
// cyclic pieces (Z, E, Ab and products of those); nullopt otherwise.
inline std::optional<std::vector<std::uint64_t>> cyclic_factor_orders(const GroupSpec& g) {
  if (g.is<spec::Cyclic>()) return std::vector<std::uint64_t>{g.as<spec::Cyclic>().n};
  if (g.is<spec::ElementaryAbelian>()) {
    const auto& e = g.as<spec::ElementaryAbelian>();
    return std::vector<std::uint64_t>(static_cast<std::size_t>(e.k), e.p);
  }
  if (g.is<spec::Abelian>()) return g.as<spec::Abelian>().invariants;
  if (g.is<spec::DirectProduct>()) {
    std::vector<std::uint64_t> out;
    for (const auto& f : g.as<spec::DirectProduct>().factors) {
      auto part = cyclic_factor_orders(f);
      if (!part) return std::nullopt;
      out.insert(out.end(), part->begin(), part->end());
    }
    return out;
  }
  return std::nullopt;
}

// Invariant factors d_1 | ... | d_k (all >= 2) of the abelian group
// Z_{c_1} x ... x Z_{c_m}. The trivial group yields an empty list.
inline std::vector<std::uint64_t> invariant_factors(const std::vector<std::uint64_t>& cyclic_orders) {
  // Collect the prime-power parts per prime, largest first.
  std::vector<std::pair<std::uint64_t, std::vector<std::uint64_t>>> by_prime;
  for (std::uint64_t c : cyclic_orders) {
    for (const auto& pp : factorize(c).factors) {
      auto it = std::find_if(by_prime.begin(), by_prime.end(), [&](const auto& e) { return e.first == pp.prime; });
      if (it == by_prime.end()) {
        by_prime.push_back({pp.prime, {}});
        it = std::prev(by_prime.end());
      }
      it->second.push_back(ipow(pp.prime, pp.exponent));
    }
  }
  std::size_t k = 0;
  for (auto& [p, powers] : by_prime) {
    std::sort(powers.begin(), powers.end(), std::greater<>());
    k = std::max(k, powers.size());
  }
  // d_k takes the largest power of every prime, d_{k-1} the next, and so on.
  std::vector<std::uint64_t> d(k, 1);
  for (const auto& [p, powers] : by_prime)
    for (std::size_t j = 0; j < powers.size(); ++j) d[k - 1 - j] *= powers[j];
  return d;
}

}  // namespace sdim
