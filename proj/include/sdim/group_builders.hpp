#pragma once

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <istream>
#include <map>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include "sdim/error.hpp"
#include "sdim/group.hpp"
#include "sdim/group_spec.hpp"

namespace sdim {

struct BuildOptions {
  std::size_t closure_cap = 5040;
  // Accept Cayley files above the associativity check limit without checking.
  bool trust_large_cayley = false;
};

using Permutation = std::vector<std::uint16_t>;  // 0-based images

namespace detail {

inline Group make_table_group(std::size_t n, GroupSpec spec, auto&& mul) {
  std::vector<Element> table(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) table[i * n + j] = static_cast<Element>(mul(i, j));
  return Group(n, std::move(table), std::move(spec), AssociativityCheck::Trusted);
}

inline std::uint64_t checked_order(std::uint64_t n) {
  if (n > 65536) throw Error(ErrorKind::InvalidSpec, "group order " + std::to_string(n) + " is too large");
  return n;
}

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (auto v : p) h = (h ^ v) * 1099511628211ULL;
    return h;
  }
};

// Product convention: apply x first, then y.
inline Permutation compose(const Permutation& x, const Permutation& y) {
  Permutation r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = y[x[i]];
  return r;
}

inline Group group_from_permutations(const std::vector<Permutation>& elements, GroupSpec spec) {
  std::unordered_map<Permutation, std::size_t, PermutationHash> index;
  for (std::size_t i = 0; i < elements.size(); ++i) index.emplace(elements[i], i);
  return make_table_group(elements.size(), std::move(spec), [&](std::size_t i, std::size_t j) {
    auto it = index.find(compose(elements[i], elements[j]));
    if (it == index.end()) throw Error(ErrorKind::NotAGroup, "permutation set is not closed");
    return it->second;
  });
}

inline bool is_even(const Permutation& p) {
  std::vector<bool> seen(p.size());
  std::size_t transpositions = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = p[j]) {
      seen[j] = true;
      ++len;
    }
    transpositions += len - 1;
  }
  return transpositions % 2 == 0;
}

// Elements of S_n (or A_n) in lexicographic order of image lists; the
// identity comes first.
inline Group symmetric_like(int degree, bool alternating, GroupSpec spec) {
  Permutation p(static_cast<std::size_t>(degree));
  for (int i = 0; i < degree; ++i) p[static_cast<std::size_t>(i)] = static_cast<std::uint16_t>(i);
  std::vector<Permutation> elements;
  do {
    if (!alternating || is_even(p)) elements.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return group_from_permutations(elements, std::move(spec));
}

// (a_1, ..., a_k) indexed in mixed radix with the first factor most significant.
inline Group direct_product(const std::vector<Group>& factors, GroupSpec spec) {
  std::size_t n = 1;
  for (const auto& f : factors) n *= f.order();
  checked_order(n);
  return make_table_group(n, std::move(spec), [&](std::size_t i, std::size_t j) {
    std::size_t result = 0;
    std::size_t stride = n;
    for (const auto& f : factors) {
      stride /= f.order();
      auto a = static_cast<Element>((i / stride) % f.order());
      auto b = static_cast<Element>((j / stride) % f.order());
      result += f.op(a, b) * stride;
    }
    return result;
  });
}

inline Group cyclic(std::uint64_t n, GroupSpec spec) {
  checked_order(n);
  return make_table_group(n, std::move(spec), [n](std::size_t i, std::size_t j) { return (i + j) % n; });
}

}  // namespace detail

// Cayley file: first line n, then n rows of n integers; entry (i, j) is i*j
// and element 0 must be the identity.
inline Group parse_cayley(std::istream& in, GroupSpec spec, const BuildOptions& options = {}) {
  std::size_t n = 0;
  if (!(in >> n) || n == 0) throw Error(ErrorKind::InvalidSpec, "Cayley file: missing or zero order");
  detail::checked_order(n);
  std::vector<Element> table(n * n);
  for (auto& v : table) {
    long long x = 0;
    if (!(in >> x)) throw Error(ErrorKind::InvalidSpec, "Cayley file: expected " + std::to_string(n * n) + " entries");
    if (x < 0 || static_cast<std::size_t>(x) >= n)
      throw Error(ErrorKind::NotAGroup, "Cayley file: entry " + std::to_string(x) + " out of range");
    v = static_cast<Element>(x);
  }
  std::string extra;
  if (in >> extra) throw Error(ErrorKind::InvalidSpec, "Cayley file: trailing data");
  for (std::size_t j = 0; j < n; ++j)
    if (table[j] != j || table[j * n] != j) throw Error(ErrorKind::NotAGroup, "Cayley file: element 0 is not the identity");
  auto check = options.trust_large_cayley ? AssociativityCheck::Trusted : AssociativityCheck::Auto;
  return Group(n, std::move(table), std::move(spec), check);
}

// One permutation per line in disjoint-cycle notation on points 1..k,
// e.g. "(1 2 3)(4 5)"; "()" is the identity. Blank lines and '#' comments
// are ignored.
inline std::vector<Permutation> parse_permutations(std::istream& in) {
  std::vector<std::vector<std::vector<int>>> cycle_lists;
  int degree = 0;
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::vector<std::vector<int>> cycles;
    std::size_t pos = 0;
    while (pos < line.size()) {
      char c = line[pos];
      if (c == ' ' || c == '\t' || c == '\r') {
        ++pos;
        continue;
      }
      if (c != '(') throw Error(ErrorKind::InvalidSpec, "perm file: expected '(' in '" + line + "'");
      auto close = line.find(')', pos);
      if (close == std::string::npos) throw Error(ErrorKind::InvalidSpec, "perm file: unbalanced '(' in '" + line + "'");
      std::istringstream body(line.substr(pos + 1, close - pos - 1));
      std::vector<int> cycle;
      std::string tok;
      while (body >> tok) {
        if (!tok.empty() && tok.back() == ',') tok.pop_back();
        int point = 0;
        try {
          point = std::stoi(tok);
        } catch (const std::exception&) {
          throw Error(ErrorKind::InvalidSpec, "perm file: bad point '" + tok + "'");
        }
        if (point < 1 || point > 4096) throw Error(ErrorKind::InvalidSpec, "perm file: point out of range");
        if (std::find(cycle.begin(), cycle.end(), point) != cycle.end())
          throw Error(ErrorKind::InvalidSpec, "perm file: repeated point in cycle");
        cycle.push_back(point);
        degree = std::max(degree, point);
      }
      cycles.push_back(std::move(cycle));
      pos = close + 1;
    }
    cycle_lists.push_back(std::move(cycles));
  }
  if (cycle_lists.empty()) throw Error(ErrorKind::InvalidSpec, "perm file: no generators");
  degree = std::max(degree, 1);

  std::vector<Permutation> out;
  for (const auto& cycles : cycle_lists) {
    Permutation p(static_cast<std::size_t>(degree));
    for (int i = 0; i < degree; ++i) p[static_cast<std::size_t>(i)] = static_cast<std::uint16_t>(i);
    std::vector<bool> used(static_cast<std::size_t>(degree));
    for (const auto& cycle : cycles) {
      for (std::size_t k = 0; k < cycle.size(); ++k) {
        auto from = static_cast<std::size_t>(cycle[k] - 1);
        if (used[from]) throw Error(ErrorKind::InvalidSpec, "perm file: cycles are not disjoint");
        used[from] = true;
        p[from] = static_cast<std::uint16_t>(cycle[(k + 1) % cycle.size()] - 1);
      }
    }
    out.push_back(std::move(p));
  }
  return out;
}

// Breadth-first multiplication closure of the generators. Elements are indexed
// in first-discovery order starting from the identity.
inline std::vector<Permutation> permutation_closure(const std::vector<Permutation>& generators,
                                                    std::size_t cap = 5040) {
  if (generators.empty()) throw Error(ErrorKind::InvalidSpec, "no generators");
  std::size_t degree = generators.front().size();
  Permutation id(degree);
  for (std::size_t i = 0; i < degree; ++i) id[i] = static_cast<std::uint16_t>(i);
  std::vector<Permutation> elements{id};
  std::unordered_map<Permutation, std::size_t, detail::PermutationHash> seen{{id, 0}};
  for (std::size_t head = 0; head < elements.size(); ++head) {
    for (const auto& gen : generators) {
      Permutation next = detail::compose(elements[head], gen);
      if (seen.contains(next)) continue;
      if (elements.size() >= cap)
        throw Error(ErrorKind::ClosureTooLarge, "permutation closure exceeds cap " + std::to_string(cap));
      seen.emplace(next, elements.size());
      elements.push_back(std::move(next));
    }
  }
  return elements;
}

inline Group build_group(const GroupSpec& spec, const BuildOptions& options = {}) {
  detail::validate(spec);
  return std::visit(
      [&](const auto& v) -> Group {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, spec::Cyclic>) {
          return detail::cyclic(v.n, spec);
        } else if constexpr (std::is_same_v<T, spec::Dihedral>) {
          // a^i -> i, b a^i -> n + i, with a^i b = b a^{-i}.
          const std::uint64_t n = v.order / 2;
          detail::checked_order(v.order);
          return detail::make_table_group(v.order, spec, [n](std::size_t x, std::size_t y) -> std::size_t {
            bool xr = x >= n, yr = y >= n;
            std::size_t i = x % n, j = y % n;
            if (!xr && !yr) return (i + j) % n;
            if (!xr && yr) return n + (n - i + j) % n;
            if (xr && !yr) return n + (i + j) % n;
            return (n - i + j) % n;
          });
        } else if constexpr (std::is_same_v<T, spec::GeneralizedQuaternion>) {
          // x^k -> k, y x^k -> 2n + k, with x^{2n} = 1, y^2 = x^n, x^k y = y x^{-k}.
          const std::uint64_t n = v.order / 4;
          const std::uint64_t m = 2 * n;
          detail::checked_order(v.order);
          return detail::make_table_group(v.order, spec, [n, m](std::size_t a, std::size_t b) -> std::size_t {
            bool ay = a >= m, by = b >= m;
            std::size_t i = a % m, j = b % m;
            if (!ay && !by) return (i + j) % m;
            if (!ay && by) return m + (m - i + j) % m;
            if (ay && !by) return m + (i + j) % m;
            return (n + m - i + j) % m;
          });
        } else if constexpr (std::is_same_v<T, spec::ElementaryAbelian>) {
          std::vector<Group> factors;
          for (int i = 0; i < v.k; ++i) factors.push_back(detail::cyclic(v.p, GroupSpec{spec::Cyclic{v.p}}));
          if (factors.size() == 1) return detail::cyclic(v.p, spec);
          return detail::direct_product(factors, spec);
        } else if constexpr (std::is_same_v<T, spec::Abelian>) {
          std::vector<Group> factors;
          for (auto d : v.invariants) factors.push_back(detail::cyclic(d, GroupSpec{spec::Cyclic{d}}));
          if (factors.size() == 1) return detail::cyclic(v.invariants.front(), spec);
          return detail::direct_product(factors, spec);
        } else if constexpr (std::is_same_v<T, spec::Symmetric>) {
          return detail::symmetric_like(v.n, false, spec);
        } else if constexpr (std::is_same_v<T, spec::Alternating>) {
          return detail::symmetric_like(v.n, true, spec);
        } else if constexpr (std::is_same_v<T, spec::DirectProduct>) {
          std::vector<Group> factors;
          for (const auto& f : v.factors) factors.push_back(build_group(f, options));
          return detail::direct_product(factors, spec);
        } else if constexpr (std::is_same_v<T, spec::CayleyFile>) {
          std::ifstream in(v.path);
          if (!in) throw Error(ErrorKind::InvalidSpec, "cannot open Cayley file '" + v.path + "'");
          return parse_cayley(in, spec, options);
        } else {
          std::ifstream in(v.path);
          if (!in) throw Error(ErrorKind::InvalidSpec, "cannot open perm file '" + v.path + "'");
          auto elements = permutation_closure(parse_permutations(in), options.closure_cap);
          return detail::group_from_permutations(elements, spec);
        }
      },
      spec.variant);
}

inline Group build_group(std::string_view spec_text, const BuildOptions& options = {}) {
  return build_group(parse_group_spec(spec_text), options);
}

}  // namespace sdim
