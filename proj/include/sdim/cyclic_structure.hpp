#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <vector>

#include "sdim/bitset.hpp"
#include "sdim/error.hpp"
#include "sdim/group.hpp"
#include "sdim/number_theory.hpp"

namespace sdim {

struct CyclicSubgroup {
  Element generator = 0;           // smallest-index generator
  std::vector<Element> elements;   // sorted
  Bitset members;
  std::uint64_t order() const noexcept { return elements.size(); }
};

inline CyclicSubgroup cyclic_subgroup(const Group& g, Element x) {
  CyclicSubgroup h;
  h.members = Bitset(g.order());
  Element y = g.identity();
  do {
    h.members.set(y);
    y = g.op(y, x);
  } while (y != g.identity());
  for (std::size_t e : h.members.to_vector()) h.elements.push_back(static_cast<Element>(e));
  h.generator = x;
  for (Element e : h.elements)
    if (element_order(g, e) == h.order()) {
      h.generator = e;
      break;
    }
  return h;
}

// The set M of maximal cyclic subgroups, split into the p-power parts M_p and
// the members of non-prime-power order.
struct MaximalCyclicFamily {
  std::vector<CyclicSubgroup> all;                               // sorted by (order, elements)
  std::map<std::uint64_t, std::vector<std::size_t>> by_prime;    // p -> indices into all
  std::vector<std::size_t> mixed;                                // indices into all

  std::vector<std::size_t> of_prime(std::uint64_t p) const {
    auto it = by_prime.find(p);
    return it == by_prime.end() ? std::vector<std::size_t>{} : it->second;
  }
};

inline MaximalCyclicFamily maximal_cyclic_subgroups(const Group& g) {
  const std::size_t n = g.order();
  // Deduplicate on the element set: many generators give the same subgroup.
  std::map<Bitset, std::size_t> index;
  std::vector<CyclicSubgroup> subgroups;
  std::vector<std::size_t> of_element(n);
  for (Element x = 0; x < n; ++x) {
    CyclicSubgroup h = cyclic_subgroup(g, x);
    auto [it, inserted] = index.emplace(h.members, subgroups.size());
    if (inserted) subgroups.push_back(std::move(h));
    of_element[x] = it->second;
  }
  std::vector<bool> maximal(subgroups.size(), true);
  for (const auto& k : subgroups)
    for (Element x : k.elements) {
      std::size_t inner = of_element[x];
      if (subgroups[inner].order() < k.order()) maximal[inner] = false;
    }

  MaximalCyclicFamily fam;
  for (std::size_t i = 0; i < subgroups.size(); ++i)
    if (maximal[i]) fam.all.push_back(std::move(subgroups[i]));
  std::sort(fam.all.begin(), fam.all.end(), [](const CyclicSubgroup& a, const CyclicSubgroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.elements < b.elements;
  });
  for (std::size_t i = 0; i < fam.all.size(); ++i) {
    auto f = factorize(fam.all[i].order());
    if (f.is_prime_power())
      fam.by_prime[f.factors.front().prime].push_back(i);
    else
      fam.mixed.push_back(i);
  }
  return fam;
}

// Intersection chain C_1 < C_2 < ... < C_s = M_i of one M_i in M_p, together
// with the exponents that enter alpha_p.
struct ChainAnalysis {
  std::size_t subgroup_index = 0;             // index of M_i in MaximalCyclicFamily::all
  std::uint64_t prime = 0;
  std::vector<CyclicSubgroup> chain;          // strictly increasing by inclusion
  std::vector<Element> chain_generators;      // c_{iu}, one per chain entry
  int s = 0;                                  // chain length s_i
  int lambda_exp = -1;                        // -1 encodes p^{-1} (M_p == M)
  int s_prime = 1;                            // 1-based
  int f = 0;                                  // |M_i| = p^f

  int alpha_term() const noexcept { return s - s_prime + lambda_exp + 2; }
};

inline std::vector<ChainAnalysis> chain_analysis(const Group& g, const MaximalCyclicFamily& fam, std::uint64_t p) {
  if (!is_prime(p) || g.order() % p != 0)
    throw Error(ErrorKind::NotAPrimeDivisor, std::to_string(p) + " is not a prime divisor of " + std::to_string(g.order()));
  std::vector<ChainAnalysis> out;
  const auto mp = fam.of_prime(p);
  for (std::size_t i : mp) {
    const CyclicSubgroup& mi = fam.all[i];
    ChainAnalysis ca;
    ca.subgroup_index = i;
    ca.prime = p;
    ca.f = *exact_log(mi.order(), p);

    // Subgroups of a cyclic p-group are determined by their order.
    std::map<std::size_t, Bitset> by_size;
    for (std::size_t j : mp) {
      Bitset meet = mi.members & fam.all[j].members;
      by_size.emplace(meet.count(), std::move(meet));
    }
    for (auto& [size, members] : by_size) {
      CyclicSubgroup c;
      c.members = members;
      for (std::size_t e : members.to_vector()) c.elements.push_back(static_cast<Element>(e));
      c.generator = c.elements.front();
      for (Element e : c.elements)
        if (element_order(g, e) == size) {
          c.generator = e;
          break;
        }
      ca.chain_generators.push_back(c.generator);
      ca.chain.push_back(std::move(c));
    }
    ca.s = static_cast<int>(ca.chain.size());

    if (mp.size() == fam.all.size()) {
      ca.lambda_exp = -1;
    } else {
      std::size_t best = 0;
      for (std::size_t j = 0; j < fam.all.size(); ++j) {
        if (std::find(mp.begin(), mp.end(), j) != mp.end()) continue;
        best = std::max(best, mi.members.intersection_count(fam.all[j].members));
      }
      ca.lambda_exp = *exact_log(best, p);
    }

    // s' = min{u : p^lambda < |C_u|}; lambda < f guarantees existence.
    ca.s_prime = ca.s;
    for (int u = 0; u < ca.s; ++u) {
      std::uint64_t size = ca.chain[static_cast<std::size_t>(u)].order();
      if (ca.lambda_exp < 0 || ipow(p, ca.lambda_exp) < size) {
        ca.s_prime = u + 1;
        break;
      }
    }
    out.push_back(std::move(ca));
  }
  return out;
}

inline std::vector<ChainAnalysis> chain_analysis(const Group& g, std::uint64_t p) {
  return chain_analysis(g, maximal_cyclic_subgroups(g), p);
}

// alpha_p = max_i (s_i - s_i' + lambda_i + 2), or 0 when M_p is empty.
inline int alpha_p(const Group& g, const MaximalCyclicFamily& fam, std::uint64_t p) {
  if (fam.of_prime(p).empty()) return 0;
  int best = 0;
  for (const auto& ca : chain_analysis(g, fam, p)) best = std::max(best, ca.alpha_term());
  return best;
}

inline int alpha_p(const Group& g, std::uint64_t p) { return alpha_p(g, maximal_cyclic_subgroups(g), p); }

}  // namespace sdim
