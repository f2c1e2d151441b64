#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sdim/clique.hpp"
#include "sdim/error.hpp"
#include "sdim/graph.hpp"

namespace sdim {

enum class Method {
  ClosedFormCyclicPrimePower,
  ClosedFormCyclic,
  ClosedFormPGroup,
  ClosedFormDihedral,
  ClosedFormQuaternion,
  ClosedFormAbelian,
  ClosedFormElementaryAbelian,
  GroupTheorem,
  Diameter2Reduction,
  GenericOracle,
};

inline std::string_view to_string(Method m) {
  switch (m) {
    case Method::ClosedFormCyclicPrimePower: return "ClosedFormCyclicPrimePower";
    case Method::ClosedFormCyclic: return "ClosedFormCyclic";
    case Method::ClosedFormPGroup: return "ClosedFormPGroup";
    case Method::ClosedFormDihedral: return "ClosedFormDihedral";
    case Method::ClosedFormQuaternion: return "ClosedFormQuaternion";
    case Method::ClosedFormAbelian: return "ClosedFormAbelian";
    case Method::ClosedFormElementaryAbelian: return "ClosedFormElementaryAbelian";
    case Method::GroupTheorem: return "GroupTheorem";
    case Method::Diameter2Reduction: return "Diameter2Reduction";
    case Method::GenericOracle: return "GenericOracle";
  }
  return "Unknown";
}

struct SdimResult {
  std::size_t value = 0;
  std::optional<std::size_t> omega_reduced;
  Method method = Method::GenericOracle;
  std::optional<Method> closed_form;
  std::optional<std::vector<Vertex>> witness;  // sorted
  bool verified = false;
  std::optional<std::string> note;
};

inline constexpr std::size_t kDefaultOracleCap = 200;

// Definitional check: every pair u != v needs some w in S with
// d(w,u) = d(w,v) + d(v,u) or d(w,v) = d(w,u) + d(u,v). A pair with an
// endpoint in S is resolved by that endpoint, so only pairs outside S are
// examined.
inline bool is_strong_resolving_set(const Graph& g, const std::vector<Vertex>& s) {
  require_connected(g);
  Bitset in_s(g.size());
  for (Vertex v : s) {
    if (v >= g.size()) throw Error(ErrorKind::Parse, "vertex " + std::to_string(v) + " out of range");
    in_s.set(v);
  }
  std::vector<Vertex> outside;
  for (Vertex v = 0; v < g.size(); ++v)
    if (!in_s.test(v)) outside.push_back(v);
  std::vector<std::vector<std::size_t>> dist;
  dist.reserve(outside.size());
  for (Vertex v : outside) dist.push_back(bfs_distances(g, v));

  for (std::size_t a = 0; a < outside.size(); ++a)
    for (std::size_t b = a + 1; b < outside.size(); ++b) {
      const auto& du = dist[a];
      const auto& dv = dist[b];
      const std::size_t duv = du[outside[b]];
      bool resolved = false;
      for (Vertex w : s) {
        if (du[w] == dv[w] + duv || dv[w] == du[w] + duv) {
          resolved = true;
          break;
        }
      }
      if (!resolved) return false;
    }
  return true;
}

// Edges join mutually maximally distant pairs: no neighbour of v is farther
// from u than v is, and symmetrically.
inline Graph strong_resolving_graph(const Graph& g) {
  require_connected(g);
  const DistanceMatrix d = all_pairs_distances(g);
  Graph srg(g.size());
  auto maximal_from = [&](Vertex u, Vertex v) {
    bool ok = true;
    g.neighbors(v).for_each([&](std::size_t w) {
      if (d[u][w] > d[u][v]) ok = false;
    });
    return ok;
  };
  for (Vertex u = 0; u < g.size(); ++u)
    for (Vertex v = u + 1; v < g.size(); ++v)
      if (maximal_from(u, v) && maximal_from(v, u)) srg.add_edge(u, v);
  return srg;
}

// sdim as the vertex cover number of the strong resolving graph.
inline SdimResult sdim_oracle(const Graph& g, std::size_t cap = kDefaultOracleCap) {
  require_connected(g);
  if (g.size() > cap)
    throw Error(ErrorKind::OracleCapExceeded,
                "graph has " + std::to_string(g.size()) + " vertices, oracle cap is " + std::to_string(cap));
  SdimResult r;
  r.method = Method::GenericOracle;
  auto cover = min_vertex_cover(strong_resolving_graph(g));
  r.value = cover.size();
  r.verified = is_strong_resolving_set(g, cover);
  r.witness = std::move(cover);
  return r;
}

// A universal vertex forces diameter <= 2; otherwise measure it.
inline bool has_diameter_at_most_two(const Graph& g) {
  if (g.size() <= 1) return true;
  for (Vertex v = 0; v < g.size(); ++v)
    if (g.degree(v) + 1 == g.size()) return true;
  return diameter(g) <= 2;
}

// sdim = n - omega(R) for connected graphs of diameter at most two. The
// witness is V minus a maximum clique of class representatives.
inline SdimResult sdim_via_reduction(const Graph& g) {
  require_connected(g);
  if (!has_diameter_at_most_two(g)) throw Error(ErrorKind::DiameterTooLarge, "graph diameter exceeds 2");
  SdimResult r;
  r.method = Method::Diameter2Reduction;
  if (g.size() == 0) {
    r.omega_reduced = 0;
    r.witness = std::vector<Vertex>{};
    r.verified = true;
    return r;
  }
  ReducedGraph red = reduced_graph(g);
  CliqueResult clique = max_clique(red.quotient);
  Bitset kept(g.size());
  for (std::size_t c : clique.members) kept.set(red.representatives[c]);
  std::vector<Vertex> witness;
  for (Vertex v = 0; v < g.size(); ++v)
    if (!kept.test(v)) witness.push_back(v);
  r.omega_reduced = clique.size;
  r.value = g.size() - clique.size;
  r.verified = is_strong_resolving_set(g, witness);
  r.witness = std::move(witness);
  return r;
}

}  // namespace sdim
