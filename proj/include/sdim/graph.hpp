#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "sdim/bitset.hpp"
#include "sdim/error.hpp"

namespace sdim {

using Vertex = std::size_t;

// Simple undirected graph on 0..n-1 with bitset adjacency rows.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n) : rows_(n, Bitset(n)) {}

  std::size_t size() const noexcept { return rows_.size(); }

  void add_edge(Vertex u, Vertex v) {
    if (u == v) throw Error(ErrorKind::Parse, "self-loop on vertex " + std::to_string(u));
    if (u >= size() || v >= size()) throw Error(ErrorKind::Parse, "edge endpoint out of range");
    rows_[u].set(v);
    rows_[v].set(u);
  }

  bool adjacent(Vertex u, Vertex v) const noexcept { return rows_[u].test(v); }
  const Bitset& neighbors(Vertex v) const noexcept { return rows_[v]; }
  std::size_t degree(Vertex v) const noexcept { return rows_[v].count(); }

  Bitset closed_neighborhood(Vertex v) const {
    Bitset b = rows_[v];
    b.set(v);
    return b;
  }

  std::size_t edge_count() const noexcept {
    std::size_t c = 0;
    for (const auto& r : rows_) c += r.count();
    return c / 2;
  }

  std::vector<std::pair<Vertex, Vertex>> edges() const {
    std::vector<std::pair<Vertex, Vertex>> out;
    for (Vertex u = 0; u < size(); ++u)
      rows_[u].for_each([&](std::size_t v) {
        if (u < v) out.emplace_back(u, v);
      });
    return out;
  }

  Graph complement() const {
    Graph c(size());
    for (Vertex v = 0; v < size(); ++v) {
      c.rows_[v] = rows_[v];
      c.rows_[v].flip();
      c.rows_[v].reset(v);
    }
    return c;
  }

  // Subgraph induced on `vertices`, renumbered in the given order.
  Graph induced(std::span<const Vertex> vertices) const {
    Graph sub(vertices.size());
    for (std::size_t i = 0; i < vertices.size(); ++i)
      for (std::size_t j = i + 1; j < vertices.size(); ++j)
        if (adjacent(vertices[i], vertices[j])) sub.add_edge(i, j);
    return sub;
  }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<Bitset> rows_;
};

inline Graph complete_graph(std::size_t n) {
  Graph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

inline constexpr std::size_t kUnreachable = std::numeric_limits<std::size_t>::max();

// Level-synchronous BFS over bitset frontiers.
inline std::vector<std::size_t> bfs_distances(const Graph& g, Vertex source) {
  std::vector<std::size_t> dist(g.size(), kUnreachable);
  if (source >= g.size()) throw Error(ErrorKind::Parse, "BFS source out of range");
  Bitset visited(g.size());
  Bitset frontier(g.size());
  visited.set(source);
  frontier.set(source);
  dist[source] = 0;
  for (std::size_t level = 1; frontier.any(); ++level) {
    Bitset next(g.size());
    frontier.for_each([&](std::size_t v) { next |= g.neighbors(v); });
    next.subtract(visited);
    next.for_each([&](std::size_t v) { dist[v] = level; });
    visited |= next;
    frontier = std::move(next);
  }
  return dist;
}

using DistanceMatrix = std::vector<std::vector<std::size_t>>;

inline DistanceMatrix all_pairs_distances(const Graph& g) {
  DistanceMatrix d;
  d.reserve(g.size());
  for (Vertex v = 0; v < g.size(); ++v) d.push_back(bfs_distances(g, v));
  return d;
}

inline bool is_connected(const Graph& g) {
  if (g.size() == 0) return true;
  auto d = bfs_distances(g, 0);
  return std::none_of(d.begin(), d.end(), [](std::size_t x) { return x == kUnreachable; });
}

inline void require_connected(const Graph& g) {
  if (!is_connected(g)) throw Error(ErrorKind::Disconnected, "graph is disconnected");
}

inline std::size_t diameter(const Graph& g) {
  if (g.size() == 0) throw Error(ErrorKind::Parse, "diameter of an empty graph");
  std::size_t best = 0;
  for (Vertex v = 0; v < g.size(); ++v) {
    for (std::size_t d : bfs_distances(g, v)) {
      if (d == kUnreachable) throw Error(ErrorKind::Disconnected, "graph is disconnected");
      best = std::max(best, d);
    }
  }
  return best;
}

// Quotient by the closed-twin relation N[x] = N[y].
struct ReducedGraph {
  Graph base;
  std::vector<Vertex> representatives;   // minimum member of each class, ascending
  std::vector<std::size_t> class_of;     // vertex -> class id (index into representatives)
  Graph quotient;                        // on representatives, in class-id order

  std::size_t class_size(std::size_t c) const {
    return static_cast<std::size_t>(std::count(class_of.begin(), class_of.end(), c));
  }
  std::vector<Vertex> members(std::size_t c) const {
    std::vector<Vertex> out;
    for (Vertex v = 0; v < class_of.size(); ++v)
      if (class_of[v] == c) out.push_back(v);
    return out;
  }
};

inline ReducedGraph reduced_graph(const Graph& g) {
  ReducedGraph r;
  r.base = g;
  r.class_of.assign(g.size(), 0);
  // Bucket by hash of the closed neighborhood, then confirm exactly.
  std::unordered_map<std::size_t, std::vector<std::size_t>> buckets;
  std::vector<Bitset> closed;
  closed.reserve(g.size());
  for (Vertex v = 0; v < g.size(); ++v) {
    closed.push_back(g.closed_neighborhood(v));
    auto& bucket = buckets[closed.back().hash()];
    std::size_t cls = r.representatives.size();
    for (std::size_t c : bucket)
      if (closed[r.representatives[c]] == closed[v]) {
        cls = c;
        break;
      }
    if (cls == r.representatives.size()) {
      r.representatives.push_back(v);
      bucket.push_back(cls);
    }
    r.class_of[v] = cls;
  }
  r.quotient = g.induced(r.representatives);
  return r;
}

}  // namespace sdim
