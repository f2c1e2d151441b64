#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

#include "sdim/bitset.hpp"
#include "sdim/graph.hpp"

namespace sdim {

struct CliqueResult {
  std::size_t size = 0;
  std::vector<Vertex> members;  // sorted ascending
};

namespace detail {

// Bitset branch and bound for maximum clique. Vertices are renumbered by
// descending degree (ties by index); greedy sequential colouring of the
// candidate set gives the upper bound, and branching runs from the highest
// colour class downwards.
class MaxCliqueSearch {
 public:
  explicit MaxCliqueSearch(const Graph& g) : n_(g.size()), order_(g.size()) {
    std::iota(order_.begin(), order_.end(), Vertex{0});
    std::stable_sort(order_.begin(), order_.end(),
                     [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
    adj_.assign(n_, Bitset(n_));
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j)
        if (i != j && g.adjacent(order_[i], order_[j])) adj_[i].set(j);
  }

  CliqueResult run() {
    Bitset candidates(n_);
    candidates.set_all();
    std::vector<std::size_t> current;
    expand(current, candidates);
    CliqueResult r;
    r.size = best_.size();
    for (std::size_t pos : best_) r.members.push_back(order_[pos]);
    std::sort(r.members.begin(), r.members.end());
    return r;
  }

 private:
  void expand(std::vector<std::size_t>& current, Bitset candidates) {
    std::vector<std::size_t> vertices;
    std::vector<std::size_t> colors;
    color(candidates, vertices, colors);
    for (std::size_t k = vertices.size(); k-- > 0;) {
      if (current.size() + colors[k] <= best_.size()) return;
      std::size_t v = vertices[k];
      current.push_back(v);
      Bitset next = candidates & adj_[v];
      if (next.none()) {
        if (current.size() > best_.size()) best_ = current;
      } else {
        expand(current, std::move(next));
      }
      current.pop_back();
      candidates.reset(v);
    }
  }

  void color(const Bitset& candidates, std::vector<std::size_t>& vertices, std::vector<std::size_t>& colors) const {
    Bitset uncolored = candidates;
    std::size_t k = 0;
    while (uncolored.any()) {
      ++k;
      Bitset available = uncolored;
      for (std::size_t v = available.find_first(); v < n_; v = available.find_next(v + 1)) {
        uncolored.reset(v);
        available.subtract(adj_[v]);
        vertices.push_back(v);
        colors.push_back(k);
      }
    }
  }

  std::size_t n_;
  std::vector<Vertex> order_;
  std::vector<Bitset> adj_;
  std::vector<std::size_t> best_;
};

}  // namespace detail

// Exact maximum clique. Deterministic: identical adjacency gives identical
// members.
inline CliqueResult max_clique(const Graph& g) {
  if (g.size() == 0) return {};
  return detail::MaxCliqueSearch(g).run();
}

// Exact minimum vertex cover, as the complement of a maximum independent set.
inline std::vector<Vertex> min_vertex_cover(const Graph& g) {
  CliqueResult independent = max_clique(g.complement());
  std::vector<Vertex> cover;
  for (Vertex v = 0; v < g.size(); ++v)
    if (!std::binary_search(independent.members.begin(), independent.members.end(), v)) cover.push_back(v);
  return cover;
}

}  // namespace sdim
