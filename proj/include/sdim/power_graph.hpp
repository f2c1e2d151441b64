#pragma once

#include "sdim/graph.hpp"
#include "sdim/group.hpp"

namespace sdim {

// x ~ y iff x != y and one is a power of the other.
inline Graph power_graph(const Group& g) {
  Graph graph(g.order());
  for (Element x = 0; x < g.order(); ++x) {
    for (Element y = g.op(x, x); y != x; y = g.op(y, x))
      if (!graph.adjacent(x, y)) graph.add_edge(x, y);
  }
  return graph;
}

}  // namespace sdim
