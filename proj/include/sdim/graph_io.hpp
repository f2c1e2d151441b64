#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "sdim/error.hpp"
#include "sdim/graph.hpp"

namespace sdim {

// {"n": <int>, "edges": [[u, v], ...]}, 0-indexed; duplicates are ignored.
inline Graph graph_from_json(const nlohmann::json& j) {
  try {
    if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
      throw Error(ErrorKind::Parse, "edge list needs \"n\" and \"edges\"");
    const auto n = j.at("n").get<long long>();
    if (n < 0) throw Error(ErrorKind::Parse, "negative vertex count");
    Graph g(static_cast<std::size_t>(n));
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw Error(ErrorKind::Parse, "edge must be a [u, v] pair");
      auto u = e[0].get<long long>(), v = e[1].get<long long>();
      if (u < 0 || v < 0 || u >= n || v >= n) throw Error(ErrorKind::Parse, "edge endpoint out of range");
      g.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }
    return g;
  } catch (const nlohmann::json::exception& ex) {
    throw Error(ErrorKind::Parse, std::string("edge list: ") + ex.what());
  }
}

inline Graph parse_edge_list_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& ex) {
    throw Error(ErrorKind::Parse, std::string("edge list: ") + ex.what());
  }
  return graph_from_json(j);
}

inline nlohmann::json graph_to_json(const Graph& g) {
  nlohmann::json edges = nlohmann::json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  return {{"n", g.size()}, {"edges", std::move(edges)}};
}

inline constexpr std::size_t kGraph6MaxVertices = 62;

// graph6 short form: one byte n + 63, then the upper triangle in column order
// (x(0,1), x(0,2), x(1,2), x(0,3), ...) packed six bits per byte, big-endian.
inline std::string to_graph6(const Graph& g) {
  if (g.size() > kGraph6MaxVertices)
    throw Error(ErrorKind::Parse, "graph6 output supports at most 62 vertices, got " + std::to_string(g.size()));
  std::string out(1, static_cast<char>(g.size() + 63));
  unsigned acc = 0;
  int bits = 0;
  for (Vertex j = 1; j < g.size(); ++j)
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1U : 0U);
      if (++bits == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        bits = 0;
      }
    }
  if (bits > 0) out.push_back(static_cast<char>((acc << (6 - bits)) + 63));
  return out;
}

inline Graph from_graph6(std::string_view text) {
  if (text.starts_with(">>graph6<<")) text.remove_prefix(10);
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' ')) text.remove_suffix(1);
  if (text.empty()) throw Error(ErrorKind::Parse, "empty graph6 string");
  const int first = static_cast<unsigned char>(text[0]) - 63;
  if (first < 0 || first > 63) throw Error(ErrorKind::Parse, "invalid graph6 size byte");
  if (first == 63) throw Error(ErrorKind::Parse, "graph6 long form (more than 62 vertices) is not supported");
  const auto n = static_cast<std::size_t>(first);
  const std::size_t nbits = n * (n > 0 ? n - 1 : 0) / 2;
  const std::size_t nbytes = (nbits + 5) / 6;
  if (text.size() != 1 + nbytes) throw Error(ErrorKind::Parse, "graph6 length does not match vertex count");
  Graph g(n);
  std::size_t bit = 0;
  for (Vertex j = 1; j < n; ++j)
    for (Vertex i = 0; i < j; ++i, ++bit) {
      const int byte = static_cast<unsigned char>(text[1 + bit / 6]) - 63;
      if (byte < 0 || byte > 63) throw Error(ErrorKind::Parse, "invalid graph6 data byte");
      if ((byte >> (5 - bit % 6)) & 1) g.add_edge(i, j);
    }
  return g;
}

struct DotOptions {
  std::string name = "G";
  std::optional<std::vector<std::uint64_t>> element_orders;  // power graphs: label with |x|
  std::optional<std::vector<std::size_t>> class_sizes;       // reduced graphs: label with class size
  std::optional<std::vector<std::size_t>> vertex_names;      // display index per vertex
};

inline void write_dot(std::ostream& os, const Graph& g, const DotOptions& options = {}) {
  os << "graph " << options.name << " {\n";
  for (Vertex v = 0; v < g.size(); ++v) {
    const std::size_t shown = options.vertex_names ? (*options.vertex_names)[v] : v;
    os << "  " << v << " [label=\"" << shown;
    if (options.element_orders) os << " (order " << (*options.element_orders)[shown] << ")";
    if (options.class_sizes) os << " [class size " << (*options.class_sizes)[v] << "]";
    os << "\"];\n";
  }
  for (auto [u, v] : g.edges()) os << "  " << u << " -- " << v << ";\n";
  os << "}\n";
}

}  // namespace sdim
