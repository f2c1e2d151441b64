#include <gtest/gtest.h>

#include <fstream>
#include <random>
#include <sstream>

#include "sdim/graph_io.hpp"
#include "sdim/group_builders.hpp"
#include "sdim/power_graph.hpp"
#include "test_support.hpp"

using namespace sdim;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::size_t count_lines_containing(const std::string& text, const std::string& needle) {
  std::istringstream in(text);
  std::size_t c = 0;
  for (std::string line; std::getline(in, line);)
    if (line.find(needle) != std::string::npos) ++c;
  return c;
}

}  // namespace

TEST(Graph6, KnownStrings) {
  EXPECT_EQ(to_graph6(complete_graph(4)), "C~");
  EXPECT_EQ(to_graph6(Graph(0)), "?");
  // Z6: hand-packed upper triangle 111110 111011 111(000)
  EXPECT_EQ(to_graph6(power_graph(build_group("Z6"))), "E}zw");
  EXPECT_EQ(from_graph6(">>graph6<<E}zw\n"), power_graph(build_group("Z6")));
}

TEST(Graph6, RoundTripRandom) {
  std::mt19937_64 rng(3);
  for (std::size_t n : {1u, 2u, 5u, 7u, 13u, 40u, 62u}) {
    Graph g = sdim::testing::random_graph(n, 0.5, rng);
    EXPECT_EQ(from_graph6(to_graph6(g)), g);
  }
}

TEST(Graph6, Limits) {
  EXPECT_THROW(to_graph6(Graph(63)), Error);
  EXPECT_THROW(from_graph6("~?@?"), Error);  // long form
  EXPECT_THROW(from_graph6("E}z"), Error);   // truncated
  EXPECT_THROW(from_graph6(""), Error);
}

TEST(EdgeListJson, RoundTripAndFiles) {
  std::mt19937_64 rng(5);
  Graph g = sdim::testing::random_graph(15, 0.3, rng);
  EXPECT_EQ(parse_edge_list_json(graph_to_json(g).dump()), g);

  Graph k4 = parse_edge_list_json(slurp(std::string(SDIM_TEST_DATA_DIR) + "/k4.json"));
  EXPECT_EQ(k4, complete_graph(4));  // duplicate edge is harmless
  Graph p6 = parse_edge_list_json(slurp(std::string(SDIM_TEST_DATA_DIR) + "/p6.json"));
  EXPECT_EQ(p6, sdim::testing::path_graph(6));
}

TEST(EdgeListJson, Rejects) {
  for (const char* bad : {"", "{", "[]", R"({"n": 3})", R"({"n": 3, "edges": [[0, 3]]})",
                          R"({"n": 3, "edges": [[1, 1]]})", R"({"n": -1, "edges": []})",
                          R"({"n": 3, "edges": [[0]]})"}) {
    try {
      parse_edge_list_json(bad);
      ADD_FAILURE() << "accepted " << bad;
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::Parse) << bad;
    }
  }
}

TEST(Dot, KleinGroup) {
  Group g = build_group("E2^2");
  std::ostringstream os;
  DotOptions opt;
  opt.element_orders = element_orders(g);
  write_dot(os, power_graph(g), opt);
  const std::string dot = os.str();
  EXPECT_EQ(dot.rfind("graph G {", 0), 0u);
  EXPECT_EQ(count_lines_containing(dot, "[label="), 4u);
  EXPECT_EQ(count_lines_containing(dot, " -- "), 3u);
  EXPECT_NE(dot.find("(order 2)"), std::string::npos);
}
