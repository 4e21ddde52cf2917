#include "core/graph.hpp"

#include <random>

#include "core/sop.hpp"
#include "doctest.h"

using namespace readk;

TEST_CASE("chain graphs have the staircase edge set") {
  Graph g3 = Graph::chain(3);
  CHECK(g3.vertex_count() == 6);
  CHECK(g3.edge_count() == 6);
  CHECK(g3.has_edge("x1", "y1"));
  CHECK(g3.has_edge("x1", "y3"));
  CHECK(g3.has_edge("x2", "y3"));
  CHECK_FALSE(g3.has_edge("x2", "y1"));
  CHECK_FALSE(g3.has_edge("x3", "y1"));

  Graph g1 = Graph::chain(1);
  CHECK(g1.edge_count() == 1);
  CHECK(g1.has_edge("x1", "y1"));

  Graph g2 = Graph::chain(2);
  CHECK(g2.edges() == std::vector<std::pair<std::string, std::string>>{
                          {"x1", "y1"}, {"x1", "y2"}, {"x2", "y2"}});

  CHECK_THROWS_AS(Graph::chain(0), std::invalid_argument);
}

TEST_CASE("chain graphs nest as induced subgraphs") {
  for (int n = 1; n <= 12; ++n) {
    Graph small = Graph::chain(n);
    Graph big = Graph::chain(n + 1);
    for (const auto& [a, b] : small.edges()) CHECK(big.has_edge(a, b));
    // no extra edges among the small vertex set
    for (const auto& [a, b] : big.edges())
      if (small.has_vertex(a) && small.has_vertex(b))
        CHECK(small.has_edge(a, b));
  }
}

TEST_CASE("chain graphs are bipartite and triangle-free") {
  for (int n = 1; n <= 32; ++n) {
    Graph g = Graph::chain(n);
    CHECK(g.bipartition().has_value());
    CHECK(is_triangle_free(g));
    CHECK(g.edge_count() == static_cast<std::size_t>(n) * (n + 1) / 2);
  }
}

TEST_CASE("duplicate_vertex copies the neighborhood without joining the twin") {
  Graph g = Graph::chain(2);
  Graph d = g.duplicate_vertex("x1", "x1b");
  CHECK(d.has_edge("x1b", "y1"));
  CHECK(d.has_edge("x1b", "y2"));
  CHECK_FALSE(d.has_edge("x1b", "x1"));
  CHECK(d.edge_count() == 5);

  Graph iso = Graph::from_parts({"a", "b"}, {});
  Graph iso2 = iso.duplicate_vertex("a", "a2");
  CHECK(iso2.vertex_count() == 3);
  CHECK(iso2.edge_count() == 0);

  Graph dy = Graph::chain(2).duplicate_vertex("y2", "y2b");
  CHECK(dy.has_edge("x1", "y2b"));
  CHECK(dy.has_edge("x2", "y2b"));
  CHECK_FALSE(dy.has_edge("y2", "y2b"));

  CHECK_THROWS_AS(g.duplicate_vertex("x1", "x2"), std::invalid_argument);
  CHECK_THROWS_AS(g.duplicate_vertex("nope", "q"), std::invalid_argument);
}

TEST_CASE("duplication preserves triangle-freeness of bipartite hosts") {
  std::mt19937 rng(808);
  std::uniform_int_distribution<int> size_pick(1, 4);
  std::uniform_int_distribution<int> coin(0, 1);
  for (int round = 0; round < 100; ++round) {
    int m = size_pick(rng), n = size_pick(rng);
    std::vector<std::string> vs;
    std::vector<std::pair<std::string, std::string>> es;
    for (int i = 1; i <= m; ++i) vs.push_back("u" + std::to_string(i));
    for (int j = 1; j <= n; ++j) vs.push_back("w" + std::to_string(j));
    for (int i = 1; i <= m; ++i)
      for (int j = 1; j <= n; ++j)
        if (coin(rng)) es.push_back({"u" + std::to_string(i), "w" + std::to_string(j)});
    Graph g = Graph::from_parts(vs, es);
    std::uniform_int_distribution<int> pick(0, static_cast<int>(g.vertex_count()) - 1);
    Graph d = g.duplicate_vertex(g.name_of(pick(rng)), "copy");
    CHECK(is_triangle_free(d));
  }
}

TEST_CASE("grid graphs count squares, not vertices") {
  Graph c4 = Graph::grid(1, 1);
  CHECK(c4.vertex_count() == 4);
  CHECK(c4.edge_count() == 4);

  Graph g21 = Graph::grid(2, 1);
  CHECK(g21.vertex_count() == 6);
  CHECK(g21.edge_count() == 7);

  for (int r = 1; r <= 4; ++r)
    for (int c = 1; c <= 4; ++c) CHECK(is_triangle_free(Graph::grid(r, c)));

  CHECK_THROWS_AS(Graph::grid(0, 3), std::invalid_argument);
}

TEST_CASE("complete bipartite graphs") {
  CHECK(Graph::complete_bipartite(2, 2).edge_count() == 4);
  CHECK(Graph::complete_bipartite(1, 1).edge_count() == 1);
  CHECK(Graph::complete_bipartite(2, 3).edge_count() == 6);
  CHECK_THROWS_AS(Graph::complete_bipartite(0, 2), std::invalid_argument);
}

TEST_CASE("is_triangle_free") {
  Graph tri = Graph::from_parts({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"c", "a"}});
  CHECK_FALSE(is_triangle_free(tri));
  CHECK(is_triangle_free(Graph::chain(5)));
  CHECK(is_triangle_free(Graph::grid(2, 2)));
}

TEST_CASE("is_cograph by induced-P4 scan") {
  CHECK(is_cograph(Graph::complete_bipartite(2, 2)));
  CHECK(is_cograph(Graph::complete_bipartite(3, 4)));
  CHECK_FALSE(is_cograph(Graph::chain(2)));  // the 4-vertex path itself
  CHECK_FALSE(is_cograph(Graph::grid(2, 2)));
  CHECK(is_cograph(Graph::from_parts({"a"}, {})));
}

TEST_CASE("read1_check matches the normal-plus-cograph characterization") {
  CHECK(read1_check(phi_of_graph(Graph::complete_bipartite(2, 2))));
  CHECK_FALSE(read1_check(phi_of_graph(Graph::chain(2))));
  CHECK_FALSE(read1_check(sop(parse_formula("a1*a2+a2*a3+a3*a1"))));
}

TEST_CASE("graph json declares vertices, edges and optional sides") {
  Graph g = Graph::chain(2);
  CHECK(g.has_side_tags());
  CHECK(g.side(g.index_of("x1")) == Graph::Side::X);
  CHECK(g.side(g.index_of("y2")) == Graph::Side::Y);

  Graph untagged = Graph::from_parts({"a", "b"}, {{"a", "b"}});
  CHECK_FALSE(untagged.has_side_tags());
  auto parts = untagged.bipartition();
  REQUIRE(parts.has_value());

  Graph odd = Graph::from_parts({"a", "b", "c"},
                                {{"a", "b"}, {"b", "c"}, {"c", "a"}});
  CHECK_FALSE(odd.bipartition().has_value());

  CHECK_THROWS_AS(Graph::from_parts({"a"}, {{"a", "a"}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph::from_parts({"a"}, {{"a", "b"}}), std::invalid_argument);
}
