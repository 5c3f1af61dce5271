#include <doctest.h>

#include <random>

#include "support/generators.hpp"
#include "thickness/constructions.hpp"
#include "thickness/graph.hpp"

using namespace thickness;

namespace {

VertexId P(const std::string& name) { return VertexId::plain(name); }

Graph cycle_graph(int k) {
  std::vector<VertexId> verts;
  for (int i = 0; i < k; ++i) verts.push_back(P("c" + std::to_string(i + 1)));
  std::vector<VertexPair> edges;
  for (int i = 0; i < k; ++i) edges.push_back({verts[i], verts[(i + 1) % k]});
  return Graph(verts, edges);
}

}  // namespace

TEST_SUITE("graph") {
  TEST_CASE("complete graph sizes") {
    CHECK(complete_graph(1).vertex_count() == 1);
    CHECK(complete_graph(1).edge_count() == 0);
    CHECK(complete_graph(5).vertex_count() == 5);
    CHECK(complete_graph(5).edge_count() == 10);
    CHECK(complete_graph(9).edge_count() == 36);
    Graph k5 = complete_graph(5);
    for (int i = 0; i < 5; ++i)
      for (int j = i + 1; j < 5; ++j) CHECK(k5.has_edge(k5.vertex(i), k5.vertex(j)));
    CHECK_THROWS_AS(complete_graph(0), std::invalid_argument);
  }

  TEST_CASE("path graph sizes and adjacency") {
    CHECK(path_graph(1).edge_count() == 0);
    CHECK(path_graph(2).edge_count() == 1);
    CHECK(path_graph(5).edge_count() == 4);
    Graph p4 = path_graph(4);
    CHECK(p4.has_edge(P("p1"), P("p2")));
    CHECK(p4.has_edge(P("p2"), P("p3")));
    CHECK(p4.has_edge(P("p3"), P("p4")));
    CHECK_FALSE(p4.has_edge(P("p1"), P("p3")));
    CHECK_THROWS_AS(path_graph(0), std::invalid_argument);
  }

  TEST_CASE("product of K_2 and P_2 is a 4-cycle") {
    Graph g = cartesian_product(complete_graph(2), path_graph(2));
    CHECK(g.vertex_count() == 4);
    CHECK(g.edge_count() == 4);
    for (int i = 0; i < 4; ++i) CHECK(g.degree(i) == 2);
    CHECK(isomorphic(g, cycle_graph(4)));
  }

  TEST_CASE("product sizes") {
    Graph a = product_graph(5, 2);
    CHECK(a.vertex_count() == 10);
    CHECK(a.edge_count() == 25);
    Graph b = product_graph(7, 3);
    CHECK(b.vertex_count() == 21);
    CHECK(b.edge_count() == 77);
  }

  TEST_CASE("product count law on random factors") {
    std::mt19937 rng(20260817);
    for (int round = 0; round < 12; ++round) {
      Graph g = testsupport::random_nonempty_graph(3 + round % 4, 0.5, rng, "a");
      Graph h = testsupport::random_nonempty_graph(2 + round % 3, 0.6, rng, "b");
      Graph prod = cartesian_product(g, h);
      CHECK(prod.vertex_count() == g.vertex_count() * h.vertex_count());
      CHECK(prod.edge_count() ==
            g.vertex_count() * h.edge_count() + h.vertex_count() * g.edge_count());
    }
  }

  TEST_CASE("path products carry layer labels") {
    Graph g = product_graph(3, 2);
    int layer_count = 0;
    for (const auto& v : g.vertices()) {
      REQUIRE(v.is_layer());
      CHECK(v.as_layer().layer >= 1);
      CHECK(v.as_layer().layer <= 2);
      CHECK(v.as_layer().slot >= 1);
      CHECK(v.as_layer().slot <= 3);
      ++layer_count;
    }
    CHECK(layer_count == 6);
    // rungs connect equal slots across consecutive layers
    for (int q = 1; q <= 3; ++q) CHECK(g.has_edge(VertexId::layer(1, q), VertexId::layer(2, q)));
    // products with non-path factors fall back to plain composite labels
    Graph t = cartesian_product(complete_graph(2), cycle_graph(3));
    for (const auto& v : t.vertices()) CHECK(v.is_plain());
  }

  TEST_CASE("subdividing the edge of K_2 gives a 3-path") {
    Graph g = subdivide_edge(complete_graph(2), P("v1"), P("v2"), P("s"));
    CHECK(isomorphic(g, path_graph(3)));
  }

  TEST_CASE("subdividing a triangle edge gives a chordless 4-cycle") {
    Graph g = subdivide_edge(complete_graph(3), P("v1"), P("v2"), P("s"));
    CHECK(g.vertex_count() == 4);
    CHECK(g.edge_count() == 4);
    for (int i = 0; i < 4; ++i) CHECK(g.degree(i) == 2);
    CHECK(isomorphic(g, cycle_graph(4)));
  }

  TEST_CASE("subdividing every rung of a 2-layer product") {
    Graph g = product_graph(5, 2);
    for (int q = 1; q <= 5; ++q)
      g = subdivide_edge(g, VertexId::layer(1, q), VertexId::layer(2, q),
                         P("s" + std::to_string(q)));
    CHECK(g.vertex_count() == 15);
    CHECK(g.edge_count() == 30);

    SUBCASE("merging the inserted vertices rebuilds two complete blocks at a hub") {
      std::vector<VertexId> group;
      for (int q = 1; q <= 5; ++q) group.push_back(P("s" + std::to_string(q)));
      Graph merged = merge_vertices(g, group, VertexId::hub(1));
      CHECK(merged.vertex_count() == 11);
      CHECK(merged.edge_count() == 30);
      Graph other = complete_graph(6);
      std::map<VertexId, VertexId> rename;
      for (int i = 1; i <= 6; ++i)
        rename[P("v" + std::to_string(i))] = P("u" + std::to_string(i));
      Graph expected = vertex_amalgamation(complete_graph(6), P("v6"), relabeled(other, rename),
                                           P("u6"), P("w"));
      CHECK(isomorphic(merged, expected));
    }
  }

  TEST_CASE("subdivide rejects bad input") {
    Graph k3 = complete_graph(3);
    CHECK_THROWS_AS(subdivide_edge(k3, P("v1"), P("v9"), P("s")), std::invalid_argument);
    CHECK_THROWS_AS(subdivide_edge(k3, P("v1"), P("v2"), P("v3")), std::invalid_argument);
  }

  TEST_CASE("merging a singleton relabels") {
    Graph g = merge_vertices(complete_graph(3), {P("v1")}, P("x"));
    CHECK(g.has_vertex(P("x")));
    CHECK_FALSE(g.has_vertex(P("v1")));
    CHECK(isomorphic(g, complete_graph(3)));
  }

  TEST_CASE("merging the endpoints of a 3-path gives an edge") {
    Graph g = merge_vertices(path_graph(3), {P("p1"), P("p3")}, P("x"));
    CHECK(isomorphic(g, complete_graph(2)));
  }

  TEST_CASE("merge rejects adjacent group members") {
    CHECK_THROWS_AS(merge_vertices(complete_graph(3), {P("v1"), P("v2")}, P("x")),
                    std::invalid_argument);
  }

  TEST_CASE("amalgamation shapes") {
    Graph other = complete_graph(6);
    std::map<VertexId, VertexId> rename;
    for (int i = 1; i <= 6; ++i) rename[P("v" + std::to_string(i))] = P("u" + std::to_string(i));
    Graph two_blocks = vertex_amalgamation(complete_graph(6), P("v6"), relabeled(other, rename),
                                           P("u6"), P("w"));
    CHECK(two_blocks.vertex_count() == 11);
    CHECK(two_blocks.edge_count() == 30);

    Graph p3 = vertex_amalgamation(complete_graph(2), P("v2"),
                                   relabeled(complete_graph(2), {{P("v1"), P("u1")},
                                                                 {P("v2"), P("u2")}}),
                                   P("u1"), P("mid"));
    CHECK(isomorphic(p3, path_graph(3)));

    Graph same = vertex_amalgamation(Graph({P("z")}, {}), P("z"), complete_graph(4), P("v1"),
                                     P("v1"));
    CHECK(same == complete_graph(4));

    CHECK_THROWS_AS(vertex_amalgamation(complete_graph(3), P("v1"), complete_graph(3), P("v1"),
                                        P("w")),
                    std::invalid_argument);

    SUBCASE("deleting the shared vertex splits the blocks") {
      Graph split = delete_vertex(two_blocks, P("w"));
      CHECK(split.vertex_count() == 10);
      CHECK(split.edge_count() == 20);
      std::vector<VertexId> left, right;
      for (int i = 1; i <= 5; ++i) {
        left.push_back(P("v" + std::to_string(i)));
        right.push_back(P("u" + std::to_string(i)));
      }
      CHECK(isomorphic(split.induced_subgraph(left), complete_graph(5)));
      CHECK(isomorphic(split.induced_subgraph(right), complete_graph(5)));
    }
  }

  TEST_CASE("amalgamation is associative at distinct hubs") {
    auto block = [](const std::string& prefix) {
      std::map<VertexId, VertexId> rename;
      for (int i = 1; i <= 4; ++i)
        rename[P("v" + std::to_string(i))] = P(prefix + std::to_string(i));
      return relabeled(complete_graph(4), rename);
    };
    Graph a = block("a"), b = block("b"), c = block("c");
    Graph left = vertex_amalgamation(vertex_amalgamation(a, P("a4"), b, P("b1"), P("h1")),
                                     P("b4"), c, P("c1"), P("h2"));
    Graph right = vertex_amalgamation(a, P("a4"),
                                      vertex_amalgamation(b, P("b4"), c, P("c1"), P("h2")),
                                      P("b1"), P("h1"));
    CHECK(left == right);
    CHECK(isomorphic(left, right));
  }

  TEST_CASE("deletion") {
    CHECK(delete_edge(complete_graph(9), P("v1"), P("v2")).edge_count() == 35);
    Graph with_isolated({P("a"), P("b"), P("c")}, {{P("a"), P("b")}});
    Graph after = delete_vertex(with_isolated, P("c"));
    CHECK(after.edge_count() == 1);
    CHECK(after.has_edge(P("a"), P("b")));
    CHECK_THROWS_AS(delete_edge(complete_graph(3), P("v1"), P("v9")), std::invalid_argument);
    CHECK_THROWS_AS(delete_vertex(complete_graph(3), P("v9")), std::invalid_argument);
  }

  TEST_CASE("subdivision then smoothing restores hosts of minimum degree 3") {
    std::vector<Graph> hosts = {complete_graph(4), complete_graph(5),
                                delete_edge(complete_graph(6), P("v1"), P("v2")),
                                product_graph(3, 3)};
    for (const Graph& host : hosts) {
      auto [a, b] = host.edge_label(0);
      Graph divided = subdivide_edge(host, a, b, P("fresh"));
      CHECK(isomorphic(smoothed(divided), host));
    }
  }

  TEST_CASE("operations never mutate their input") {
    Graph g = complete_graph(5);
    Graph copy = g;
    (void)subdivide_edge(g, P("v1"), P("v2"), P("s"));
    (void)delete_edge(g, P("v1"), P("v2"));
    (void)merge_vertices(g, {P("v1")}, P("x"));
    (void)cartesian_product(g, path_graph(3));
    CHECK(g == copy);
    CHECK(complete_graph(7) == complete_graph(7));
    CHECK(product_graph(4, 3) == product_graph(4, 3));
  }

  TEST_CASE("graph constructor validation") {
    CHECK_THROWS_AS(Graph({P("a"), P("a")}, {}), std::invalid_argument);
    CHECK_THROWS_AS(Graph({P("a")}, {{P("a"), P("a")}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph({P("a")}, {{P("a"), P("b")}}), std::invalid_argument);
    Graph dedup({P("a"), P("b")}, {{P("a"), P("b")}, {P("b"), P("a")}});
    CHECK(dedup.edge_count() == 1);
  }

  TEST_CASE("relabeling must stay injective") {
    Graph g = complete_graph(3);
    CHECK_THROWS_AS(relabeled(g, {{P("v1"), P("v2")}}), std::invalid_argument);
    Graph ok = relabeled(g, {{P("v1"), P("z")}});
    CHECK(ok.has_vertex(P("z")));
    CHECK(isomorphic(ok, complete_graph(3)));
  }

  TEST_CASE("isomorphism checker") {
    CHECK(isomorphic(complete_graph(4), relabeled(complete_graph(4), {{P("v1"), P("z")}})));
    CHECK_FALSE(isomorphic(complete_graph(4), cycle_graph(4)));
    Graph star({P("c"), P("l1"), P("l2"), P("l3")},
               {{P("c"), P("l1")}, {P("c"), P("l2")}, {P("c"), P("l3")}});
    CHECK_FALSE(isomorphic(path_graph(4), star));
    CHECK_THROWS_AS(isomorphic(complete_graph(13), complete_graph(13)), std::invalid_argument);
  }

  TEST_CASE("vertex label ordering and text form") {
    CHECK(VertexId::layer(1, 2).str() == "v:1:2");
    CHECK(VertexId::hub(3).str() == "w:3");
    CHECK(P("abc").str() == "abc");
    CHECK(VertexId::layer(1, 1) < VertexId::hub(1));
    CHECK(VertexId::hub(1) < P("a"));
    CHECK(VertexId::layer(1, 2) < VertexId::layer(2, 1));
  }
}
