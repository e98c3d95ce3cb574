#include <doctest.h>

#include "oracles.hpp"
#include "pathmax/fa.hpp"
#include "pathmax/graph.hpp"

using namespace pathmax;

TEST_CASE("graph6 decodes known strings") {
  const Graph k4 = decode_graph6("C~");
  CHECK(k4.order() == 4);
  CHECK(k4.size() == 6);

  const Graph p4 = decode_graph6("Ch");
  CHECK(p4.edges() == std::vector<Edge>{{1, 2}, {2, 3}, {3, 4}});

  const Graph star1 = decode_graph6("Cs");
  CHECK(star1.edges() == std::vector<Edge>{{1, 2}, {1, 3}, {1, 4}});

  const Graph star2 = decode_graph6("Ci");
  CHECK(star2.edges() == std::vector<Edge>{{1, 2}, {2, 3}, {2, 4}});

  CHECK(decode_graph6(">>graph6<<C~") == k4);
  CHECK(decode_graph6("@").order() == 1);
}

TEST_CASE("graph6 rejects malformed input") {
  CHECK_THROWS_AS(decode_graph6(""), GraphError);
  CHECK_THROWS_AS(decode_graph6("C"), GraphError);
  CHECK_THROWS_AS(decode_graph6("C~~"), GraphError);
  CHECK_THROWS_AS(decode_graph6("C "), GraphError);
  CHECK_THROWS_AS(decode_graph6("A`"), GraphError);  // padding bit set
}

TEST_CASE("graph6 round trip on random graphs") {
  CounterRng rng(7, 0);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = static_cast<int>(rng.uniform(1, 40));
    Graph g(n);
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j)
        if (rng.unit() < 0.3) g.add_edge(i, j);
    CHECK(decode_graph6(encode_graph6(g)) == g);
  }
}

TEST_CASE("graph construction validates vertices") {
  Graph g(3);
  CHECK_THROWS_AS(g.add_edge(1, 1), GraphError);
  CHECK_THROWS_AS(g.add_edge(0, 2), GraphError);
  CHECK_THROWS_AS(g.add_edge(1, 4), GraphError);
  CHECK_THROWS_AS(Graph(kMaxOrder + 1), GraphError);
  g.add_edge(2, 1);
  g.add_edge(1, 2);
  CHECK(g.size() == 1);
  CHECK(build_graph(3, {{1, 2}, {2, 1}, {2, 3}}).size() == 2);
}

TEST_CASE("distances on small graphs") {
  const auto c4 = build_graph(4, {{1, 2}, {2, 3}, {3, 4}, {4, 1}});
  const auto d = all_pairs_distances(c4);
  CHECK(d(0, 1) == 1);
  CHECK(d(1, 2) == 1);
  CHECK(d(0, 2) == 2);
  CHECK(d(1, 3) == 2);

  const auto p3 = decode_graph6("Bg");
  CHECK(p3.edges() == std::vector<Edge>{{1, 2}, {2, 3}});
  CHECK(all_pairs_distances(p3)(0, 2) == 2);

  CHECK_THROWS_AS(all_pairs_distances(build_graph(3, {{1, 2}})), DisconnectedGraph);
}

TEST_CASE("BFS distances agree with Floyd-Warshall") {
  CounterRng rng(11, 0);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = static_cast<int>(rng.uniform(1, 24));
    const Graph g = oracle::random_connected(n, rng.unit() * 0.4, rng);
    CHECK(all_pairs_distances(g) == oracle::floyd_warshall(g));
  }
}

TEST_CASE("spanning tree keeps connectivity and only raises distances") {
  CounterRng rng(12, 0);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = static_cast<int>(rng.uniform(2, 20));
    const Graph g = oracle::random_connected(n, 0.3, rng);
    const Graph t = spanning_tree(g);
    CHECK(is_tree(t));
    CHECK(t.size() == n - 1);
    for (const auto& [u, v] : t.edges()) CHECK(g.has_edge(u, v));
    const auto dg = all_pairs_distances(g);
    const auto dt = all_pairs_distances(t);
    CHECK((dt.array() >= dg.array()).all());
  }
}

TEST_CASE("Wiener index of the path is (n^3 - n) / 6") {
  for (int n = 2; n <= 12; ++n) {
    std::vector<int> seq(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) seq[static_cast<std::size_t>(i)] = i + 1;
    const Graph p = path_graph(seq, n);
    CHECK(evaluate_F(p, all_ones_weights(n)) == (n * n * n - n) / 6);
  }
}

TEST_CASE("path recognition") {
  CHECK(as_path_sequence(decode_graph6("Ch")) == std::vector<int>{1, 2, 3, 4});
  CHECK(as_path_sequence(build_graph(4, {{3, 1}, {1, 4}, {4, 2}})) == std::vector<int>{2, 4, 1, 3});
  CHECK_FALSE(as_path_sequence(decode_graph6("Cs")));
  CHECK_FALSE(as_path_sequence(decode_graph6("C~")));
  CHECK(as_path_sequence(Graph(1)) == std::vector<int>{1});
  CHECK_THROWS_AS(path_graph({1, 1, 2}, 3), GraphError);
}

TEST_CASE("edge list round trip and errors") {
  const Graph g = parse_edge_list("4 3\n1 2\n2 3\n2 4\n");
  CHECK(g == decode_graph6("Ci"));
  CHECK(parse_edge_list(format_edge_list(g)) == g);
  CHECK_THROWS_AS(parse_edge_list("3"), GraphError);
  CHECK_THROWS_AS(parse_edge_list("3 2\n1 2\n"), GraphError);
  CHECK_THROWS_AS(parse_edge_list("3 1\n1 2\n3 3\n"), GraphError);
  CHECK_THROWS_AS(parse_edge_list("3 1\n1 1\n"), GraphError);
}
