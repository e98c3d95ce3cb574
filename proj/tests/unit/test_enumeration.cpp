#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "pathmax/enumeration.hpp"

using namespace pathmax;

TEST_CASE("closed-form counts") {
  CHECK(cayley_count(2) == 1);
  CHECK(cayley_count(8) == 262144);
  CHECK(labeled_path_count(2) == 1);
  CHECK(labeled_path_count(8) == 20160);
  const std::uint64_t connected[] = {1, 1, 4, 38, 728, 26704, 1866256};
  for (int n = 1; n <= 7; ++n) CHECK(connected_labeled_count(n) == connected[n - 1]);
}

TEST_CASE("Prufer round trip") {
  for (int n = 2; n <= 6; ++n) {
    const LabeledTrees trees(n);
    std::set<std::string> seen;
    trees.for_each([&](const Graph& t, std::uint64_t i) {
      CHECK(is_tree(t));
      CHECK(prufer_decode(prufer_encode(t), n) == t);
      CHECK(trees.at(i) == t);
      seen.insert(encode_graph6(t));
    });
    CHECK(seen.size() == trees.count());
  }
  const std::vector<int> code{4, 4, 4, 5};
  const Graph t = prufer_decode(code, 6);
  CHECK(t.edges() == std::vector<Edge>{{1, 4}, {2, 4}, {3, 4}, {4, 5}, {5, 6}});
  CHECK_THROWS_AS(prufer_decode(std::vector<int>{7}, 3), GraphError);
  CHECK_THROWS_AS(prufer_encode(decode_graph6("C~")), GraphError);
}

TEST_CASE("labeled tree enumeration is complete for n <= 8") {
  for (int n = 2; n <= 8; ++n) {
    const LabeledTrees trees(n);
    std::uint64_t count = 0;
    std::set<std::string> seen;
    trees.for_each([&](const Graph& t, std::uint64_t) {
      ++count;
      if (n <= 7) seen.insert(encode_graph6(t));
    });
    CHECK(count == cayley_count(n));
    if (n <= 7) CHECK(seen.size() == count);
  }
}

TEST_CASE("labeled path enumeration is complete for n <= 8") {
  for (int n = 2; n <= 8; ++n) {
    const LabeledPaths paths(n);
    std::uint64_t count = 0;
    std::set<std::string> seen;
    paths.for_each([&](const Graph& p, std::uint64_t) {
      ++count;
      CHECK(as_path_sequence(p).has_value());
      if (n <= 7) seen.insert(encode_graph6(p));
    });
    CHECK(count == paths.count());
    CHECK(count == labeled_path_count(n));
    if (n <= 7) CHECK(seen.size() == count);
  }
  CHECK(LabeledPaths(4).unrank(0) == std::vector<int>{1, 2, 3, 4});
  CHECK(LabeledPaths(4).unrank(23) == std::vector<int>{4, 3, 2, 1});
}

TEST_CASE("connected graph enumeration matches union-find counts") {
  for (int n = 2; n <= 6; ++n) {
    std::uint64_t count = 0;
    ConnectedGraphs(n).for_each([&](const Graph& g, std::uint64_t) {
      ++count;
      CHECK(is_connected(g));
    });
    CHECK(count == oracle::count_connected(n));
    CHECK(count == connected_labeled_count(n));
  }
  CHECK_THROWS_AS(ConnectedGraphs(1), EnumerationRangeError);
  CHECK_THROWS_AS(ConnectedGraphs(8), EnumerationRangeError);
}

TEST_CASE("split ranges cover the enumeration exactly once") {
  const ConnectedGraphs all(5);
  std::uint64_t whole = 0;
  all.for_each([&](const Graph&, std::uint64_t) { ++whole; });
  std::uint64_t pieces = 0;
  for (std::uint64_t begin = 0; begin < all.mask_count(); begin += 97)
    all.for_each([&](const Graph&, std::uint64_t) { ++pieces; }, begin, begin + 97);
  CHECK(whole == 728);
  CHECK(pieces == whole);
}

TEST_CASE("graph6 line files") {
  const auto graphs = read_graph6_lines("# comment\nC~\n\nCh\r\n>>graph6<<Cs\n");
  REQUIRE(graphs.size() == 3);
  CHECK(graphs[1] == decode_graph6("Ch"));
  CHECK(graphs[2] == decode_graph6("Cs"));
  CHECK_THROWS_AS(read_graph6_lines("C~\n!!\n"), GraphError);
}
