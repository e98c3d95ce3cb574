#include <doctest.h>

#include <algorithm>

#include "oracles.hpp"
#include "pathmax/enumeration.hpp"
#include "pathmax/path_builder.hpp"

using namespace pathmax;

namespace {

bool is_permutation_of_labels(const std::vector<int>& path, int n) {
  std::vector<int> sorted = path;
  std::sort(sorted.begin(), sorted.end());
  for (int i = 0; i < n; ++i)
    if (sorted[static_cast<std::size_t>(i)] != i + 1) return false;
  return static_cast<int>(path.size()) == n;
}

}  // namespace

TEST_CASE("star with unit weights gains one") {
  const Graph star = decode_graph6("Cs");
  const auto cert = maximize_on_path(star, all_ones_weights(4));
  CHECK(cert.f_input == 9);
  CHECK(cert.f_path == 10);
  CHECK(cert.strict);
  CHECK(is_permutation_of_labels(cert.path, 4));
  CHECK(cert.path.front() < cert.path.back());
  CHECK(cert.trace.front().op == TraceOp::SpanningTree);
  CHECK(check_certificate(star, all_ones_weights(4), cert).empty());
}

TEST_CASE("a path input is returned unchanged in value") {
  const Graph p = decode_graph6("Ch");
  const auto cert = maximize_on_path(p, all_ones_weights(4));
  CHECK(cert.f_input == 10);
  CHECK(cert.f_path == 10);
  CHECK_FALSE(cert.strict);
  CHECK(check_certificate(p, all_ones_weights(4), cert).empty());
}

TEST_CASE("leaf contraction identity") {
  CounterRng rng(31, 0);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = static_cast<int>(rng.uniform(2, 10));
    std::vector<int> code(static_cast<std::size_t>(n - 2));
    for (int& v : code) v = static_cast<int>(rng.uniform(1, n));
    const Graph t = prufer_decode(code, n);
    const IntMatrix a = oracle::random_nonnegative(n, 30, rng);
    for (int leaf = 1; leaf <= n; ++leaf) {
      if (t.degree(leaf) != 1) continue;
      const int k = t.neighbors(leaf).front();
      const auto c = contract_leaf(a, leaf, k);
      Graph rest(n - 1);
      for (const auto& [u, v] : t.edges()) {
        if (u == leaf || v == leaf) continue;
        rest.add_edge(c.new_index[static_cast<std::size_t>(u - 1)], c.new_index[static_cast<std::size_t>(v - 1)]);
      }
      std::int64_t row = 0;
      for (int j = 0; j < n; ++j)
        if (j != leaf - 1) row += a(leaf - 1, j);
      const std::int64_t contracted = n == 2 ? 0 : evaluate_F(rest, c.weights);
      CHECK(evaluate_F(t, a) == row + contracted);
      CHECK(c.new_index[static_cast<std::size_t>(leaf - 1)] == 0);
    }
  }
}

TEST_CASE("brute-force path oracle") {
  IntMatrix a = IntMatrix::Zero(3, 3);
  a(0, 1) = a(1, 0) = 5;
  a(0, 2) = a(2, 0) = 1;
  a(1, 2) = a(2, 1) = 1;
  const auto best = brute_force_best_path(a);
  CHECK(best.value == 12);
  CHECK(best.sequence == std::vector<int>{1, 3, 2});
  CHECK(best.maximizers == 1);

  const auto ones = brute_force_best_path(all_ones_weights(4));
  CHECK(ones.value == 10);
  CHECK(ones.maximizers == 12);
}

TEST_CASE("connected oracle on the star tie instance") {
  IntMatrix a = IntMatrix::Zero(4, 4);
  a(0, 2) = a(2, 0) = 1;
  a(0, 3) = a(3, 0) = 1;
  a(2, 3) = a(3, 2) = 1;
  const auto best = brute_force_best_connected(a);
  CHECK(best.value == 6);
  CHECK(best.indices.size() == 7);
  CHECK(best.universe_size == 38);
  CHECK(std::find(best.graph6.begin(), best.graph6.end(), "Ci") != best.graph6.end());

  const auto ones = brute_force_best_connected(all_ones_weights(4));
  CHECK(ones.value == 10);
  CHECK(ones.indices.size() == 12);
}

TEST_CASE("connected oracle agrees with the permutation reference") {
  CounterRng rng(33, 0);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = static_cast<int>(rng.uniform(2, 6));
    const IntMatrix a = oracle::random_nonnegative(n, 9, rng);
    const auto conn = brute_force_best_connected(a);
    CHECK(conn.value == oracle::best_path_value(a));
    CHECK(brute_force_best_path(a).value == conn.value);
  }
}

TEST_CASE("certificates on random connected graphs") {
  CounterRng rng(34, 0);
  for (int trial = 0; trial < 400; ++trial) {
    const int n = static_cast<int>(rng.uniform(2, 9));
    const Graph g = oracle::random_connected(n, 0.35, rng);
    const IntMatrix a = trial % 2 == 0 ? oracle::random_nonnegative(n, 20, rng)
                                       : random_weights(n, WeightSampling::NClass, rng);
    const auto cert = maximize_on_path(g, a);
    CHECK(is_permutation_of_labels(cert.path, n));
    CHECK(cert.f_input == evaluate_F(g, a));
    CHECK(cert.f_path == evaluate_F(path_graph(cert.path, n), a));
    CHECK(cert.f_path >= cert.f_input);
    CHECK(check_certificate(g, a, cert).empty());
    if (classify_weights(a).in_N_n && !as_path_sequence(g)) CHECK(cert.strict);
    if (n <= 7) CHECK(cert.f_path <= oracle::best_path_value(a));
  }
}

TEST_CASE("strict on every non-path tree and graph at n = 4 with unit weights") {
  ConnectedGraphs(4).for_each([](const Graph& g, std::uint64_t) {
    const auto cert = maximize_on_path(g, all_ones_weights(4));
    CHECK(cert.f_path == 10);
    CHECK(cert.strict == !as_path_sequence(g).has_value());
  });
}

TEST_CASE("floating weights") {
  RealMatrix a(3, 3);
  a << 0, 0.5, 2.25, 0.5, 0, 1.0, 2.25, 1.0, 0;
  const Graph k3 = decode_graph6("Bw");
  const auto cert = maximize_on_path(k3, a);
  CHECK(cert.f_input == doctest::Approx(3.75));
  CHECK(cert.f_path > cert.f_input);
  CHECK(cert.f_path == doctest::Approx(evaluate_F(path_graph(cert.path, 3), a)));
  CHECK(check_certificate(k3, a, cert).empty());
}

TEST_CASE("tampered certificates are rejected") {
  const Graph star = decode_graph6("Cs");
  const IntMatrix a = all_ones_weights(4);
  const auto good = maximize_on_path(star, a);

  auto wrong_value = good;
  wrong_value.f_path += 1;
  CHECK_FALSE(check_certificate(star, a, wrong_value).empty());

  auto wrong_path = good;
  std::swap(wrong_path.path[0], wrong_path.path[1]);
  CHECK_FALSE(check_certificate(star, a, wrong_path).empty());

  auto wrong_flag = good;
  wrong_flag.strict = false;
  CHECK_FALSE(check_certificate(star, a, wrong_flag).empty());

  auto wrong_trace = good;
  wrong_trace.trace.back().f_after -= 1;
  CHECK_FALSE(check_certificate(star, a, wrong_trace).empty());
  CHECK_FALSE(check_certificate(star, a, wrong_trace, false).empty());
}

TEST_CASE("input validation") {
  CHECK_THROWS_AS(maximize_on_path(build_graph(3, {{1, 2}}), all_ones_weights(3)), DisconnectedGraph);
  IntMatrix neg = all_ones_weights(3);
  neg(0, 1) = neg(1, 0) = -1;
  CHECK_THROWS_AS(maximize_on_path(decode_graph6("Bg"), neg), MatrixError);
  IntMatrix asym = all_ones_weights(3);
  asym(0, 1) = 2;
  CHECK_THROWS_AS(maximize_on_path(decode_graph6("Bg"), asym), MatrixError);
  CHECK_THROWS_AS(maximize_on_path(decode_graph6("Bg"), all_ones_weights(4)), MatrixError);
  CHECK_THROWS_AS(brute_force_best_connected(all_ones_weights(7)), EnumerationRangeError);
}
