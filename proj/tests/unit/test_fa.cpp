#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "oracles.hpp"
#include "pathmax/fa.hpp"

using namespace pathmax;

namespace {

Graph relabel(const Graph& g, const std::vector<int>& perm) {
  Graph h(g.order());
  for (const auto& [u, v] : g.edges()) h.add_edge(perm[static_cast<std::size_t>(u - 1)], perm[static_cast<std::size_t>(v - 1)]);
  return h;
}

IntMatrix relabel(const IntMatrix& a, const std::vector<int>& perm) {
  IntMatrix b(a.rows(), a.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      b(perm[static_cast<std::size_t>(i)] - 1, perm[static_cast<std::size_t>(j)] - 1) = a(i, j);
  return b;
}

}  // namespace

TEST_CASE("F on small graphs with unit weights") {
  CHECK(evaluate_F(decode_graph6("Bg"), all_ones_weights(3)) == 4);
  CHECK(evaluate_F(decode_graph6("Cs"), all_ones_weights(4)) == 9);
  CHECK(evaluate_F(decode_graph6("Ch"), all_ones_weights(4)) == 10);
  CHECK(evaluate_F(decode_graph6("C~"), all_ones_weights(4)) == 6);
}

TEST_CASE("F reads only the strict upper triangle") {
  IntMatrix a = all_ones_weights(3);
  a.diagonal().setConstant(1000);
  CHECK(evaluate_F(decode_graph6("Bg"), a) == 4);
  const RealMatrix r = RealMatrix::Constant(3, 3, 0.5);
  CHECK(evaluate_F(decode_graph6("Bg"), r) == doctest::Approx(2.0));
  CHECK_THROWS_AS(evaluate_F(decode_graph6("Bg"), all_ones_weights(4)), MatrixError);
}

TEST_CASE("F matches the Floyd-Warshall reference") {
  CounterRng rng(21, 0);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = static_cast<int>(rng.uniform(2, 16));
    const Graph g = oracle::random_connected(n, 0.25, rng);
    const IntMatrix a = oracle::random_nonnegative(n, 50, rng);
    CHECK(evaluate_F(g, a) == oracle::weighted_distance_sum(g, a));
  }
}

TEST_CASE("F is invariant under relabeling graph and weights together") {
  CounterRng rng(22, 0);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = static_cast<int>(rng.uniform(2, 12));
    const Graph g = oracle::random_connected(n, 0.3, rng);
    const IntMatrix a = oracle::random_nonnegative(n, 20, rng);
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 1);
    for (int k = n - 1; k > 0; --k) std::swap(perm[static_cast<std::size_t>(k)], perm[static_cast<std::size_t>(rng.uniform(0, k))]);
    CHECK(evaluate_F(relabel(g, perm), relabel(a, perm)) == evaluate_F(g, a));
  }
}

TEST_CASE("deleting an edge never lowers F for nonnegative weights") {
  CounterRng rng(23, 0);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = static_cast<int>(rng.uniform(3, 12));
    const Graph g = oracle::random_connected(n, 0.4, rng);
    const IntMatrix a = oracle::random_nonnegative(n, 20, rng);
    for (const auto& [u, v] : g.edges()) {
      Graph h = g;
      h.remove_edge(u, v);
      if (is_connected(h)) CHECK(evaluate_F(h, a) >= evaluate_F(g, a));
    }
  }
}

TEST_CASE("weight classes") {
  IntMatrix a = all_ones_weights(4);
  CHECK(classify_weights(a) == WeightClass{true, true, true});
  a(0, 1) = a(1, 0) = 0;
  CHECK(classify_weights(a) == WeightClass{true, true, false});
  a(0, 2) = a(2, 0) = 0;  // row 1 now has two zeros
  CHECK(classify_weights(a) == WeightClass{true, false, false});
  a(0, 2) = a(2, 0) = -1;
  CHECK(classify_weights(a) == WeightClass{false, false, false});

  IntMatrix d = all_ones_weights(3);
  d.diagonal().setConstant(-7);  // the diagonal never counts
  CHECK(classify_weights(d) == WeightClass{true, true, true});

  RealMatrix r = RealMatrix::Constant(3, 3, 1.0);
  r(0, 1) = r(1, 0) = 1e-17;
  CHECK(classify_weights(r) == WeightClass{true, true, false});
}

TEST_CASE("rank-one weights") {
  const Eigen::Vector3d x(1.0, 2.0, -1.0);
  const RealMatrix p = rank_one_weights(x, RankOneKind::Product);
  CHECK(p(0, 1) == 2.0);
  CHECK(p(1, 2) == -2.0);
  CHECK(p(0, 0) == 0.0);
  CHECK(rank_one_weights(x, RankOneKind::SquareSum)(0, 1) == 9.0);
  CHECK(rank_one_weights(x, RankOneKind::SquareDiff)(1, 2) == 9.0);
  CHECK(rank_one_weights(x, RankOneKind::SquareDiff).diagonal().isZero());
}

TEST_CASE("packed upper triangle follows graph6 pair order") {
  IntMatrix a = IntMatrix::Zero(4, 4);
  int k = 1;
  for (int j = 1; j < 4; ++j)
    for (int i = 0; i < j; ++i) a(i, j) = a(j, i) = k++;
  const auto packed = pack_upper(a);
  CHECK(packed.size() == 6);
  for (Eigen::Index i = 0; i < 6; ++i) CHECK(packed(i) == i + 1);
}

TEST_CASE("random weight samplers land in their classes") {
  for (std::uint64_t t = 0; t < 200; ++t) {
    CounterRng rng(5, t);
    const int n = static_cast<int>(2 + t % 8);
    CHECK(classify_weights(random_weights(n, WeightSampling::Positive, rng)).positive_offdiag);
    CHECK(classify_weights(random_weights(n, WeightSampling::NClass, rng)).in_N_n);
    const IntMatrix nn = random_weights(n, WeightSampling::Nonnegative, rng);
    CHECK(classify_weights(nn).nonnegative);
    CHECK(nn.maxCoeff() <= kSampleWeightMax);
    CHECK(is_symmetric(nn));
    CHECK(nn.diagonal().isZero());
  }
}

TEST_CASE("samplers are pure functions of seed and stream") {
  CounterRng a(99, 3);
  CounterRng b(99, 3);
  CounterRng c(99, 4);
  const IntMatrix x = random_weights(6, WeightSampling::Nonnegative, a);
  CHECK(x == random_weights(6, WeightSampling::Nonnegative, b));
  CHECK(x != random_weights(6, WeightSampling::Nonnegative, c));
  CHECK(parse_weight_sampling("N_n") == WeightSampling::NClass);
  CHECK(parse_weight_sampling(to_string(WeightSampling::Nonnegative)) == WeightSampling::Nonnegative);
  CHECK_FALSE(parse_weight_sampling("bogus"));
}

TEST_CASE("planted zeros respect the row budget") {
  for (std::uint64_t t = 0; t < 200; ++t) {
    CounterRng rng(6, t);
    const int n = static_cast<int>(3 + t % 4);
    const int budget = static_cast<int>(t % 3);
    const IntMatrix a = planted_zero_weights(n, budget, 3, std::nullopt, rng);
    CHECK(a.maxCoeff() <= 3);
    for (int i = 0; i < n; ++i) {
      int zeros = 0;
      for (int j = 0; j < n; ++j) zeros += (i != j && a(i, j) == 0) ? 1 : 0;
      CHECK(zeros <= budget);
    }
  }
  CounterRng rng(6, 1000);
  const IntMatrix z = planted_zero_weights(4, 0, 1, 1, rng);
  CHECK(z.row(1).isZero());
  CHECK(z.col(1).isZero());
  CHECK(z(0, 2) == 1);
  CHECK(z(2, 3) == 1);
}
