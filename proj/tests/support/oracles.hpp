#pragma once

// Independent reference implementations used only by the tests. They share no
// code with the library beyond the Graph container.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <vector>

#include <Eigen/Eigenvalues>

#include "pathmax/graph.hpp"
#include "pathmax/matrix.hpp"
#include "pathmax/rng.hpp"

namespace oracle {

using pathmax::Graph;

inline constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max() / 4;

/// Floyd-Warshall over the adjacency relation; kInf marks unreachable pairs.
inline Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic> floyd_warshall(const Graph& g) {
  const int n = g.order();
  Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic> d(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) d(i, j) = i == j ? 0 : (g.has_edge(i + 1, j + 1) ? 1 : kInf);
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) d(i, j) = std::min(d(i, j), d(i, k) + d(k, j));
  return d;
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[static_cast<std::size_t>(a)] = b;
    return true;
  }
};

/// Connected labeled graphs on n vertices, counted over all edge subsets with union-find.
inline std::uint64_t count_connected(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) pairs.emplace_back(i, j);
  std::uint64_t count = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
    UnionFind uf(n);
    int components = n;
    for (std::size_t k = 0; k < pairs.size(); ++k)
      if ((mask >> k) & 1U) components -= uf.unite(pairs[k].first, pairs[k].second) ? 1 : 0;
    if (components == 1) ++count;
  }
  return count;
}

/// Sum over unordered pairs, distances from Floyd-Warshall.
template <typename Scalar>
Scalar weighted_distance_sum(const Graph& g, const pathmax::Matrix<Scalar>& a) {
  const auto d = floyd_warshall(g);
  Scalar s{0};
  for (int i = 0; i < g.order(); ++i)
    for (int j = i + 1; j < g.order(); ++j) s += static_cast<Scalar>(d(i, j)) * a(i, j);
  return s;
}

/// Best F over all labeled paths by full permutation scan (both orientations).
template <typename Scalar>
Scalar best_path_value(const pathmax::Matrix<Scalar>& a) {
  const int n = static_cast<int>(a.rows());
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  Scalar best = std::numeric_limits<Scalar>::lowest();
  do {
    Scalar f{0};
    for (int s = 0; s < n; ++s)
      for (int t = s + 1; t < n; ++t) f += static_cast<Scalar>(t - s) * a(perm[static_cast<std::size_t>(s)], perm[static_cast<std::size_t>(t)]);
    best = std::max(best, f);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

inline Eigen::VectorXd eigenvalues(const Eigen::MatrixXd& m) {
  return Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(m, Eigen::EigenvaluesOnly).eigenvalues();
}

/// Random connected graph: random spanning tree plus extra edges with probability p.
inline Graph random_connected(int n, double p, pathmax::CounterRng& rng) {
  Graph g(n);
  for (int v = 2; v <= n; ++v) g.add_edge(v, static_cast<int>(rng.uniform(1, v - 1)));
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (!g.has_edge(i, j) && rng.unit() < p) g.add_edge(i, j);
  return g;
}

/// Random symmetric nonnegative integer weights with zero diagonal.
inline pathmax::IntMatrix random_nonnegative(int n, std::int64_t hi, pathmax::CounterRng& rng) {
  pathmax::IntMatrix a = pathmax::IntMatrix::Zero(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) a(i, j) = a(j, i) = rng.uniform(0, hi);
  return a;
}

}  // namespace oracle
