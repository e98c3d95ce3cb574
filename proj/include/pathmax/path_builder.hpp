#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <type_traits>
#include <vector>

#include <Eigen/Core>
#include <fmt/format.h>

#include "pathmax/enumeration.hpp"
#include "pathmax/fa.hpp"
#include "pathmax/graph.hpp"
#include "pathmax/matrix.hpp"

namespace pathmax {

enum class TraceOp { SpanningTree, LeafContract, AttachEndpoint };

std::string_view to_string(TraceOp op) noexcept;
std::optional<TraceOp> parse_trace_op(std::string_view text) noexcept;

/**
 * One step of a path certificate. F values are taken with respect to the
 * weight matrix of the instance the step acts on (`order` vertices), so they
 * are comparable within a step but not across recursion levels.
 *
 *  spanning_tree   vertices = removed edges, flattened; F(input) -> F(tree)
 *  leaf_contract   vertices = {leaf, neighbor}; F(tree) -> row sum of leaf + F'(tree - leaf), always equal
 *  attach_endpoint vertices = {leaf, neighbor[, endpoint]}; F(T) -> F(chosen path)
 */
template <typename Scalar>
struct TraceStep {
  TraceOp op = TraceOp::SpanningTree;
  std::vector<int> vertices;
  int order = 0;
  Scalar f_before{};
  Scalar f_after{};
  std::optional<Scalar> f_alternative;  // F of the rejected endpoint attachment

  friend bool operator==(const TraceStep&, const TraceStep&) = default;
};

template <typename Scalar>
struct PathCertificate {
  std::vector<int> path;  // 1-based, first label below last
  Scalar f_input{};
  Scalar f_path{};
  bool strict = false;
  std::vector<TraceStep<Scalar>> trace;
};

template <typename Scalar>
struct LeafContraction {
  Matrix<Scalar> weights;     // order n - 1
  std::vector<int> new_index; // new_index[old - 1] = new 1-based index, 0 for the removed leaf
};

/**
 * Folds the leaf's weights into its neighbor and drops the leaf:
 * a'(k, j) = a(k, j) + a(leaf, j) for every j outside {leaf, k}; every other
 * entry, including the diagonal, is copied. Indices are 1-based.
 */
template <typename Derived>
LeafContraction<typename Derived::Scalar> contract_leaf(const Eigen::MatrixBase<Derived>& a, int leaf, int neighbor) {
  using Scalar = typename Derived::Scalar;
  const auto n = static_cast<int>(a.rows());
  if (a.rows() != a.cols()) throw MatrixError("contract_leaf: weights are not square");
  if (leaf < 1 || leaf > n || neighbor < 1 || neighbor > n || leaf == neighbor) {
    throw MatrixError(fmt::format("contract_leaf: bad leaf/neighbor pair ({}, {}) for order {}", leaf, neighbor, n));
  }
  Matrix<Scalar> folded = a;
  const int u = leaf - 1;
  const int k = neighbor - 1;
  for (int j = 0; j < n; ++j) {
    if (j == u || j == k) continue;
    folded(k, j) += a(u, j);
    folded(j, k) += a(j, u);
  }
  std::vector<int> keep;
  LeafContraction<Scalar> out;
  out.new_index.assign(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i) {
    if (i == u) continue;
    keep.push_back(i);
    out.new_index[static_cast<std::size_t>(i)] = static_cast<int>(keep.size());
  }
  out.weights = folded(keep, keep);
  return out;
}

namespace detail {

/// Subgraph induced on `labels` (ascending), relabeled to 1..m by position.
Graph induced_subgraph(const Graph& g, const std::vector<int>& labels);

template <typename Scalar>
Scalar path_value(const std::vector<int>& sequence, const std::vector<int>& labels, const Matrix<Scalar>& a) {
  std::vector<int> where(static_cast<std::size_t>(kMaxOrder) + 1, -1);
  for (std::size_t p = 0; p < labels.size(); ++p) where[static_cast<std::size_t>(labels[p])] = static_cast<int>(p);
  Scalar sum{0};
  for (std::size_t s = 0; s < sequence.size(); ++s) {
    for (std::size_t t = s + 1; t < sequence.size(); ++t) {
      sum += static_cast<Scalar>(t - s) *
             a(where[static_cast<std::size_t>(sequence[s])], where[static_cast<std::size_t>(sequence[t])]);
    }
  }
  return sum;
}

std::vector<int> without(const std::vector<int>& labels, int removed);

/**
 * Leaf-by-leaf reduction of a weighted tree to a path. The tree lives on the
 * full label set; vertices outside `labels` have already been peeled off and
 * are isolated. `a` is indexed by position within `labels`.
 */
template <typename Scalar>
class PathMaximizer {
public:
  struct Result {
    std::vector<int> path;
    Scalar value{};
    std::vector<TraceStep<Scalar>> trace;
  };

  Result solve(const Graph& tree, const std::vector<int>& labels, const Matrix<Scalar>& a) const {
    const auto m = static_cast<int>(labels.size());
    if (m <= 2) return {labels, path_value(labels, labels, a), {}};

    const Graph local = induced_subgraph(tree, labels);
    const Scalar f_tree = evaluate_F(all_pairs_distances(local), a);
    std::vector<int> leaves;
    for (int l : labels)
      if (tree.degree(l) == 1) leaves.push_back(l);

    Result best = attempt(tree, labels, a, f_tree, leaves.front());
    if (best.value > f_tree) return best;

    // The first leaf can stall on a 4-vertex star whose leaf has a zero weight
    // to the center; in N(m) some other leaf then gains strictly.
    if (!as_path_sequence(local) && classify_weights(a).in_N_n) {
      for (std::size_t i = 1; i < leaves.size(); ++i) {
        Result other = attempt(tree, labels, a, f_tree, leaves[i]);
        if (other.value > f_tree) return other;
      }
    }
    return best;
  }

private:
  Result attempt(const Graph& tree, const std::vector<int>& labels, const Matrix<Scalar>& a, Scalar f_tree,
                 int leaf) const {
    const auto m = static_cast<int>(labels.size());
    const int neighbor = tree.neighbors(leaf).front();
    const auto pos = [&](int label) {
      return static_cast<int>(std::lower_bound(labels.begin(), labels.end(), label) - labels.begin());
    };
    const int pu = pos(leaf);
    const int pk = pos(neighbor);

    const auto contraction = contract_leaf(a, pu + 1, pk + 1);
    Graph sub_tree = tree;
    sub_tree.remove_edge(leaf, neighbor);
    const std::vector<int> sub_labels = without(labels, leaf);

    Scalar row_sum{0};
    for (int j = 0; j < m; ++j)
      if (j != pu) row_sum += a(pu, j);
    const Scalar f_folded =
        row_sum + evaluate_F(all_pairs_distances(induced_subgraph(sub_tree, sub_labels)), contraction.weights);

    Result result;
    result.trace.push_back({TraceOp::LeafContract, {leaf, neighbor}, m, f_tree, f_folded, std::nullopt});

    Result sub = solve(sub_tree, sub_labels, contraction.weights);
    result.trace.insert(result.trace.end(), sub.trace.begin(), sub.trace.end());
    const std::vector<int>& inner = sub.path;

    // T: the sub-path with the leaf hung back on its old neighbor.
    Graph joined = path_graph_on(inner, labels);
    joined.add_edge(pk + 1, pu + 1);
    const Scalar f_joined = evaluate_F(all_pairs_distances(joined), a);

    std::vector<int> front = inner;
    front.insert(front.begin(), leaf);
    std::vector<int> back = inner;
    back.push_back(leaf);

    TraceStep<Scalar> step{TraceOp::AttachEndpoint, {leaf, neighbor}, m, f_joined, {}, std::nullopt};
    if (neighbor == inner.front()) {
      result.path = std::move(front);
      result.value = path_value(result.path, labels, a);
    } else if (neighbor == inner.back()) {
      result.path = std::move(back);
      result.value = path_value(result.path, labels, a);
    } else {
      const Scalar f_front = path_value(front, labels, a);
      const Scalar f_back = path_value(back, labels, a);
      // Ties go to the first endpoint.
      const bool take_back = f_back > f_front;
      step.vertices.push_back(take_back ? inner.back() : inner.front());
      step.f_alternative = take_back ? f_front : f_back;
      result.path = take_back ? std::move(back) : std::move(front);
      result.value = take_back ? f_back : f_front;
    }
    step.f_after = result.value;
    result.trace.push_back(std::move(step));
    return result;
  }

  static Graph path_graph_on(const std::vector<int>& sequence, const std::vector<int>& labels) {
    Graph g(static_cast<int>(labels.size()));
    const auto pos = [&](int label) {
      return static_cast<int>(std::lower_bound(labels.begin(), labels.end(), label) - labels.begin()) + 1;
    };
    for (std::size_t i = 1; i < sequence.size(); ++i) g.add_edge(pos(sequence[i - 1]), pos(sequence[i]));
    return g;
  }
};

std::vector<int> flatten(const std::vector<Edge>& edges);

std::vector<Edge> edge_difference(const Graph& g, const Graph& h);

/// Cycle edges of a unicyclic graph, ascending.
std::vector<Edge> cycle_edges(const Graph& unicyclic);

template <typename Derived>
void require_path_instance(const Graph& g, const Eigen::MatrixBase<Derived>& a) {
  using Scalar = typename Derived::Scalar;
  if (a.rows() != g.order() || a.cols() != g.order()) {
    throw MatrixError(fmt::format("weights of order {}x{} for a graph of order {}", a.rows(), a.cols(), g.order()));
  }
  require_symmetric(a, "weights");
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (i != j && a(i, j) < Scalar{0}) throw MatrixError("weights must be nonnegative off the diagonal");
  if constexpr (std::is_same_v<Scalar, std::int64_t>) require_weight_bounds(a);
  if (!is_connected(g)) throw DisconnectedGraph();
}

}  // namespace detail

/**
 * Builds a path P on V(g) with F_A(P) >= F_A(g), replaying the inductive
 * argument: reduce g to its BFS spanning tree, peel off the smallest-labeled
 * leaf u (neighbor k) while folding its weights into k, solve the smaller
 * instance, then hang u back on k if k is an end of the returned path, or on
 * whichever end gives the larger F otherwise.
 *
 * For weights in N(n) and a non-path g the result is strict. Two extra
 * moves make that hold for the deterministic leaf order: other leaves are
 * tried when the first one does not gain, and a non-tree g whose BFS tree is
 * already a path gets a second spanning tree from a unicyclic subgraph.
 */
template <typename Derived>
PathCertificate<typename Derived::Scalar> maximize_on_path(const Graph& g, const Eigen::MatrixBase<Derived>& weights) {
  using Scalar = typename Derived::Scalar;
  const Matrix<Scalar> a = weights;
  detail::require_path_instance(g, a);
  const int n = g.order();

  PathCertificate<Scalar> cert;
  cert.f_input = evaluate_F(all_pairs_distances(g), a);

  std::vector<int> labels(static_cast<std::size_t>(n));
  std::iota(labels.begin(), labels.end(), 1);
  const detail::PathMaximizer<Scalar> maximizer;

  auto run_from_tree = [&](const Graph& tree) {
    auto res = maximizer.solve(tree, labels, a);
    if (res.path.front() > res.path.back()) std::reverse(res.path.begin(), res.path.end());
    std::vector<TraceStep<Scalar>> trace;
    trace.push_back({TraceOp::SpanningTree, detail::flatten(detail::edge_difference(g, tree)), n, cert.f_input,
                     evaluate_F(all_pairs_distances(tree), a), std::nullopt});
    trace.insert(trace.end(), res.trace.begin(), res.trace.end());
    return std::pair{std::move(res), std::move(trace)};
  };

  const Graph bfs_tree = spanning_tree(g);
  auto [res, trace] = run_from_tree(bfs_tree);
  cert.path = std::move(res.path);
  cert.f_path = res.value;
  cert.trace = std::move(trace);
  cert.strict = cert.f_path > cert.f_input;

  if (!cert.strict && !is_tree(g) && classify_weights(a).in_N_n) {
    const auto extra = detail::edge_difference(g, bfs_tree);
    Graph unicyclic = bfs_tree;
    unicyclic.add_edge(extra.front().first, extra.front().second);
    const auto cycle = detail::cycle_edges(unicyclic);

    std::vector<Graph> candidates;
    if (static_cast<int>(cycle.size()) == n) {
      // Hamiltonian cycle: its spanning trees are the n paths C_n - e.
      for (const auto& [x, y] : cycle) {
        Graph t = unicyclic;
        t.remove_edge(x, y);
        candidates.push_back(t);
      }
    } else {
      // Cut the cycle away from a branching cycle vertex so the tree keeps degree >= 3 there.
      int hub = 0;
      for (const auto& [x, y] : cycle) {
        for (int v : {x, y})
          if (unicyclic.degree(v) >= 3 && (hub == 0 || v < hub)) hub = v;
      }
      for (const auto& [x, y] : cycle) {
        if (x == hub || y == hub) continue;
        Graph t = unicyclic;
        t.remove_edge(x, y);
        candidates.push_back(t);
        break;
      }
    }
    for (const auto& tree : candidates) {
      auto [alt, alt_trace] = run_from_tree(tree);
      if (alt.value > cert.f_input) {
        cert.path = std::move(alt.path);
        cert.f_path = alt.value;
        cert.trace = std::move(alt_trace);
        cert.strict = true;
        break;
      }
    }
  }
  return cert;
}

/// Independent re-verification of a certificate against (g, a). Returns a
/// list of problems; empty means valid. With `replay` the construction is
/// rerun and must reproduce path and trace exactly. Floating weights get `slack`.
template <typename Derived>
std::vector<std::string> check_certificate(const Graph& g, const Eigen::MatrixBase<Derived>& weights,
                                           const PathCertificate<typename Derived::Scalar>& cert, bool replay = true,
                                           double slack = 1e-12) {
  using Scalar = typename Derived::Scalar;
  const Matrix<Scalar> a = weights;
  std::vector<std::string> problems;
  const auto ge = [&](Scalar x, Scalar y) {
    if constexpr (std::is_integral_v<Scalar>) return x >= y;
    else return x >= y - static_cast<Scalar>(slack);
  };
  const auto eq = [&](Scalar x, Scalar y) {
    if constexpr (std::is_integral_v<Scalar>) return x == y;
    else return std::abs(x - y) <= static_cast<Scalar>(slack);
  };
  const int n = g.order();
  Graph path;
  try {
    path = path_graph(cert.path, n);
  } catch (const GraphError& e) {
    problems.emplace_back(std::string("path: ") + e.what());
    return problems;
  }
  const Scalar f_input = evaluate_F(all_pairs_distances(g), a);
  const Scalar f_path = evaluate_F(all_pairs_distances(path), a);
  if (!eq(f_input, cert.f_input)) problems.push_back(fmt::format("f_input {} recomputes to {}", cert.f_input, f_input));
  if (!eq(f_path, cert.f_path)) problems.push_back(fmt::format("f_path {} recomputes to {}", cert.f_path, f_path));
  if (!ge(f_path, f_input)) problems.push_back(fmt::format("path value {} below input value {}", f_path, f_input));
  if (cert.strict != (cert.f_path > cert.f_input)) problems.emplace_back("strict flag disagrees with the F values");
  if (cert.trace.empty() || cert.trace.front().op != TraceOp::SpanningTree) {
    problems.emplace_back("trace must open with a spanning_tree step");
  } else if (!eq(cert.trace.back().f_after, cert.f_path)) {
    problems.push_back(fmt::format("trace ends at {} instead of f_path {}", cert.trace.back().f_after, cert.f_path));
  }
  for (std::size_t i = 0; i < cert.trace.size(); ++i) {
    const auto& s = cert.trace[i];
    switch (s.op) {
      case TraceOp::SpanningTree:
      case TraceOp::AttachEndpoint:
        if (!ge(s.f_after, s.f_before)) problems.push_back(fmt::format("step {}: F decreased {} -> {}", i, s.f_before, s.f_after));
        if (s.f_alternative && !ge(s.f_after, *s.f_alternative)) {
          problems.push_back(fmt::format("step {}: chose {} over larger {}", i, s.f_after, *s.f_alternative));
        }
        break;
      case TraceOp::LeafContract:
        if (!eq(s.f_after, s.f_before)) {
          problems.push_back(fmt::format("step {}: leaf fold identity broken {} != {}", i, s.f_before, s.f_after));
        }
        break;
    }
  }
  if (!replay) return problems;
  try {
    const auto again = maximize_on_path(g, a);
    if (again.path != cert.path || again.trace != cert.trace) problems.emplace_back("replay produced a different path or trace");
  } catch (const std::exception& e) {
    problems.push_back(std::string("replay failed: ") + e.what());
  }
  return problems;
}

template <typename Scalar>
struct BestPath {
  Scalar value{};
  std::vector<int> sequence;   // lexicographically first maximizer with first < last
  std::uint64_t maximizers = 0;
};

/// Exact maximum of F_A over all n!/2 labeled paths, 2 <= n <= 9.
template <typename Derived>
BestPath<typename Derived::Scalar> brute_force_best_path(const Eigen::MatrixBase<Derived>& a) {
  using Scalar = typename Derived::Scalar;
  const auto n = static_cast<int>(a.rows());
  if (n < 2 || n > kMaxPathOrder) throw EnumerationRangeError(fmt::format("brute_force_best_path: order {} outside 2..9", n));
  BestPath<Scalar> best;
  bool first = true;
  LabeledPaths(n).for_each_sequence([&](const std::vector<int>& seq, std::uint64_t) {
    Scalar f{0};
    for (int s = 0; s < n; ++s)
      for (int t = s + 1; t < n; ++t) f += static_cast<Scalar>(t - s) * a(seq[static_cast<std::size_t>(s)] - 1, seq[static_cast<std::size_t>(t)] - 1);
    if (first || f > best.value) {
      best.value = f;
      best.sequence = seq;
      best.maximizers = 1;
      first = false;
    } else if (f == best.value) {
      ++best.maximizers;
    }
  });
  return best;
}

inline constexpr int kMaxOracleOrder = 6;

/// Every connected labeled graph of one order with its packed distance
/// vector (rows), ready for F over the whole universe as one mat-vec.
class ConnectedUniverse {
public:
  explicit ConnectedUniverse(int n);

  [[nodiscard]] int order() const noexcept { return n_; }
  [[nodiscard]] std::size_t size() const noexcept { return masks_.size(); }
  [[nodiscard]] std::uint64_t mask(std::size_t i) const noexcept { return masks_[i]; }
  [[nodiscard]] bool is_path(std::size_t i) const noexcept { return paths_[i]; }
  [[nodiscard]] bool is_tree(std::size_t i) const noexcept { return trees_[i]; }
  [[nodiscard]] Graph graph(std::size_t i) const { return ConnectedGraphs(n_).from_mask(masks_[i]); }
  [[nodiscard]] const IntMatrix& packed_distances() const noexcept { return distances_; }

  /// F_A of every graph, in universe order.
  template <typename Derived>
  Vector<typename Derived::Scalar> evaluate_all(const Eigen::MatrixBase<Derived>& a) const {
    using Scalar = typename Derived::Scalar;
    return distances_.cast<Scalar>() * pack_upper(a);
  }

private:
  int n_;
  std::vector<std::uint64_t> masks_;
  std::vector<bool> paths_;
  std::vector<bool> trees_;
  IntMatrix distances_;
};

template <typename Scalar>
struct BestConnected {
  Scalar value{};
  std::vector<std::size_t> indices;  // into the universe, ascending
  std::vector<std::string> graph6;
  std::size_t universe_size = 0;
};

/// Exact maximum of F_A over every connected labeled graph, 2 <= n <= 6, with all maximizers.
template <typename Derived>
BestConnected<typename Derived::Scalar> brute_force_best_connected(const Eigen::MatrixBase<Derived>& a,
                                                                   const ConnectedUniverse* universe = nullptr) {
  using Scalar = typename Derived::Scalar;
  const auto n = static_cast<int>(a.rows());
  if (n < 2 || n > kMaxOracleOrder) {
    throw EnumerationRangeError(fmt::format("brute_force_best_connected: order {} outside 2..6", n));
  }
  std::optional<ConnectedUniverse> local;
  if (universe == nullptr || universe->order() != n) universe = &local.emplace(n);
  const Vector<Scalar> values = universe->evaluate_all(a);
  BestConnected<Scalar> best;
  best.universe_size = universe->size();
  best.value = values.maxCoeff();
  for (Eigen::Index i = 0; i < values.size(); ++i) {
    if (values(i) == best.value) {
      best.indices.push_back(static_cast<std::size_t>(i));
      best.graph6.push_back(encode_graph6(universe->graph(static_cast<std::size_t>(i))));
    }
  }
  return best;
}

}  // namespace pathmax
