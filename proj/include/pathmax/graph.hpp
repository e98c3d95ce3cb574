#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <Eigen/Core>

namespace pathmax {

/// Largest supported order. Keeps graph6 in its single-byte size form and
/// lets every adjacency row fit in one 64-bit mask.
inline constexpr int kMaxOrder = 62;

class GraphError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Raised by every operation that requires a connected graph.
class DisconnectedGraph : public GraphError {
public:
  DisconnectedGraph() : GraphError("graph is not connected") {}
};

/// Unordered vertex pair, 1-based.
using Edge = std::pair<int, int>;

/// Pairwise graph distances; d(i, j) is 0-based internally.
using DistanceMatrix = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;

/**
 * Labeled simple undirected graph on vertices 1..n.
 *
 * Adjacency is stored as one bit mask per vertex (bit j of row i set iff
 * {i+1, j+1} is an edge). Accessors taking `int v` use 1-based labels;
 * `row()` is the raw 0-based mask.
 */
class Graph {
public:
  Graph() = default;
  explicit Graph(int n);

  [[nodiscard]] int order() const noexcept { return n_; }
  [[nodiscard]] int size() const noexcept;  // edge count

  [[nodiscard]] bool has_edge(int u, int v) const;
  [[nodiscard]] int degree(int v) const;
  [[nodiscard]] std::uint64_t row(int index0) const noexcept { return adj_[static_cast<std::size_t>(index0)]; }

  void add_edge(int u, int v);
  void remove_edge(int u, int v);

  /// Edges with u < v in lexicographic order.
  [[nodiscard]] std::vector<Edge> edges() const;

  /// Ascending neighbor labels of v.
  [[nodiscard]] std::vector<int> neighbors(int v) const;

  friend bool operator==(const Graph& a, const Graph& b) noexcept {
    return a.n_ == b.n_ && a.adj_ == b.adj_;
  }

  /// Builds straight from 0-based rows; used by enumerators on hot paths.
  static Graph from_rows(int n, const std::array<std::uint64_t, kMaxOrder>& rows) noexcept;

private:
  void check_vertex(int v) const;

  int n_ = 0;
  std::array<std::uint64_t, kMaxOrder> adj_{};
};

/// Validates the pairs (1 <= i, j <= n, i != j) and collapses duplicates.
Graph build_graph(int n, const std::vector<Edge>& edges);

bool is_connected(const Graph& g) noexcept;
bool is_tree(const Graph& g) noexcept;

/// One BFS per vertex. Throws DisconnectedGraph on disconnected input.
DistanceMatrix all_pairs_distances(const Graph& g);

/// BFS tree rooted at vertex 1, neighbors scanned in ascending label order.
Graph spanning_tree(const Graph& g);

/// Vertex order of g if g is a path, starting at the lower-labeled endpoint.
std::optional<std::vector<int>> as_path_sequence(const Graph& g);

/// Path graph visiting `sequence` in order.
Graph path_graph(const std::vector<int>& sequence, int n);

/// graph6 codec; decode tolerates a leading ">>graph6<<" header.
Graph decode_graph6(std::string_view text);
std::string encode_graph6(const Graph& g);

/// Edge-list text: first line "n m", then m lines "i j" (1-based).
Graph parse_edge_list(std::string_view text);
std::string format_edge_list(const Graph& g);

}  // namespace pathmax
