#include "pathmax/graph.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <sstream>

namespace pathmax {

namespace {

constexpr std::uint64_t bit(int index0) noexcept { return std::uint64_t{1} << index0; }

constexpr std::uint64_t all_vertices(int n) noexcept {
  return n >= 64 ? ~std::uint64_t{0} : bit(n) - 1;
}

// Bit mask of vertices reachable from `source0`.
std::uint64_t reach(const Graph& g, int source0) noexcept {
  std::uint64_t seen = bit(source0);
  std::uint64_t frontier = seen;
  while (frontier != 0) {
    std::uint64_t next = 0;
    for (std::uint64_t f = frontier; f != 0; f &= f - 1) {
      next |= g.row(std::countr_zero(f));
    }
    frontier = next & ~seen;
    seen |= frontier;
  }
  return seen;
}

}  // namespace

Graph::Graph(int n) : n_(n) {
  if (n < 1 || n > kMaxOrder) {
    throw GraphError("order " + std::to_string(n) + " outside 1.." + std::to_string(kMaxOrder));
  }
}

int Graph::size() const noexcept {
  int twice = 0;
  for (int i = 0; i < n_; ++i) twice += std::popcount(adj_[static_cast<std::size_t>(i)]);
  return twice / 2;
}

void Graph::check_vertex(int v) const {
  if (v < 1 || v > n_) {
    throw GraphError("vertex " + std::to_string(v) + " outside 1.." + std::to_string(n_));
  }
}

bool Graph::has_edge(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  return (adj_[static_cast<std::size_t>(u - 1)] & bit(v - 1)) != 0;
}

int Graph::degree(int v) const {
  check_vertex(v);
  return std::popcount(adj_[static_cast<std::size_t>(v - 1)]);
}

void Graph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw GraphError("self-loop at vertex " + std::to_string(u));
  adj_[static_cast<std::size_t>(u - 1)] |= bit(v - 1);
  adj_[static_cast<std::size_t>(v - 1)] |= bit(u - 1);
}

void Graph::remove_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  adj_[static_cast<std::size_t>(u - 1)] &= ~bit(v - 1);
  adj_[static_cast<std::size_t>(v - 1)] &= ~bit(u - 1);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (int i = 0; i < n_; ++i) {
    for (std::uint64_t r = adj_[static_cast<std::size_t>(i)] & ~all_vertices(i + 1); r != 0; r &= r - 1) {
      out.emplace_back(i + 1, std::countr_zero(r) + 1);
    }
  }
  return out;
}

std::vector<int> Graph::neighbors(int v) const {
  check_vertex(v);
  std::vector<int> out;
  for (std::uint64_t r = adj_[static_cast<std::size_t>(v - 1)]; r != 0; r &= r - 1) {
    out.push_back(std::countr_zero(r) + 1);
  }
  return out;
}

Graph Graph::from_rows(int n, const std::array<std::uint64_t, kMaxOrder>& rows) noexcept {
  Graph g;
  g.n_ = n;
  g.adj_ = rows;
  return g;
}

Graph build_graph(int n, const std::vector<Edge>& edges) {
  Graph g(n);
  for (const auto& [u, v] : edges) g.add_edge(u, v);
  return g;
}

bool is_connected(const Graph& g) noexcept {
  const int n = g.order();
  if (n == 0) return false;
  return reach(g, 0) == all_vertices(n);
}

bool is_tree(const Graph& g) noexcept {
  return g.size() == g.order() - 1 && is_connected(g);
}

DistanceMatrix all_pairs_distances(const Graph& g) {
  const int n = g.order();
  DistanceMatrix d = DistanceMatrix::Zero(n, n);
  const std::uint64_t everyone = all_vertices(n);
  for (int s = 0; s < n; ++s) {
    std::uint64_t seen = bit(s);
    std::uint64_t frontier = seen;
    std::int64_t level = 0;
    while (frontier != 0) {
      ++level;
      std::uint64_t next = 0;
      for (std::uint64_t f = frontier; f != 0; f &= f - 1) next |= g.row(std::countr_zero(f));
      frontier = next & ~seen;
      seen |= frontier;
      for (std::uint64_t f = frontier; f != 0; f &= f - 1) d(s, std::countr_zero(f)) = level;
    }
    if (seen != everyone) throw DisconnectedGraph();
  }
  return d;
}

Graph spanning_tree(const Graph& g) {
  const int n = g.order();
  if (!is_connected(g)) throw DisconnectedGraph();
  Graph tree(n);
  std::vector<int> queue{0};
  queue.reserve(static_cast<std::size_t>(n));
  std::uint64_t seen = bit(0);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const int v = queue[head];
    for (std::uint64_t r = g.row(v) & ~seen; r != 0; r &= r - 1) {
      const int w = std::countr_zero(r);
      seen |= bit(w);
      tree.add_edge(v + 1, w + 1);
      queue.push_back(w);
    }
  }
  return tree;
}

std::optional<std::vector<int>> as_path_sequence(const Graph& g) {
  const int n = g.order();
  if (n == 0 || !is_connected(g)) return std::nullopt;
  if (n == 1) return std::vector<int>{1};
  if (g.size() != n - 1) return std::nullopt;
  int start = 0;
  for (int v = 1; v <= n; ++v) {
    const int deg = g.degree(v);
    if (deg > 2) return std::nullopt;
    if (deg == 1 && start == 0) start = v;
  }
  std::vector<int> seq{start};
  seq.reserve(static_cast<std::size_t>(n));
  int prev = 0;
  int cur = start;
  while (static_cast<int>(seq.size()) < n) {
    int next = 0;
    for (int w : g.neighbors(cur)) {
      if (w != prev) {
        next = w;
        break;
      }
    }
    prev = cur;
    cur = next;
    seq.push_back(cur);
  }
  return seq;
}

Graph path_graph(const std::vector<int>& sequence, int n) {
  if (static_cast<int>(sequence.size()) != n) throw GraphError("path sequence length differs from order");
  Graph g(n);
  std::uint64_t used = 0;
  for (int v : sequence) {
    if (v < 1 || v > n || (used & bit(v - 1)) != 0) throw GraphError("path sequence is not a permutation of 1..n");
    used |= bit(v - 1);
  }
  for (std::size_t i = 1; i < sequence.size(); ++i) g.add_edge(sequence[i - 1], sequence[i]);
  return g;
}

Graph decode_graph6(std::string_view text) {
  constexpr std::string_view header = ">>graph6<<";
  if (text.starts_with(header)) text.remove_prefix(header.size());
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.empty()) throw GraphError("graph6: empty input");
  for (char c : text) {
    if (c < 63 || c > 126) throw GraphError("graph6: character outside 63..126");
  }
  const int n = text.front() - 63;
  if (n < 1 || n > kMaxOrder) throw GraphError("graph6: unsupported order " + std::to_string(n));
  const std::size_t bits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2;
  const std::size_t chars = (bits + 5) / 6;
  if (text.size() != chars + 1) throw GraphError("graph6: malformed length for order " + std::to_string(n));

  Graph g(n);
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int byte = text[1 + k / 6] - 63;
      if ((byte >> (5 - static_cast<int>(k % 6))) & 1) g.add_edge(i + 1, j + 1);
    }
  }
  // Padding bits must be zero.
  if (k % 6 != 0) {
    const int byte = text.back() - 63;
    if ((byte & ((1 << (6 - k % 6)) - 1)) != 0) throw GraphError("graph6: nonzero padding bits");
  }
  return g;
}

std::string encode_graph6(const Graph& g) {
  const int n = g.order();
  std::string out(1, static_cast<char>(n + 63));
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | ((g.row(i) >> j) & 1 ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled != 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
  return out;
}

Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  int n = 0;
  int m = 0;
  if (!(in >> n >> m)) throw GraphError("edge list: expected header \"n m\"");
  if (m < 0) throw GraphError("edge list: negative edge count");
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (int e = 0; e < m; ++e) {
    int u = 0;
    int v = 0;
    if (!(in >> u >> v)) throw GraphError("edge list: expected " + std::to_string(m) + " edges, got " + std::to_string(e));
    edges.emplace_back(u, v);
  }
  std::string trailing;
  if (in >> trailing) throw GraphError("edge list: trailing data after " + std::to_string(m) + " edges");
  return build_graph(n, edges);
}

std::string format_edge_list(const Graph& g) {
  std::ostringstream out;
  const auto es = g.edges();
  out << g.order() << ' ' << es.size() << '\n';
  for (const auto& [u, v] : es) out << u << ' ' << v << '\n';
  return out.str();
}

}  // namespace pathmax
