#include "pathmax/enumeration.hpp"

#include <sstream>
#include <string>

#include <fmt/format.h>

namespace pathmax {

namespace {

void require_range(int n, int lo, int hi, std::string_view what) {
  if (n < lo || n > hi) throw EnumerationRangeError(fmt::format("{}: order {} outside {}..{}", what, n, lo, hi));
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

}  // namespace

Graph prufer_decode(std::span<const int> seq, int n) {
  if (n < 2) throw GraphError("prufer_decode: order must be at least 2");
  if (static_cast<int>(seq.size()) != n - 2) {
    throw GraphError(fmt::format("prufer_decode: sequence length {} for order {}", seq.size(), n));
  }
  std::vector<int> degree(static_cast<std::size_t>(n) + 1, 1);
  for (int v : seq) {
    if (v < 1 || v > n) throw GraphError(fmt::format("prufer_decode: label {} outside 1..{}", v, n));
    ++degree[static_cast<std::size_t>(v)];
  }
  Graph tree(n);
  for (int v : seq) {
    int leaf = 1;
    while (degree[static_cast<std::size_t>(leaf)] != 1) ++leaf;
    tree.add_edge(leaf, v);
    --degree[static_cast<std::size_t>(leaf)];
    --degree[static_cast<std::size_t>(v)];
  }
  int u = 0;
  for (int v = 1; v <= n; ++v) {
    if (degree[static_cast<std::size_t>(v)] != 1) continue;
    if (u == 0) {
      u = v;
    } else {
      tree.add_edge(u, v);
      break;
    }
  }
  return tree;
}

std::vector<int> prufer_encode(const Graph& tree) {
  if (!is_tree(tree)) throw GraphError("prufer_encode: input is not a tree");
  const int n = tree.order();
  Graph t = tree;
  std::vector<int> seq;
  seq.reserve(static_cast<std::size_t>(std::max(0, n - 2)));
  for (int step = 0; step < n - 2; ++step) {
    int leaf = 1;
    while (t.degree(leaf) != 1) ++leaf;
    const int parent = t.neighbors(leaf).front();
    seq.push_back(parent);
    t.remove_edge(leaf, parent);
  }
  return seq;
}

std::uint64_t cayley_count(int n) {
  if (n < 1) return 0;
  if (n <= 2) return 1;
  std::uint64_t r = 1;
  for (int i = 0; i < n - 2; ++i) r *= static_cast<std::uint64_t>(n);
  return r;
}

std::uint64_t labeled_path_count(int n) {
  if (n < 1) return 0;
  if (n == 1) return 1;
  std::uint64_t f = 1;
  for (int i = 3; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

std::uint64_t connected_labeled_count(int n) {
  if (n < 1) return 0;
  if (n > 11) throw EnumerationRangeError("connected_labeled_count: order above 11 overflows");
  // c(n) = 2^C(n,2) - sum_{k=1}^{n-1} C(n-1, k-1) c(k) 2^C(n-k,2)
  std::vector<std::uint64_t> c(static_cast<std::size_t>(n) + 1, 0);
  auto all = [](int m) { return std::uint64_t{1} << (m * (m - 1) / 2); };
  for (int m = 1; m <= n; ++m) {
    std::uint64_t disconnected = 0;
    for (int k = 1; k < m; ++k) disconnected += binomial(m - 1, k - 1) * c[static_cast<std::size_t>(k)] * all(m - k);
    c[static_cast<std::size_t>(m)] = all(m) - disconnected;
  }
  return c[static_cast<std::size_t>(n)];
}

LabeledTrees::LabeledTrees(int n) : n_(n), count_(0) {
  require_range(n, 2, kMaxTreeOrder, "labeled_trees");
  count_ = cayley_count(n);
}

Graph LabeledTrees::at(std::uint64_t index) const {
  std::vector<int> seq(static_cast<std::size_t>(n_ - 2));
  for (auto it = seq.rbegin(); it != seq.rend(); ++it) {
    *it = static_cast<int>(index % static_cast<std::uint64_t>(n_)) + 1;
    index /= static_cast<std::uint64_t>(n_);
  }
  return prufer_decode(seq, n_);
}

ConnectedGraphs::ConnectedGraphs(int n) : n_(n) {
  require_range(n, 2, kMaxConnectedOrder, "connected_labeled_graphs");
  incident_.assign(static_cast<std::size_t>(n), 0);
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      const std::uint64_t b = std::uint64_t{1} << pairs_.size();
      incident_[static_cast<std::size_t>(i)] |= b;
      incident_[static_cast<std::size_t>(j)] |= b;
      pairs_.emplace_back(i, j);
    }
  }
}

bool ConnectedGraphs::touches_all(std::uint64_t mask) const noexcept {
  for (auto inc : incident_)
    if ((mask & inc) == 0) return false;
  return true;
}

Graph ConnectedGraphs::from_mask(std::uint64_t mask) const noexcept {
  std::array<std::uint64_t, kMaxOrder> rows{};
  for (std::size_t k = 0; k < pairs_.size(); ++k) {
    if ((mask >> k) & 1) {
      const auto [i, j] = pairs_[k];
      rows[static_cast<std::size_t>(i)] |= std::uint64_t{1} << j;
      rows[static_cast<std::size_t>(j)] |= std::uint64_t{1} << i;
    }
  }
  return Graph::from_rows(n_, rows);
}

LabeledPaths::LabeledPaths(int n) : n_(n), factorial_(1) {
  require_range(n, 2, kMaxPathOrder, "labeled_paths");
  for (int i = 2; i <= n; ++i) factorial_ *= static_cast<std::uint64_t>(i);
}

std::vector<int> LabeledPaths::unrank(std::uint64_t rank) const {
  std::vector<int> pool(static_cast<std::size_t>(n_));
  std::iota(pool.begin(), pool.end(), 1);
  std::vector<int> perm;
  perm.reserve(pool.size());
  std::uint64_t block = factorial_;
  for (int remaining = n_; remaining > 0; --remaining) {
    block /= static_cast<std::uint64_t>(remaining);
    const auto pick = static_cast<std::size_t>(rank / block);
    rank %= block;
    perm.push_back(pool[pick]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(pick));
  }
  return perm;
}

std::vector<Graph> read_graph6_lines(std::string_view text) {
  std::vector<Graph> out;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    out.push_back(decode_graph6(line));
  }
  return out;
}

}  // namespace pathmax
