#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string_view>
#include <utility>
#include <vector>

#include "pathmax/graph.hpp"

namespace pathmax {

class EnumerationRangeError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Standard Prüfer decode: each entry adopts the smallest remaining leaf.
/// `seq` holds n - 2 labels in 1..n.
Graph prufer_decode(std::span<const int> seq, int n);
std::vector<int> prufer_encode(const Graph& tree);

/// Closed forms used to audit sweep sizes.
std::uint64_t cayley_count(int n);                 // n^(n-2)
std::uint64_t labeled_path_count(int n);           // n!/2 for n >= 2
std::uint64_t connected_labeled_count(int n);      // OEIS A001187 by the exponential recurrence

inline constexpr int kMaxTreeOrder = 9;
inline constexpr int kMaxConnectedOrder = 7;
inline constexpr int kMaxPathOrder = 9;

/**
 * All n^(n-2) labeled trees, indexed by their Prüfer sequence read as a
 * base-n number. Any index sub-range can be walked independently.
 */
class LabeledTrees {
public:
  explicit LabeledTrees(int n);

  [[nodiscard]] int order() const noexcept { return n_; }
  [[nodiscard]] std::uint64_t count() const noexcept { return count_; }
  [[nodiscard]] Graph at(std::uint64_t index) const;

  template <typename Fn>
  void for_each(Fn&& fn, std::uint64_t begin = 0, std::uint64_t end = ~std::uint64_t{0}) const {
    end = std::min(end, count_);
    for (std::uint64_t i = begin; i < end; ++i) fn(at(i), i);
  }

private:
  int n_;
  std::uint64_t count_;
};

/**
 * Connected labeled graphs as edge subsets. Bit k of a mask is the k-th pair
 * in graph6 order (1,2), (1,3), (2,3), (1,4), ...; masks that fail the
 * connectivity test are skipped. The mask space is the splittable range.
 */
class ConnectedGraphs {
public:
  explicit ConnectedGraphs(int n);

  [[nodiscard]] int order() const noexcept { return n_; }
  [[nodiscard]] std::uint64_t mask_count() const noexcept { return std::uint64_t{1} << pairs_.size(); }
  [[nodiscard]] Graph from_mask(std::uint64_t mask) const noexcept;

  template <typename Fn>
  void for_each(Fn&& fn, std::uint64_t begin = 0, std::uint64_t end = ~std::uint64_t{0}) const {
    end = std::min(end, mask_count());
    for (std::uint64_t mask = begin; mask < end; ++mask) {
      // Every vertex needs an edge; cheap rejection before the BFS.
      if (!touches_all(mask)) continue;
      Graph g = from_mask(mask);
      if (is_connected(g)) fn(g, mask);
    }
  }

private:
  [[nodiscard]] bool touches_all(std::uint64_t mask) const noexcept;

  int n_;
  std::vector<std::pair<int, int>> pairs_;  // 0-based
  std::vector<std::uint64_t> incident_;     // per vertex, mask of incident pairs
};

/**
 * The n!/2 labeled paths: permutations in lexicographic rank order, keeping
 * those whose first label is below the last (one per reversal pair).
 */
class LabeledPaths {
public:
  explicit LabeledPaths(int n);

  [[nodiscard]] int order() const noexcept { return n_; }
  [[nodiscard]] std::uint64_t count() const noexcept { return labeled_path_count(n_); }
  [[nodiscard]] std::uint64_t rank_count() const noexcept { return factorial_; }

  /// Permutation of 1..n with the given lexicographic rank.
  [[nodiscard]] std::vector<int> unrank(std::uint64_t rank) const;

  /// Calls fn(sequence, rank) for canonical orientations with rank in [begin, end).
  template <typename Fn>
  void for_each_sequence(Fn&& fn, std::uint64_t begin = 0, std::uint64_t end = ~std::uint64_t{0}) const {
    end = std::min(end, factorial_);
    if (begin >= end) return;
    std::vector<int> perm = unrank(begin);
    for (std::uint64_t r = begin; r < end; ++r) {
      if (perm.front() < perm.back()) fn(std::as_const(perm), r);
      std::next_permutation(perm.begin(), perm.end());
    }
  }

  template <typename Fn>
  void for_each(Fn&& fn, std::uint64_t begin = 0, std::uint64_t end = ~std::uint64_t{0}) const {
    for_each_sequence([&](const std::vector<int>& seq, std::uint64_t r) { fn(path_graph(seq, n_), r); }, begin, end);
  }

private:
  int n_;
  std::uint64_t factorial_;
};

/// One graph6 string per line; blank lines and '#'-comments skipped.
std::vector<Graph> read_graph6_lines(std::string_view text);

}  // namespace pathmax
