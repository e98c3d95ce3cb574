#include "pathmax/fa.hpp"

namespace pathmax {

namespace {

std::vector<int> shuffled(int n, CounterRng& rng) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 0);
  for (int i = n - 1; i > 0; --i) std::swap(v[static_cast<std::size_t>(i)], v[static_cast<std::size_t>(rng.uniform(0, i))]);
  return v;
}

}  // namespace

std::string_view to_string(RankOneKind kind) noexcept {
  switch (kind) {
    case RankOneKind::Product: return "product";
    case RankOneKind::SquareSum: return "square_sum";
    case RankOneKind::SquareDiff: return "square_diff";
  }
  return "?";
}

std::string_view to_string(WeightSampling kind) noexcept {
  switch (kind) {
    case WeightSampling::Positive: return "positive";
    case WeightSampling::NClass: return "N_n";
    case WeightSampling::Nonnegative: return "nonneg";
  }
  return "?";
}

std::optional<WeightSampling> parse_weight_sampling(std::string_view text) noexcept {
  if (text == "positive") return WeightSampling::Positive;
  if (text == "N_n" || text == "n_n" || text == "nn") return WeightSampling::NClass;
  if (text == "nonneg" || text == "nonnegative") return WeightSampling::Nonnegative;
  return std::nullopt;
}

IntMatrix all_ones_weights(int n) {
  IntMatrix a = IntMatrix::Ones(n, n);
  a.diagonal().setZero();
  return a;
}

IntMatrix random_weights(int n, WeightSampling kind, CounterRng& rng) {
  IntMatrix a = IntMatrix::Zero(n, n);
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      std::int64_t v = rng.uniform(1, kSampleWeightMax);
      if (kind == WeightSampling::Nonnegative && rng.uniform(0, 9) < 3) v = 0;
      a(i, j) = a(j, i) = v;
    }
  }
  if (kind == WeightSampling::NClass) {
    const auto order = shuffled(n, rng);
    const auto pairs = rng.uniform(0, n / 2);
    for (std::int64_t p = 0; p < pairs; ++p) {
      const int u = order[static_cast<std::size_t>(2 * p)];
      const int v = order[static_cast<std::size_t>(2 * p + 1)];
      a(u, v) = a(v, u) = 0;
    }
  }
  return a;
}

IntMatrix planted_zero_weights(int n, int zero_budget, std::int64_t max_weight, std::optional<int> zero_row,
                               CounterRng& rng) {
  IntMatrix a = IntMatrix::Zero(n, n);
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) a(i, j) = a(j, i) = rng.uniform(1, max_weight);

  std::vector<int> zeros(static_cast<std::size_t>(n), 0);
  if (zero_row) {
    const int r = *zero_row;
    for (int j = 0; j < n; ++j) {
      if (j == r) continue;
      a(r, j) = a(j, r) = 0;
      ++zeros[static_cast<std::size_t>(j)];
    }
    zeros[static_cast<std::size_t>(r)] = n - 1;
  }
  std::vector<std::pair<int, int>> pairs;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) pairs.emplace_back(i, j);
  for (int k = static_cast<int>(pairs.size()) - 1; k > 0; --k)
    std::swap(pairs[static_cast<std::size_t>(k)], pairs[static_cast<std::size_t>(rng.uniform(0, k))]);
  for (const auto& [i, j] : pairs) {
    if (rng.uniform(0, 1) == 0) continue;
    auto& zi = zeros[static_cast<std::size_t>(i)];
    auto& zj = zeros[static_cast<std::size_t>(j)];
    if (a(i, j) == 0 || zi >= zero_budget || zj >= zero_budget) continue;
    a(i, j) = a(j, i) = 0;
    ++zi;
    ++zj;
  }
  return a;
}

}  // namespace pathmax
