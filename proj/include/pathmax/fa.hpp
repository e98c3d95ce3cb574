#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string_view>
#include <type_traits>
#include <vector>

#include <Eigen/Core>

#include "pathmax/graph.hpp"
#include "pathmax/matrix.hpp"
#include "pathmax/rng.hpp"

namespace pathmax {

/**
 * Weighted distance sum F_A(G) = sum over i < j of d(i,j) * a(i,j).
 *
 * Only the strict upper triangle of `a` is read, so its diagonal is
 * irrelevant. The result has the scalar type of `a`: exact for integer
 * weights.
 */
template <typename DerivedD, typename DerivedA>
typename DerivedA::Scalar evaluate_F(const Eigen::MatrixBase<DerivedD>& d, const Eigen::MatrixBase<DerivedA>& a) {
  using Scalar = typename DerivedA::Scalar;
  if (d.rows() != a.rows() || d.cols() != a.cols() || d.rows() != d.cols()) {
    throw MatrixError("evaluate_F: distance and weight matrices differ in order");
  }
  Scalar sum{0};
  for (Eigen::Index j = 1; j < d.cols(); ++j)
    for (Eigen::Index i = 0; i < j; ++i) sum += static_cast<Scalar>(d(i, j)) * a(i, j);
  return sum;
}

template <typename DerivedA>
typename DerivedA::Scalar evaluate_F(const Graph& g, const Eigen::MatrixBase<DerivedA>& a) {
  return evaluate_F(all_pairs_distances(g), a);
}

/// Strict upper triangle packed column by column: (0,1), (0,2), (1,2), (0,3), ...
/// Matches the graph6 bit order, so F over a packed distance vector is a dot product.
template <typename Derived>
Vector<typename Derived::Scalar> pack_upper(const Eigen::MatrixBase<Derived>& m) {
  const Eigen::Index n = m.rows();
  Vector<typename Derived::Scalar> out(n * (n - 1) / 2);
  Eigen::Index k = 0;
  for (Eigen::Index j = 1; j < n; ++j)
    for (Eigen::Index i = 0; i < j; ++i) out(k++) = m(i, j);
  return out;
}

/// Hypothesis classes for the weight matrix. `nonnegative` looks at the
/// off-diagonal entries only, as the diagonal never enters F.
struct WeightClass {
  bool nonnegative = false;
  bool in_N_n = false;           // nonnegative, at most one zero off-diagonal entry per row
  bool positive_offdiag = false; // every off-diagonal entry > 0

  friend bool operator==(const WeightClass&, const WeightClass&) = default;
};

/// Zero test used by classification: exact for integers; relative
/// 1e-15 * max|off-diagonal entry| for floating weights.
template <typename Derived>
auto zero_threshold(const Eigen::MatrixBase<Derived>& a) {
  using Scalar = typename Derived::Scalar;
  if constexpr (std::is_integral_v<Scalar>) {
    return Scalar{0};
  } else {
    Scalar largest{0};
    for (Eigen::Index i = 0; i < a.rows(); ++i)
      for (Eigen::Index j = 0; j < a.cols(); ++j)
        if (i != j) largest = std::max(largest, std::abs(a(i, j)));
    return Scalar(1e-15) * largest;
  }
}

template <typename Derived>
WeightClass classify_weights(const Eigen::MatrixBase<Derived>& a) {
  const auto eps = zero_threshold(a);
  const Eigen::Index n = a.rows();
  WeightClass c{true, true, true};
  for (Eigen::Index i = 0; i < n; ++i) {
    int zeros = 0;
    for (Eigen::Index j = 0; j < n; ++j) {
      if (i == j) continue;
      const auto v = a(i, j);
      const bool zero = std::abs(v) <= eps;
      if (zero) {
        ++zeros;
        c.positive_offdiag = false;
      } else if (v < 0) {
        c.nonnegative = false;
        c.positive_offdiag = false;
      }
    }
    if (zeros > 1) c.in_N_n = false;
  }
  c.in_N_n = c.in_N_n && c.nonnegative;
  return c;
}

enum class RankOneKind { Product, SquareSum, SquareDiff };

std::string_view to_string(RankOneKind kind) noexcept;

/**
 * Weight matrices that turn a quadratic form into F_A:
 *   Product     a_ij = x_i x_j        (distance matrix, with a factor 2)
 *   SquareSum   a_ij = (x_i + x_j)^2  (distance signless Laplacian)
 *   SquareDiff  a_ij = (x_i - x_j)^2  (distance Laplacian)
 * Diagonal is zero.
 */
template <typename Derived>
Matrix<typename Derived::Scalar> rank_one_weights(const Eigen::MatrixBase<Derived>& x, RankOneKind kind) {
  using Scalar = typename Derived::Scalar;
  const Eigen::Index n = x.size();
  Matrix<Scalar> a = Matrix<Scalar>::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i + 1; j < n; ++j) {
      Scalar v{};
      switch (kind) {
        case RankOneKind::Product: v = x(i) * x(j); break;
        case RankOneKind::SquareSum: v = (x(i) + x(j)) * (x(i) + x(j)); break;
        case RankOneKind::SquareDiff: v = (x(i) - x(j)) * (x(i) - x(j)); break;
      }
      a(i, j) = a(j, i) = v;
    }
  }
  return a;
}

/// Sampling classes for randomized checks; all draws are integers.
enum class WeightSampling {
  Positive,     // off-diagonal uniform in [1, 100]
  NClass,       // Positive with a random partial matching of planted zeros
  Nonnegative,  // each off-diagonal entry zero with probability 3/10, else [1, 100]
};

std::string_view to_string(WeightSampling kind) noexcept;
std::optional<WeightSampling> parse_weight_sampling(std::string_view text) noexcept;

inline constexpr std::int64_t kSampleWeightMax = 100;

IntMatrix all_ones_weights(int n);

IntMatrix random_weights(int n, WeightSampling kind, CounterRng& rng);

/// Uniform [1, max_weight] off-diagonal, then zeros planted pair by pair so
/// that no row receives more than `zero_budget` of them. When `zero_row` is
/// given, that whole row is zeroed regardless of the budget.
IntMatrix planted_zero_weights(int n, int zero_budget, std::int64_t max_weight, std::optional<int> zero_row,
                               CounterRng& rng);

}  // namespace pathmax
