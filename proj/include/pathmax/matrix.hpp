#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include <Eigen/Core>

namespace pathmax {

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

/// Exact weights; every F comparison on these is an integer comparison.
using IntMatrix = Matrix<std::int64_t>;
using RealMatrix = Eigen::MatrixXd;

/// Weights read from CSV: integers when every cell parses as one.
using WeightMatrix = std::variant<IntMatrix, RealMatrix>;

class MatrixError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Largest absolute integer weight accepted for exact evaluation. With
/// n <= 62 and distances <= 61 every F value stays far inside int64.
inline constexpr std::int64_t kMaxIntWeight = 1'000'000;

template <typename Derived>
bool is_symmetric(const Eigen::MatrixBase<Derived>& m) {
  if (m.rows() != m.cols()) return false;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = i + 1; j < m.cols(); ++j) {
      if (m(i, j) != m(j, i)) return false;
    }
  }
  return true;
}

template <typename Derived>
void require_symmetric(const Eigen::MatrixBase<Derived>& m, std::string_view what) {
  if (m.rows() != m.cols()) throw MatrixError(std::string(what) + " is not square");
  if (!is_symmetric(m)) throw MatrixError(std::string(what) + " is not symmetric");
}

/// Rejects integer weights outside [-kMaxIntWeight, kMaxIntWeight].
void require_weight_bounds(const IntMatrix& a);

/// n rows of n comma-separated numbers. Symmetry is validated; an
/// asymmetric or ragged table is a MatrixError.
WeightMatrix parse_weights_csv(std::string_view text);

std::string to_csv(const IntMatrix& m);
std::string to_csv(const RealMatrix& m);

}  // namespace pathmax
