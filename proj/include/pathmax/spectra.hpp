#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include <Eigen/Core>

#include "pathmax/graph.hpp"
#include "pathmax/matrix.hpp"

namespace pathmax {

/// The four distance-derived matrices of one graph, exact integers.
struct DistanceBundle {
  IntMatrix distance;        // D
  IntMatrix transmission;    // T, diagonal of row sums of D
  IntMatrix laplacian;       // DL = T - D
  IntMatrix signless;        // DQ = T + D
};

DistanceBundle distance_bundle(const DistanceMatrix& d);

struct AdjacencyBundle {
  IntMatrix adjacency;       // 0/1
  IntMatrix laplacian;       // Deg - A
  IntMatrix signless;        // Deg + A
};

AdjacencyBundle adjacency_bundle(const Graph& g);

enum class MatrixKind { Distance, DistanceLaplacian, DistanceSignless, Adjacency, Laplacian, Signless };

std::string_view to_string(MatrixKind kind) noexcept;
std::optional<MatrixKind> parse_matrix_kind(std::string_view text) noexcept;

/// True for D, DL and DQ: the kinds whose largest eigenvalue grows with distance.
bool is_distance_kind(MatrixKind kind) noexcept;

/// Builds the requested matrix of a connected graph.
IntMatrix graph_matrix(const Graph& g, MatrixKind kind);

struct EigenPair {
  double lambda = 0.0;
  Eigen::VectorXd x;          // unit length
  double residual = 0.0;      // ||Mx - lambda x||_2
  int iterations = 0;
  bool from_fallback = false; // produced by full_spectrum after power iteration stalled
};

inline constexpr double kDefaultEigenTolerance = 1e-12;
inline constexpr int kPowerIterationCap = 100'000;

class EigenNotConverged : public std::runtime_error {
public:
  explicit EigenNotConverged(EigenPair last)
      : std::runtime_error("power iteration did not converge"), last_(std::move(last)) {}
  [[nodiscard]] const EigenPair& last_iterate() const noexcept { return last_; }

private:
  EigenPair last_;
};

/// Deterministic start vector: all-ones with a hashed perturbation in
/// [-1/4, 1/4] per entry. The perturbation has no linear structure, so the
/// vector is not orthogonal to the top eigenvector of a symmetric graph.
Eigen::VectorXd power_start_vector(Eigen::Index n);

/**
 * Largest (not largest-modulus) eigenpair of a symmetric matrix.
 *
 * Power iteration on M + sigma*I with the Gershgorin shift
 * sigma = max_i sum_j |m_ij|; every eigenvalue of the shifted matrix is then
 * nonnegative and the target is dominant. Stops once ||Mx - lambda x|| <= tol.
 * Throws EigenNotConverged after `max_iterations`.
 */
EigenPair largest_eigenpair(const RealMatrix& m, double tol = kDefaultEigenTolerance,
                            int max_iterations = kPowerIterationCap);

/// largest_eigenpair, falling back to full_spectrum on non-convergence.
EigenPair top_eigenpair(const RealMatrix& m, double tol = kDefaultEigenTolerance);

struct Spectrum {
  Eigen::VectorXd values;   // ascending
  RealMatrix vectors;       // column k pairs with values(k); empty if not requested
  int sweeps = 0;
};

inline constexpr Eigen::Index kMaxJacobiOrder = 64;

/// Cyclic Jacobi rotations until every off-diagonal magnitude is at most
/// 1e-12 * ||m||_F.
Spectrum full_spectrum(const RealMatrix& m, bool with_vectors = true);

/// Gershgorin upper bound and all-ones Rayleigh lower bound for a nonnegative
/// symmetric matrix: sum(m)/n <= lambda <= max row sum. `slack` is absolute.
bool within_perron_bounds(const RealMatrix& m, double lambda, double slack);

}  // namespace pathmax
