#include "pathmax/spectra.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numeric>
#include <vector>

#include <Eigen/Jacobi>

#include "pathmax/rng.hpp"

namespace pathmax {

DistanceBundle distance_bundle(const DistanceMatrix& d) {
  DistanceBundle b;
  b.distance = d;
  b.transmission = d.rowwise().sum().asDiagonal();
  b.laplacian = b.transmission - b.distance;
  b.signless = b.transmission + b.distance;
  return b;
}

AdjacencyBundle adjacency_bundle(const Graph& g) {
  const int n = g.order();
  AdjacencyBundle b;
  b.adjacency = IntMatrix::Zero(n, n);
  for (const auto& [u, v] : g.edges()) {
    b.adjacency(u - 1, v - 1) = 1;
    b.adjacency(v - 1, u - 1) = 1;
  }
  const IntMatrix degrees = b.adjacency.rowwise().sum().asDiagonal();
  b.laplacian = degrees - b.adjacency;
  b.signless = degrees + b.adjacency;
  return b;
}

std::string_view to_string(MatrixKind kind) noexcept {
  switch (kind) {
    case MatrixKind::Distance: return "D";
    case MatrixKind::DistanceLaplacian: return "DL";
    case MatrixKind::DistanceSignless: return "DQ";
    case MatrixKind::Adjacency: return "ADJ";
    case MatrixKind::Laplacian: return "LAP";
    case MatrixKind::Signless: return "Q";
  }
  return "?";
}

std::optional<MatrixKind> parse_matrix_kind(std::string_view text) noexcept {
  std::string lower(text);
  std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lower == "d") return MatrixKind::Distance;
  if (lower == "dl") return MatrixKind::DistanceLaplacian;
  if (lower == "dq") return MatrixKind::DistanceSignless;
  if (lower == "adj" || lower == "a") return MatrixKind::Adjacency;
  if (lower == "lap" || lower == "l") return MatrixKind::Laplacian;
  if (lower == "q") return MatrixKind::Signless;
  return std::nullopt;
}

bool is_distance_kind(MatrixKind kind) noexcept {
  return kind == MatrixKind::Distance || kind == MatrixKind::DistanceLaplacian ||
         kind == MatrixKind::DistanceSignless;
}

IntMatrix graph_matrix(const Graph& g, MatrixKind kind) {
  switch (kind) {
    case MatrixKind::Distance: return all_pairs_distances(g);
    case MatrixKind::DistanceLaplacian: return distance_bundle(all_pairs_distances(g)).laplacian;
    case MatrixKind::DistanceSignless: return distance_bundle(all_pairs_distances(g)).signless;
    case MatrixKind::Adjacency: return adjacency_bundle(g).adjacency;
    case MatrixKind::Laplacian: return adjacency_bundle(g).laplacian;
    case MatrixKind::Signless: return adjacency_bundle(g).signless;
  }
  return {};
}

Eigen::VectorXd power_start_vector(Eigen::Index n) {
  Eigen::VectorXd x(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double u = static_cast<double>(mix64(static_cast<std::uint64_t>(i) + 1) >> 11) * 0x1.0p-53;
    x(i) = 1.0 + 0.5 * (u - 0.5);
  }
  return x.normalized();
}

EigenPair largest_eigenpair(const RealMatrix& m, double tol, int max_iterations) {
  if (m.rows() != m.cols() || m.rows() == 0) throw MatrixError("largest_eigenpair: matrix must be square and nonempty");
  if (!(tol > 0.0)) throw MatrixError("largest_eigenpair: tolerance must be positive");
  const Eigen::Index n = m.rows();

  EigenPair pair;
  pair.x = power_start_vector(n);
  const double sigma = m.cwiseAbs().rowwise().sum().maxCoeff();
  if (n == 1 || sigma == 0.0) {
    pair.lambda = n == 1 ? m(0, 0) : 0.0;
    if (n == 1) pair.x.setOnes();
    pair.residual = (m * pair.x - pair.lambda * pair.x).norm();
    return pair;
  }

  Eigen::VectorXd y(n);
  for (int it = 1; it <= max_iterations; ++it) {
    y.noalias() = m * pair.x;
    const double lambda = pair.x.dot(y);
    // Residual of the current iterate against its Rayleigh quotient.
    const double residual = (y - lambda * pair.x).norm();
    pair.lambda = lambda;
    pair.residual = residual;
    pair.iterations = it;
    if (residual <= tol) return pair;
    y += sigma * pair.x;
    pair.x = y / y.norm();
  }
  throw EigenNotConverged(std::move(pair));
}

EigenPair top_eigenpair(const RealMatrix& m, double tol) {
  try {
    return largest_eigenpair(m, tol);
  } catch (const EigenNotConverged& stalled) {
    const Spectrum s = full_spectrum(m, true);
    EigenPair pair;
    const Eigen::Index top = s.values.size() - 1;
    pair.lambda = s.values(top);
    pair.x = s.vectors.col(top).normalized();
    pair.residual = (m * pair.x - pair.lambda * pair.x).norm();
    pair.iterations = stalled.last_iterate().iterations + s.sweeps;
    pair.from_fallback = true;
    return pair;
  }
}

Spectrum full_spectrum(const RealMatrix& m, bool with_vectors) {
  if (m.rows() != m.cols()) throw MatrixError("full_spectrum: matrix must be square");
  if (m.rows() > kMaxJacobiOrder) throw MatrixError("full_spectrum: order above 64");
  const Eigen::Index n = m.rows();
  RealMatrix a = m;
  RealMatrix v = RealMatrix::Identity(n, n);
  const double threshold = 1e-12 * m.norm();

  auto max_offdiagonal = [&] {
    double worst = 0.0;
    for (Eigen::Index p = 0; p < n; ++p)
      for (Eigen::Index q = p + 1; q < n; ++q) worst = std::max(worst, std::abs(a(p, q)));
    return worst;
  };

  Spectrum s;
  constexpr int kMaxSweeps = 100;
  while (s.sweeps < kMaxSweeps && max_offdiagonal() > threshold) {
    ++s.sweeps;
    for (Eigen::Index p = 0; p < n; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        if (a(p, q) == 0.0) continue;
        Eigen::JacobiRotation<double> rot;
        rot.makeJacobi(a, p, q);
        a.applyOnTheLeft(p, q, rot.adjoint());
        a.applyOnTheRight(p, q, rot);
        a(p, q) = a(q, p) = 0.0;
        if (with_vectors) v.applyOnTheRight(p, q, rot);
      }
    }
  }

  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  std::stable_sort(order.begin(), order.end(), [&](Eigen::Index i, Eigen::Index j) { return a(i, i) < a(j, j); });
  s.values.resize(n);
  if (with_vectors) s.vectors.resize(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    const auto src = order[static_cast<std::size_t>(k)];
    s.values(k) = a(src, src);
    if (with_vectors) s.vectors.col(k) = v.col(src);
  }
  return s;
}

bool within_perron_bounds(const RealMatrix& m, double lambda, double slack) {
  const Eigen::Index n = m.rows();
  const double upper = m.rowwise().sum().maxCoeff();
  const double lower = m.sum() / static_cast<double>(n);
  return lambda <= upper + slack && lambda >= lower - slack;
}

}  // namespace pathmax
