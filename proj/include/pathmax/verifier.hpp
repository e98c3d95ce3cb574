#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "pathmax/fa.hpp"
#include "pathmax/graph.hpp"
#include "pathmax/matrix.hpp"
#include "pathmax/report.hpp"
#include "pathmax/spectra.hpp"

namespace pathmax {

/// Invalid sweep configuration (bad ranges, unsupported combinations).
class ConfigError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

struct SweepControl {
  int jobs = 1;
  bool record_timing = true;  // false writes elapsed_ms = 0 for byte-identical reports
};

// -- weighted distance sums --------------------------------------------------

struct FaMaxOptions {
  int n_min = 2;
  int n_max = 6;  // connected-graph oracle range, at most 6
  int trials = 100;
  std::uint64_t seed = 1;
  WeightSampling sampling = WeightSampling::Positive;
  /// Labeled-tree sweep through maximize_on_path; defaults to n_max / trials.
  std::optional<int> tree_n_max;
  std::optional<int> tree_trials;
  /// Replaces random sampling: one trial at the order of this matrix.
  std::optional<IntMatrix> fixed_weights;
  SweepControl control;
};

/**
 * Per trial: max F over connected graphs equals max over paths; every
 * maximizer is a path when the drawn matrix is in N(n); and on every labeled
 * tree the constructed path certificate is sound, and strict when the
 * matrix is in N(n) and the tree is not a path. Non-path maximizers for
 * weights outside N(n) are exhibits, not violations.
 */
VerificationReport verify_fa_max(const FaMaxOptions& options);

struct CertificateSweepOptions {
  int n_min = 8;
  int n_max = 9;
  int instances = 10'000;
  std::uint64_t seed = 1;
  WeightSampling sampling = WeightSampling::Nonnegative;
  bool replay = true;
  SweepControl control;
};

/// Random (labeled tree, weights) instances; each certificate is re-checked
/// and, with `replay`, rebuilt and compared step by step.
VerificationReport verify_certificates(const CertificateSweepOptions& options);

// -- spectral extremes ---------------------------------------------------------

enum class Direction { Max, Min };
enum class UniverseKind { Connected, Trees, File };

std::string_view to_string(Direction d) noexcept;
std::string_view to_string(UniverseKind u) noexcept;
std::optional<Direction> parse_direction(std::string_view text) noexcept;
std::optional<UniverseKind> parse_universe(std::string_view text) noexcept;

/// Throws ConfigError unless (kind, direction) is one of the supported
/// extremal statements: distance kinds maximized, adjacency kinds minimized.
void require_supported(MatrixKind kind, Direction direction);

struct SpectralOptions {
  int n_min = 2;
  int n_max = 6;
  MatrixKind kind = MatrixKind::Distance;
  Direction direction = Direction::Max;
  UniverseKind universe = UniverseKind::Connected;
  std::vector<Graph> file_graphs;         // universe == File
  double tie_tolerance = 1e-9;            // relative to max(1, |lambda*|)
  double eigen_tolerance = kDefaultEigenTolerance;
  double rayleigh_tolerance = 1e-8;
  SweepControl control;
};

/**
 * Scans a universe, records the extremal largest eigenvalue and every graph
 * within the tie tolerance, and checks both directions of "extremal iff
 * path". Non-path near-ties are recomputed with Jacobi before they count as
 * violations. Distance kinds also check the quadratic-form identity against
 * F with rank-one weights built from the eigenvector, and the tree optimum
 * against the connected optimum.
 */
VerificationReport verify_spectral(const SpectralOptions& options);

// -- eigenvector distinctness ----------------------------------------------------

struct NathPaulOptions {
  int n_min = 2;
  int n_max = 12;
  double gap_threshold = 1e-8;
  SweepControl control;
};

/// For each n, every pair of entries of the top unit eigenvector of the
/// distance Laplacian of P_n differs by more than the threshold.
VerificationReport nath_paul_distinctness(const NathPaulOptions& options);

// -- tightness -----------------------------------------------------------------

struct TightnessOptions {
  int n = 4;
  int zero_budget = 1;               // planted zeros allowed per row
  int trials = 1000;
  std::uint64_t seed = 1;
  std::int64_t max_weight = 3;       // small range makes ties visible
  std::optional<int> zero_row;       // 1-based row forced to zero
  SweepControl control;
};

/// Lists weight matrices whose maximizer set contains a non-path. Within
/// N(n) any such find is a violation.
VerificationReport tightness_search(const TightnessOptions& options);

}  // namespace pathmax
