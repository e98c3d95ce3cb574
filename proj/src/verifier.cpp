#include "pathmax/verifier.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <limits>
#include <map>
#include <string>
#include <thread>
#include <utility>

#include <fmt/format.h>

#include "pathmax/enumeration.hpp"
#include "pathmax/parallel.hpp"
#include "pathmax/path_builder.hpp"
#include "pathmax/rng.hpp"

namespace pathmax {

int default_jobs() {
  if (const char* env = std::getenv("PATHMAX_JOBS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0 && v <= 4096) return static_cast<int>(v);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

std::string_view to_string(Direction d) noexcept { return d == Direction::Max ? "max" : "min"; }

std::string_view to_string(UniverseKind u) noexcept {
  switch (u) {
    case UniverseKind::Connected: return "connected";
    case UniverseKind::Trees: return "trees";
    case UniverseKind::File: return "file";
  }
  return "connected";
}

std::optional<Direction> parse_direction(std::string_view text) noexcept {
  if (text == "max") return Direction::Max;
  if (text == "min") return Direction::Min;
  return std::nullopt;
}

std::optional<UniverseKind> parse_universe(std::string_view text) noexcept {
  if (text == "connected") return UniverseKind::Connected;
  if (text == "trees") return UniverseKind::Trees;
  if (text == "file") return UniverseKind::File;
  return std::nullopt;
}

void require_supported(MatrixKind kind, Direction direction) {
  if (is_distance_kind(kind) && direction == Direction::Min) {
    throw ConfigError(fmt::format(
        "{} with --direction min is not a supported statement: among connected graphs the path maximizes the largest "
        "eigenvalue of D, DL and DQ; use --direction max",
        to_string(kind)));
  }
  if (!is_distance_kind(kind) && direction == Direction::Max) {
    throw ConfigError(fmt::format(
        "{} with --direction max is not a supported statement: among connected graphs the path minimizes the largest "
        "eigenvalue of the adjacency, Laplacian and signless Laplacian matrices; use --direction min",
        to_string(kind)));
  }
}

namespace {

using Clock = std::chrono::steady_clock;

constexpr std::size_t kMaxStoredViolations = 1000;

double elapsed_since(Clock::time_point start, const SweepControl& control) {
  if (!control.record_timing) return 0.0;
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

int effective_jobs(const SweepControl& control) { return control.jobs > 0 ? control.jobs : default_jobs(); }

std::uint64_t stream_id(std::uint64_t tag, int n, std::uint64_t index) {
  return (tag << 56) ^ (static_cast<std::uint64_t>(n) << 48) ^ index;
}

std::string class_name(const WeightClass& c) {
  if (c.positive_offdiag) return "positive";
  if (c.in_N_n) return "N_n";
  if (c.nonnegative) return "nonneg";
  return "other";
}

void push_capped(std::vector<Violation>& out, std::uint64_t& total, Violation v) {
  ++total;
  if (out.size() < kMaxStoredViolations) out.push_back(std::move(v));
}

void require_range(int lo, int hi, int min_allowed, int max_allowed, std::string_view what) {
  if (lo < min_allowed || hi > max_allowed || lo > hi) {
    throw ConfigError(fmt::format("{} range {}..{} must satisfy {} <= n_min <= n_max <= {}", what, lo, hi, min_allowed,
                                  max_allowed));
  }
}

// -- shared per-tree certificate check ---------------------------------------

struct TreeCheck {
  std::uint64_t checked = 0;
  std::uint64_t strict = 0;
  std::uint64_t non_path_trees = 0;
};

void check_tree_certificate(const Graph& tree, const IntMatrix& a, const WeightClass& cls, bool replay, TreeCheck& tally,
                            std::vector<Violation>& violations, std::uint64_t& total, std::string_view context) {
  ++tally.checked;
  const auto cert = maximize_on_path(tree, a);
  const bool is_path = as_path_sequence(tree).has_value();
  if (!is_path) ++tally.non_path_trees;
  if (cert.strict) ++tally.strict;
  for (const auto& problem : check_certificate(tree, a, cert, replay)) {
    push_capped(violations, total,
                {encode_graph6(tree), cert.f_input, cert.f_path, 0.0, fmt::format("{}: {}", context, problem)});
  }
  if (cls.in_N_n && !is_path && !cert.strict) {
    push_capped(violations, total,
                {encode_graph6(tree), "F(path) > F(tree)", cert.f_path, static_cast<double>(cert.f_path - cert.f_input),
                 fmt::format("{}: weights in N(n) but the certificate is not strict; weights {}", context, to_csv(a))});
  }
}

}  // namespace

// -- verify-fa -----------------------------------------------------------------

VerificationReport verify_fa_max(const FaMaxOptions& o) {
  const auto start = Clock::now();
  int n_min = o.n_min;
  int n_max = o.n_max;
  int trials = o.trials;
  if (o.fixed_weights) {
    const IntMatrix& w = *o.fixed_weights;
    require_symmetric(w, "weights");
    require_weight_bounds(w);
    n_min = n_max = static_cast<int>(w.rows());
    trials = 1;
  }
  require_range(n_min, n_max, 2, kMaxOracleOrder, "verify-fa order");
  if (trials < 1) throw ConfigError("verify-fa needs at least one trial");
  const int tree_n_max = o.tree_n_max.value_or(n_max);
  const int tree_trials = o.fixed_weights ? 1 : o.tree_trials.value_or(trials);
  if (tree_n_max > kMaxTreeOrder) throw ConfigError(fmt::format("tree sweep order {} above {}", tree_n_max, kMaxTreeOrder));
  if (tree_trials < 0) throw ConfigError("tree trials must be nonnegative");
  if (o.fixed_weights && tree_n_max != n_max) throw ConfigError("fixed weights fix the tree sweep order too");
  const int jobs = effective_jobs(o.control);

  VerificationReport report;
  report.task = "verify-fa";
  report.config = {{"n_min", n_min},
                   {"n_max", n_max},
                   {"trials", trials},
                   {"tree_n_max", tree_n_max},
                   {"tree_trials", tree_trials},
                   {"sampling", o.fixed_weights ? "fixed" : std::string(to_string(o.sampling))}};
  if (!o.fixed_weights) report.seed = o.seed;
  report.weight_class = o.fixed_weights ? class_name(classify_weights(*o.fixed_weights)) : std::string(to_string(o.sampling));
  report.tolerances = {{"comparison", "exact integer"}};

  struct Trial {
    std::int64_t best = 0;
    std::int64_t best_path = 0;
    std::size_t maximizers = 0;
    std::size_t path_maximizers = 0;
    std::string weight_class;
    std::vector<std::string> maximizer_graph6;
    std::vector<Violation> violations;
    std::uint64_t violation_total = 0;
    std::optional<Exhibit> exhibit;
  };

  std::uint64_t violation_total = 0;
  Json per_n = Json::array();
  Json per_trial = Json::array();
  for (int n = n_min; n <= n_max; ++n) {
    const ConnectedUniverse universe(n);
    report.universe_count += universe.size();
    const std::uint64_t closed_form = connected_labeled_count(n);
    if (universe.size() != closed_form) {
      push_capped(report.violations, violation_total,
                  {"", closed_form, universe.size(), 0.0, fmt::format("connected universe count at n={}", n)});
    }
    std::vector<Trial> results(static_cast<std::size_t>(trials));
    parallel_chunks(static_cast<std::uint64_t>(trials), jobs, [&](std::uint64_t t) {
      CounterRng rng(o.seed, stream_id(0, n, t));
      const IntMatrix a = o.fixed_weights ? *o.fixed_weights : random_weights(n, o.sampling, rng);
      const WeightClass cls = classify_weights(a);
      const auto conn = brute_force_best_connected(a, &universe);
      const auto path = brute_force_best_path(a);
      Trial& r = results[t];
      r.best = conn.value;
      r.best_path = path.value;
      r.maximizers = conn.indices.size();
      r.weight_class = class_name(cls);
      if (o.fixed_weights) r.maximizer_graph6 = conn.graph6;
      const std::string context = fmt::format("n={} trial={}", n, t);
      if (conn.value != path.value) {
        push_capped(r.violations, r.violation_total,
                    {conn.graph6.front(), path.value, conn.value, static_cast<double>(conn.value - path.value),
                     fmt::format("{}: max over connected graphs differs from max over paths; weights {}", context, to_csv(a))});
      }
      std::vector<std::size_t> non_path;
      for (std::size_t k = 0; k < conn.indices.size(); ++k) {
        if (universe.is_path(conn.indices[k])) {
          ++r.path_maximizers;
        } else {
          non_path.push_back(k);
        }
      }
      if (!non_path.empty()) {
        const std::string& g6 = conn.graph6[non_path.front()];
        if (cls.in_N_n) {
          for (std::size_t k : non_path) {
            push_capped(r.violations, r.violation_total,
                        {conn.graph6[k], "path-only maximizers", conn.value, 0.0,
                         fmt::format("{}: non-path maximizer with weights in N(n); weights {}", context, to_csv(a))});
          }
        } else {
          r.exhibit = Exhibit{g6, conn.value, to_csv(a),
                              fmt::format("{}: {} non-path maximizer(s), weights {} (outside N(n))", context,
                                          non_path.size(), r.weight_class)};
        }
      }
    });

    Json n_entry = {{"n", n}, {"universe_count", universe.size()}, {"closed_form", closed_form}, {"trials", trials}};
    std::uint64_t exhibits = 0;
    for (std::size_t t = 0; t < results.size(); ++t) {
      Trial& r = results[t];
      per_trial.push_back({{"n", n},
                           {"trial", t},
                           {"max_connected", r.best},
                           {"max_path", r.best_path},
                           {"maximizers", r.maximizers},
                           {"path_maximizers", r.path_maximizers},
                           {"weight_class", r.weight_class}});
      violation_total += r.violation_total - r.violations.size();
      for (auto& v : r.violations) push_capped(report.violations, violation_total, std::move(v));
      if (r.exhibit) {
        ++exhibits;
        report.exhibits.push_back(std::move(*r.exhibit));
      }
      if (o.fixed_weights) {
        report.extremal_value = static_cast<double>(r.best);
        report.extremal_graphs = r.maximizer_graph6;
      }
    }
    n_entry["exhibits"] = exhibits;
    per_n.push_back(std::move(n_entry));
  }

  Json tree_entries = Json::array();
  const int tree_n_min = std::max(n_min, 2);
  for (int n = tree_n_min; n <= tree_n_max && tree_trials > 0; ++n) {
    const LabeledTrees trees(n);
    std::vector<TreeCheck> tallies(static_cast<std::size_t>(tree_trials));
    std::vector<std::vector<Violation>> found(static_cast<std::size_t>(tree_trials));
    std::vector<std::uint64_t> found_total(static_cast<std::size_t>(tree_trials), 0);
    parallel_chunks(static_cast<std::uint64_t>(tree_trials), jobs, [&](std::uint64_t t) {
      CounterRng rng(o.seed, stream_id(1, n, t));
      const IntMatrix a = o.fixed_weights ? *o.fixed_weights : random_weights(n, o.sampling, rng);
      const WeightClass cls = classify_weights(a);
      const std::string context = fmt::format("tree sweep n={} trial={}", n, t);
      trees.for_each([&](const Graph& tree, std::uint64_t) {
        check_tree_certificate(tree, a, cls, false, tallies[t], found[t], found_total[t], context);
      });
    });
    TreeCheck sum;
    for (std::size_t t = 0; t < tallies.size(); ++t) {
      sum.checked += tallies[t].checked;
      sum.strict += tallies[t].strict;
      sum.non_path_trees += tallies[t].non_path_trees;
      violation_total += found_total[t] - found[t].size();
      for (auto& v : found[t]) push_capped(report.violations, violation_total, std::move(v));
    }
    if (trees.count() != cayley_count(n)) {
      push_capped(report.violations, violation_total,
                  {"", cayley_count(n), trees.count(), 0.0, fmt::format("labeled tree count at n={}", n)});
    }
    tree_entries.push_back({{"n", n},
                            {"trees", trees.count()},
                            {"trials", tree_trials},
                            {"certificates_checked", sum.checked},
                            {"non_path_trees", sum.non_path_trees},
                            {"strict_certificates", sum.strict}});
  }

  report.details = {{"per_n", std::move(per_n)},
                    {"tree_sweep", std::move(tree_entries)},
                    {"trials", std::move(per_trial)},
                    {"violation_total", violation_total}};
  report.elapsed_ms = elapsed_since(start, o.control);
  return report;
}

// -- verify-certificates -------------------------------------------------------------

VerificationReport verify_certificates(const CertificateSweepOptions& o) {
  const auto start = Clock::now();
  require_range(o.n_min, o.n_max, 2, kMaxOrder, "verify-certificates order");
  if (o.instances < 1) throw ConfigError("verify-certificates needs at least one instance");
  const int jobs = effective_jobs(o.control);

  VerificationReport report;
  report.task = "verify-certificates";
  report.config = {{"n_min", o.n_min},
                   {"n_max", o.n_max},
                   {"instances", o.instances},
                   {"sampling", std::string(to_string(o.sampling))},
                   {"replay", o.replay}};
  report.seed = o.seed;
  report.weight_class = std::string(to_string(o.sampling));
  report.tolerances = {{"comparison", "exact integer"}};

  constexpr std::uint64_t kChunk = 64;
  const auto instances = static_cast<std::uint64_t>(o.instances);
  const std::uint64_t chunks = (instances + kChunk - 1) / kChunk;
  const int span = o.n_max - o.n_min + 1;
  struct Slot {
    std::map<int, TreeCheck> per_n;
    std::map<std::string, std::uint64_t> classes;
    std::vector<Violation> violations;
    std::uint64_t total = 0;
  };
  std::vector<Slot> slots(static_cast<std::size_t>(chunks));
  parallel_chunks(chunks, jobs, [&](std::uint64_t c) {
    Slot& slot = slots[c];
    for (std::uint64_t i = c * kChunk; i < std::min(instances, (c + 1) * kChunk); ++i) {
      const int n = o.n_min + static_cast<int>(i % static_cast<std::uint64_t>(span));
      CounterRng rng(o.seed, stream_id(2, 0, i));
      std::vector<int> code(static_cast<std::size_t>(std::max(0, n - 2)));
      for (int& v : code) v = static_cast<int>(rng.uniform(1, n));
      const Graph tree = prufer_decode(code, n);
      const IntMatrix a = random_weights(n, o.sampling, rng);
      const WeightClass cls = classify_weights(a);
      ++slot.classes[class_name(cls)];
      check_tree_certificate(tree, a, cls, o.replay, slot.per_n[n], slot.violations, slot.total,
                             fmt::format("instance {} (n={})", i, n));
    }
  });

  std::map<int, TreeCheck> per_n;
  std::map<std::string, std::uint64_t> classes;
  std::uint64_t violation_total = 0;
  for (auto& slot : slots) {
    for (const auto& [n, t] : slot.per_n) {
      auto& acc = per_n[n];
      acc.checked += t.checked;
      acc.strict += t.strict;
      acc.non_path_trees += t.non_path_trees;
    }
    for (const auto& [name, count] : slot.classes) classes[name] += count;
    violation_total += slot.total - slot.violations.size();
    for (auto& v : slot.violations) push_capped(report.violations, violation_total, std::move(v));
  }
  Json entries = Json::array();
  for (const auto& [n, t] : per_n) {
    entries.push_back({{"n", n},
                       {"certificates_checked", t.checked},
                       {"non_path_trees", t.non_path_trees},
                       {"strict_certificates", t.strict}});
  }
  Json class_counts = Json::object();
  for (const auto& [name, count] : classes) class_counts[name] = count;
  report.universe_count = instances;
  report.details = {{"per_n", std::move(entries)}, {"weight_classes", std::move(class_counts)}, {"violation_total", violation_total}};
  report.elapsed_ms = elapsed_since(start, o.control);
  return report;
}

// -- verify-spectral -------------------------------------------------------------

namespace {

struct Candidate {
  std::uint64_t index = 0;
  bool is_path = false;
  double lambda = 0.0;
  Graph graph;
};

struct Extremes {
  std::uint64_t scanned = 0;
  std::uint64_t paths = 0;
  std::uint64_t fallbacks = 0;
  std::optional<double> best;          // objective: lambda for max, -lambda for min
  std::optional<double> best_tree;
  std::optional<double> best_non_path;
  std::optional<double> worst_path;
  std::vector<Candidate> near;
  double max_residual = 0.0;
  double max_rayleigh_gap = 0.0;
  std::vector<Violation> violations;
  std::uint64_t violation_total = 0;
};

void keep_max(std::optional<double>& slot, double v) {
  if (!slot || v > *slot) slot = v;
}

void keep_min(std::optional<double>& slot, double v) {
  if (!slot || v < *slot) slot = v;
}

class ExtremeTracker {
public:
  ExtremeTracker(Direction direction, double tie) : sign_(direction == Direction::Max ? 1.0 : -1.0), tie_(tie) {}

  [[nodiscard]] double objective(double lambda) const noexcept { return sign_ * lambda; }
  [[nodiscard]] double lambda(double objective) const noexcept { return sign_ * objective; }
  [[nodiscard]] double loose(double v) const noexcept { return 2.0 * tie_ * std::max(1.0, std::abs(v)); }
  [[nodiscard]] double tight(double v) const noexcept { return tie_ * std::max(1.0, std::abs(v)); }

  void offer(Extremes& e, Candidate c) const {
    const double obj = objective(c.lambda);
    if (!e.best || obj > *e.best) {
      e.best = obj;
      prune(e);
    }
    if (obj >= *e.best - loose(*e.best)) e.near.push_back(std::move(c));
  }

  void merge(Extremes& into, Extremes&& from) const {
    into.scanned += from.scanned;
    into.paths += from.paths;
    into.fallbacks += from.fallbacks;
    if (from.best) keep_max(into.best, *from.best);
    if (from.best_tree) keep_max(into.best_tree, *from.best_tree);
    if (from.best_non_path) keep_max(into.best_non_path, *from.best_non_path);
    if (from.worst_path) keep_min(into.worst_path, *from.worst_path);
    into.max_residual = std::max(into.max_residual, from.max_residual);
    into.max_rayleigh_gap = std::max(into.max_rayleigh_gap, from.max_rayleigh_gap);
    for (auto& c : from.near) into.near.push_back(std::move(c));
    prune(into);
    into.violation_total += from.violation_total - from.violations.size();
    for (auto& v : from.violations) push_capped(into.violations, into.violation_total, std::move(v));
  }

private:
  void prune(Extremes& e) const {
    const double floor = *e.best - loose(*e.best);
    std::erase_if(e.near, [&](const Candidate& c) { return objective(c.lambda) < floor; });
  }

  double sign_;
  double tie_;
};

bool is_path_graph(const Graph& g) {
  const int n = g.order();
  if (g.size() != n - 1) return false;
  for (int v = 1; v <= n; ++v)
    if (g.degree(v) > 2) return false;
  return is_connected(g);
}

class SpectralScanner {
public:
  SpectralScanner(const SpectralOptions& o, const ExtremeTracker& tracker) : o_(o), tracker_(tracker) {}

  void scan(const Graph& g, std::uint64_t index, Extremes& e) const {
    ++e.scanned;
    DistanceMatrix d;
    IntMatrix exact;
    if (is_distance_kind(o_.kind)) {
      d = all_pairs_distances(g);
      if (o_.kind == MatrixKind::Distance) {
        exact = d;
      } else {
        auto bundle = distance_bundle(d);
        exact = o_.kind == MatrixKind::DistanceLaplacian ? std::move(bundle.laplacian) : std::move(bundle.signless);
      }
    } else {
      exact = graph_matrix(g, o_.kind);
    }
    const RealMatrix m = exact.cast<double>();
    const EigenPair pair = top_eigenpair(m, o_.eigen_tolerance);
    if (pair.from_fallback) ++e.fallbacks;
    e.max_residual = std::max(e.max_residual, pair.residual);

    if (is_distance_kind(o_.kind)) {
      double rhs = 0.0;
      switch (o_.kind) {
        case MatrixKind::Distance: rhs = 2.0 * evaluate_F(d, rank_one_weights(pair.x, RankOneKind::Product)); break;
        case MatrixKind::DistanceLaplacian: rhs = evaluate_F(d, rank_one_weights(pair.x, RankOneKind::SquareDiff)); break;
        default: rhs = evaluate_F(d, rank_one_weights(pair.x, RankOneKind::SquareSum)); break;
      }
      const double gap = std::abs(rhs - pair.lambda);
      e.max_rayleigh_gap = std::max(e.max_rayleigh_gap, gap);
      if (gap > o_.rayleigh_tolerance) {
        push_capped(e.violations, e.violation_total,
                    {encode_graph6(g), pair.lambda, rhs, gap, "quadratic form identity with rank-one F weights"});
      }
    }
    const bool nonnegative = o_.kind == MatrixKind::Distance || o_.kind == MatrixKind::DistanceSignless ||
                             o_.kind == MatrixKind::Adjacency || o_.kind == MatrixKind::Signless;
    if (nonnegative && !within_perron_bounds(m, pair.lambda, 1e-9 * std::max(1.0, std::abs(pair.lambda)))) {
      push_capped(e.violations, e.violation_total,
                  {encode_graph6(g), "between average and maximum row sum", pair.lambda, 0.0,
                   "largest eigenvalue outside Perron row-sum bounds"});
    }

    const double obj = tracker_.objective(pair.lambda);
    const bool path = is_path_graph(g);
    if (path) {
      ++e.paths;
      keep_min(e.worst_path, obj);
    } else {
      keep_max(e.best_non_path, obj);
    }
    if (g.size() == g.order() - 1) keep_max(e.best_tree, obj);
    tracker_.offer(e, Candidate{index, path, pair.lambda, g});
  }

private:
  const SpectralOptions& o_;
  const ExtremeTracker& tracker_;
};

}  // namespace

VerificationReport verify_spectral(const SpectralOptions& o) {
  const auto start = Clock::now();
  require_supported(o.kind, o.direction);
  if (!(o.tie_tolerance > 0.0) || !(o.eigen_tolerance > 0.0) || !(o.rayleigh_tolerance > 0.0)) {
    throw ConfigError("tolerances must be positive");
  }
  int n_min = o.n_min;
  int n_max = o.n_max;
  std::map<int, std::vector<const Graph*>> by_order;
  if (o.universe == UniverseKind::File) {
    if (o.file_graphs.empty()) throw ConfigError("graph file is empty");
    for (const auto& g : o.file_graphs) {
      if (!is_connected(g)) throw ConfigError(fmt::format("graph {} in the input file is disconnected", encode_graph6(g)));
      if (g.order() < 2) throw ConfigError("graphs in the input file need at least two vertices");
      by_order[g.order()].push_back(&g);
    }
    n_min = by_order.begin()->first;
    n_max = by_order.rbegin()->first;
  } else if (o.universe == UniverseKind::Connected) {
    require_range(n_min, n_max, 2, kMaxConnectedOrder, "connected universe order");
  } else {
    require_range(n_min, n_max, 2, kMaxTreeOrder, "tree universe order");
  }
  const int jobs = effective_jobs(o.control);

  VerificationReport report;
  report.task = "verify-spectral";
  report.config = {{"n_min", n_min},
                   {"n_max", n_max},
                   {"matrix", std::string(to_string(o.kind))},
                   {"direction", std::string(to_string(o.direction))},
                   {"universe", std::string(to_string(o.universe))}};
  report.tolerances = {{"tie", o.tie_tolerance},
                       {"tie_scale", "max(1, |lambda*|)"},
                       {"eigen_residual", o.eigen_tolerance},
                       {"rayleigh", o.rayleigh_tolerance}};

  const ExtremeTracker tracker(o.direction, o.tie_tolerance);
  const SpectralScanner scanner(o, tracker);
  std::uint64_t violation_total = 0;
  Json per_n = Json::array();

  for (int n = n_min; n <= n_max; ++n) {
    std::uint64_t chunks = 0;
    std::function<void(std::uint64_t, Extremes&)> run_chunk;
    std::optional<ConnectedGraphs> connected;
    std::optional<LabeledTrees> trees;
    const std::vector<const Graph*>* listed = nullptr;
    if (o.universe == UniverseKind::Connected) {
      connected.emplace(n);
      constexpr std::uint64_t kMasks = 4096;
      chunks = (connected->mask_count() + kMasks - 1) / kMasks;
      run_chunk = [&](std::uint64_t c, Extremes& e) {
        connected->for_each([&](const Graph& g, std::uint64_t mask) { scanner.scan(g, mask, e); }, c * kMasks, (c + 1) * kMasks);
      };
    } else if (o.universe == UniverseKind::Trees) {
      trees.emplace(n);
      constexpr std::uint64_t kTrees = 2048;
      chunks = (trees->count() + kTrees - 1) / kTrees;
      run_chunk = [&](std::uint64_t c, Extremes& e) {
        trees->for_each([&](const Graph& g, std::uint64_t idx) { scanner.scan(g, idx, e); }, c * kTrees, (c + 1) * kTrees);
      };
    } else {
      const auto it = by_order.find(n);
      if (it == by_order.end()) continue;
      listed = &it->second;
      constexpr std::uint64_t kGraphs = 256;
      chunks = (listed->size() + kGraphs - 1) / kGraphs;
      run_chunk = [&](std::uint64_t c, Extremes& e) {
        const auto end = std::min<std::uint64_t>(listed->size(), (c + 1) * kGraphs);
        for (std::uint64_t i = c * kGraphs; i < end; ++i) scanner.scan(*(*listed)[i], i, e);
      };
    }

    std::vector<Extremes> slots(static_cast<std::size_t>(chunks));
    parallel_chunks(chunks, jobs, [&](std::uint64_t c) { run_chunk(c, slots[c]); });
    Extremes all;
    for (auto& s : slots) tracker.merge(all, std::move(s));
    report.universe_count += all.scanned;

    auto fail = [&](Violation v) { push_capped(all.violations, all.violation_total, std::move(v)); };

    std::optional<std::uint64_t> expected_count;
    std::optional<std::uint64_t> expected_paths;
    if (o.universe == UniverseKind::Connected) expected_count = connected_labeled_count(n);
    if (o.universe == UniverseKind::Trees) expected_count = cayley_count(n);
    if (o.universe != UniverseKind::File) expected_paths = labeled_path_count(n);
    if (expected_count && all.scanned != *expected_count) {
      fail({"", *expected_count, all.scanned, 0.0, fmt::format("universe count at n={}", n)});
    }
    if (expected_paths && all.paths != *expected_paths) {
      fail({"", *expected_paths, all.paths, 0.0, fmt::format("path count at n={}", n)});
    }
    if (all.paths == 0) fail({"", "at least one path", 0, 0.0, fmt::format("no path of order {} in the universe", n)});

    // Non-path candidates near the top are recomputed independently.
    std::uint64_t rechecks = 0;
    for (auto& c : all.near) {
      if (c.is_path) continue;
      ++rechecks;
      const RealMatrix m = graph_matrix(c.graph, o.kind).cast<double>();
      const double jacobi = full_spectrum(m, false).values.maxCoeff();
      const double gap = std::abs(jacobi - c.lambda);
      if (gap > tracker.tight(c.lambda)) {
        fail({encode_graph6(c.graph), jacobi, c.lambda, gap, "power iteration disagrees with Jacobi"});
      }
      c.lambda = jacobi;
    }
    double best = -std::numeric_limits<double>::infinity();
    for (const auto& c : all.near) best = std::max(best, tracker.objective(c.lambda));
    const double tol = tracker.tight(best);
    std::vector<const Candidate*> extremal;
    for (const auto& c : all.near)
      if (tracker.objective(c.lambda) >= best - tol) extremal.push_back(&c);
    std::sort(extremal.begin(), extremal.end(), [](const Candidate* x, const Candidate* y) { return x->index < y->index; });

    std::uint64_t extremal_paths = 0;
    for (const Candidate* c : extremal) {
      if (c->is_path) {
        ++extremal_paths;
      } else {
        fail({encode_graph6(c->graph), tracker.lambda(best), c->lambda, std::abs(best - tracker.objective(c->lambda)),
              fmt::format("non-path graph attains the extremum at n={}", n)});
      }
    }
    if (all.worst_path && *all.worst_path < best - tol) {
      fail({"", tracker.lambda(best), tracker.lambda(*all.worst_path), best - *all.worst_path,
            fmt::format("some path misses the extremum at n={}", n)});
    }
    if (extremal_paths != all.paths) {
      fail({"", all.paths, extremal_paths, 0.0, fmt::format("extremal path count at n={}", n)});
    }
    if (o.universe == UniverseKind::Connected && is_distance_kind(o.kind) && all.best_tree &&
        std::abs(*all.best_tree - best) > tol) {
      fail({"", tracker.lambda(best), tracker.lambda(*all.best_tree), std::abs(*all.best_tree - best),
            fmt::format("tree optimum differs from connected optimum at n={}", n)});
    }

    Json entry = {{"n", n},
                  {"universe_count", all.scanned},
                  {"expected_universe_count", expected_count ? Json(*expected_count) : Json(nullptr)},
                  {"extremal_value", tracker.lambda(best)},
                  {"extremal_count", extremal.size()},
                  {"path_count", all.paths},
                  {"runner_up", all.best_non_path ? Json(tracker.lambda(*all.best_non_path)) : Json(nullptr)},
                  {"margin", all.best_non_path ? Json(best - *all.best_non_path) : Json(nullptr)},
                  {"tree_extremal_value", all.best_tree ? Json(tracker.lambda(*all.best_tree)) : Json(nullptr)},
                  {"power_fallbacks", all.fallbacks},
                  {"jacobi_rechecks", rechecks},
                  {"max_residual", all.max_residual},
                  {"max_rayleigh_gap", is_distance_kind(o.kind) ? Json(all.max_rayleigh_gap) : Json(nullptr)}};
    per_n.push_back(std::move(entry));
    report.extremal_value = tracker.lambda(best);
    for (const Candidate* c : extremal) report.extremal_graphs.push_back(encode_graph6(c->graph));
    violation_total += all.violation_total - all.violations.size();
    for (auto& v : all.violations) push_capped(report.violations, violation_total, std::move(v));
  }
  report.details = {{"per_n", std::move(per_n)}, {"violation_total", violation_total}};
  report.elapsed_ms = elapsed_since(start, o.control);
  return report;
}

// -- nath-paul -------------------------------------------------------------------

VerificationReport nath_paul_distinctness(const NathPaulOptions& o) {
  const auto start = Clock::now();
  require_range(o.n_min, o.n_max, 2, kMaxOrder, "eigenvector distinctness order");
  if (!(o.gap_threshold > 0.0)) throw ConfigError("gap threshold must be positive");

  VerificationReport report;
  report.task = "nath-paul";
  report.config = {{"n_min", o.n_min}, {"n_max", o.n_max}, {"matrix", "DL"}, {"graph", "path"}};
  report.tolerances = {{"gap_threshold", o.gap_threshold}, {"eigen_residual", kDefaultEigenTolerance}};

  Json per_n = Json::array();
  double smallest = std::numeric_limits<double>::infinity();
  std::uint64_t violation_total = 0;
  for (int n = o.n_min; n <= o.n_max; ++n) {
    std::vector<int> seq(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) seq[static_cast<std::size_t>(i)] = i + 1;
    const Graph p = path_graph(seq, n);
    const RealMatrix m = graph_matrix(p, MatrixKind::DistanceLaplacian).cast<double>();
    const EigenPair pair = top_eigenpair(m);
    std::vector<double> entries(pair.x.data(), pair.x.data() + pair.x.size());
    std::sort(entries.begin(), entries.end());
    double gap = std::numeric_limits<double>::infinity();
    for (std::size_t i = 1; i < entries.size(); ++i) gap = std::min(gap, entries[i] - entries[i - 1]);
    smallest = std::min(smallest, gap);
    if (!(gap > o.gap_threshold)) {
      push_capped(report.violations, violation_total,
                  {encode_graph6(p), fmt::format("> {}", o.gap_threshold), gap, o.gap_threshold - gap,
                   fmt::format("eigenvector entries coincide at n={}", n)});
    }
    per_n.push_back({{"n", n},
                     {"lambda", pair.lambda},
                     {"min_gap", gap},
                     {"residual", pair.residual},
                     {"iterations", pair.iterations},
                     {"fallback", pair.from_fallback}});
    ++report.universe_count;
  }
  report.extremal_value = smallest;
  report.details = {{"per_n", std::move(per_n)}, {"violation_total", violation_total}};
  report.elapsed_ms = elapsed_since(start, o.control);
  return report;
}

// -- tightness ---------------------------------------------------------------------

VerificationReport tightness_search(const TightnessOptions& o) {
  const auto start = Clock::now();
  require_range(o.n, o.n, 2, kMaxOracleOrder, "tightness order");
  if (o.trials < 1) throw ConfigError("tightness needs at least one trial");
  if (o.zero_budget < 0) throw ConfigError("zero budget must be nonnegative");
  if (o.max_weight < 1 || o.max_weight > kMaxIntWeight) {
    throw ConfigError(fmt::format("max weight must lie in 1..{}", kMaxIntWeight));
  }
  if (o.zero_row && (*o.zero_row < 1 || *o.zero_row > o.n)) {
    throw ConfigError(fmt::format("zero row {} outside 1..{}", *o.zero_row, o.n));
  }
  const int jobs = effective_jobs(o.control);

  VerificationReport report;
  report.task = "tightness";
  report.config = {{"n", o.n},
                   {"zero_budget", o.zero_budget},
                   {"trials", o.trials},
                   {"max_weight", o.max_weight},
                   {"zero_row", o.zero_row ? Json(*o.zero_row) : Json(nullptr)}};
  report.seed = o.seed;
  report.weight_class = fmt::format("planted zeros, budget {} per row", o.zero_budget);
  report.tolerances = {{"comparison", "exact integer"}};

  const ConnectedUniverse universe(o.n);
  struct Trial {
    std::string weight_class;
    std::optional<Exhibit> exhibit;
    std::vector<Violation> violations;
    std::uint64_t total = 0;
  };
  std::vector<Trial> results(static_cast<std::size_t>(o.trials));
  const std::optional<int> zero_row = o.zero_row ? std::optional<int>(*o.zero_row - 1) : std::nullopt;
  parallel_chunks(static_cast<std::uint64_t>(o.trials), jobs, [&](std::uint64_t t) {
    CounterRng rng(o.seed, stream_id(3, o.n, t));
    const IntMatrix a = planted_zero_weights(o.n, o.zero_budget, o.max_weight, zero_row, rng);
    const WeightClass cls = classify_weights(a);
    const auto conn = brute_force_best_connected(a, &universe);
    const auto path = brute_force_best_path(a);
    Trial& r = results[t];
    r.weight_class = class_name(cls);
    const std::string context = fmt::format("trial {}", t);
    if (conn.value != path.value) {
      push_capped(r.violations, r.total,
                  {conn.graph6.front(), path.value, conn.value, static_cast<double>(conn.value - path.value),
                   fmt::format("{}: max over connected graphs differs from max over paths; weights {}", context, to_csv(a))});
    }
    std::vector<std::size_t> non_path;
    for (std::size_t k = 0; k < conn.indices.size(); ++k)
      if (!universe.is_path(conn.indices[k])) non_path.push_back(k);
    if (non_path.empty()) return;
    if (cls.in_N_n) {
      for (std::size_t k : non_path) {
        push_capped(r.violations, r.total,
                    {conn.graph6[k], "path-only maximizers", conn.value, 0.0,
                     fmt::format("{}: non-path maximizer with weights in N(n); weights {}", context, to_csv(a))});
      }
    } else {
      r.exhibit = Exhibit{conn.graph6[non_path.front()], conn.value, to_csv(a),
                          fmt::format("{}: {} non-path maximizer(s) among {}, weights {}", context, non_path.size(),
                                      conn.indices.size(), r.weight_class)};
    }
  });

  std::map<std::string, std::uint64_t> classes;
  std::uint64_t violation_total = 0;
  for (auto& r : results) {
    ++classes[r.weight_class];
    if (r.exhibit) report.exhibits.push_back(std::move(*r.exhibit));
    violation_total += r.total - r.violations.size();
    for (auto& v : r.violations) push_capped(report.violations, violation_total, std::move(v));
  }
  Json class_counts = Json::object();
  for (const auto& [name, count] : classes) class_counts[name] = count;
  report.universe_count = universe.size();
  report.details = {{"trials", o.trials},
                    {"weight_classes", std::move(class_counts)},
                    {"exhibit_count", report.exhibits.size()},
                    {"violation_total", violation_total}};
  report.elapsed_ms = elapsed_since(start, o.control);
  return report;
}

}  // namespace pathmax
