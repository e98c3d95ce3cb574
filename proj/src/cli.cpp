#include "pathmax/cli.hpp"

#include <charconv>
#include <fstream>
#include <iostream>
#include <sstream>
#include <variant>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "pathmax/enumeration.hpp"
#include "pathmax/fa.hpp"
#include "pathmax/parallel.hpp"
#include "pathmax/rng.hpp"
#include "pathmax/verifier.hpp"

namespace pathmax {

namespace {

/// Input problem detected by the driver itself.
class UsageError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError(fmt::format("cannot open '{}'", path));
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

struct Common {
  int jobs = 0;
  std::string format = "json";
  std::string output;
  bool omit_timing = false;

  void attach(CLI::App* app) {
    app->add_option("--jobs", jobs, "worker threads (default: PATHMAX_JOBS, else hardware concurrency)")
        ->check(CLI::Range(1, 4096));
    app->add_option("--format", format, "json | csv | text")->check(CLI::IsMember({"json", "csv", "text"}));
    app->add_option("--output", output, "write the report here instead of standard output");
    app->add_flag("--omit-timing", omit_timing, "write elapsed_ms = 0 so reruns are byte-identical");
  }

  [[nodiscard]] SweepControl control() const { return {jobs > 0 ? jobs : default_jobs(), !omit_timing}; }

  void emit(const std::string& text, std::ostream& out) const {
    if (output.empty()) {
      out << text;
      return;
    }
    std::ofstream file(output, std::ios::binary);
    if (!file) throw UsageError(fmt::format("cannot write '{}'", output));
    file << text;
  }

  int emit(const VerificationReport& r, std::ostream& out) const {
    if (format == "csv") {
      emit(to_csv(r), out);
    } else if (format == "text") {
      emit(to_text(r), out);
    } else {
      emit(to_json(r).dump(2) + "\n", out);
    }
    return r.passed() ? kExitPass : kExitViolations;
  }
};

WeightSampling sampling_from(const std::string& text) {
  const auto s = parse_weight_sampling(text);
  if (!s) throw UsageError(fmt::format("unknown weight class '{}' (positive, N_n, nonneg)", text));
  return *s;
}

/// --weights for a fixed order: "ones", "random:SEED" or a CSV path.
struct WeightSpec {
  WeightMatrix weights;
  std::string label;  // "ones" or inline CSV, as stored in certificates
};

WeightSpec load_weights(const std::string& spec, std::optional<int> order, WeightSampling sampling) {
  if (spec == "ones") {
    if (!order) throw UsageError("--weights ones needs the order (--n or a graph)");
    return {all_ones_weights(*order), "ones"};
  }
  if (spec.rfind("random:", 0) == 0) {
    if (!order) throw UsageError("--weights random:SEED needs the order (--n or a graph)");
    std::uint64_t seed = 0;
    const std::string digits = spec.substr(7);
    const auto [p, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), seed);
    if (digits.empty() || ec != std::errc{} || p != digits.data() + digits.size()) {
      throw UsageError(fmt::format("bad seed in '{}'", spec));
    }
    CounterRng rng(seed, 0);
    IntMatrix a = random_weights(*order, sampling, rng);
    std::string csv = to_csv(a);
    return {std::move(a), std::move(csv)};
  }
  WeightMatrix w = parse_weights_csv(read_file(spec));
  std::string csv = std::visit([](const auto& m) { return to_csv(m); }, w);
  const auto rows = std::visit([](const auto& m) { return static_cast<int>(m.rows()); }, w);
  if (order && rows != *order) throw UsageError(fmt::format("weights have order {}, graph has {}", rows, *order));
  return {std::move(w), std::move(csv)};
}

WeightMatrix weights_from_label(const std::string& label, int n) {
  if (label == "ones") return all_ones_weights(n);
  return parse_weights_csv(label);
}

int check_certificate_file(const std::string& path, const Common& common, std::ostream& out) {
  Json j;
  try {
    j = Json::parse(read_file(path));
  } catch (const Json::parse_error& e) {
    throw UsageError(fmt::format("certificate '{}' is not valid JSON: {}", path, e.what()));
  }
  std::vector<std::string> problems;
  std::string graph6;
  try {
    graph6 = j.at("input_graph6").get<std::string>();
    const Graph g = decode_graph6(graph6);
    const WeightMatrix w = weights_from_label(j.at("weights").get<std::string>(), g.order());
    if (w.index() == 0 && std::get<IntMatrix>(w).rows() != g.order()) throw UsageError("certificate weights do not match the graph order");
    if (w.index() == 1 && std::get<RealMatrix>(w).rows() != g.order()) throw UsageError("certificate weights do not match the graph order");
    if (const auto* a = std::get_if<IntMatrix>(&w)) {
      problems = check_certificate(g, *a, certificate_from_json<std::int64_t>(j));
    } else {
      problems = check_certificate(g, std::get<RealMatrix>(w), certificate_from_json<double>(j));
    }
  } catch (const Json::exception& e) {
    throw UsageError(fmt::format("certificate '{}' does not follow the schema: {}", path, e.what()));
  }
  if (common.format == "json") {
    Json r = {{"task", "check-certificate"},
              {"status", problems.empty() ? "PASS" : "FAIL"},
              {"input_graph6", graph6},
              {"problems", problems},
              {"version", kLibraryVersion}};
    common.emit(r.dump(2) + "\n", out);
  } else {
    std::string text = fmt::format("check-certificate: {}\n", problems.empty() ? "PASS" : "FAIL");
    for (const auto& p : problems) text += "  " + p + "\n";
    common.emit(text, out);
  }
  return problems.empty() ? kExitPass : kExitViolations;
}

template <typename Scalar>
std::string certificate_text(const Graph& g, const PathCertificate<Scalar>& cert) {
  std::string path;
  for (int v : cert.path) path += fmt::format("{}{}", path.empty() ? "" : " ", v);
  return fmt::format("build-path: {}\n  input: {}\n  path: {}\n  F(input) = {}\n  F(path) = {}\n  strict: {}\n  steps: {}\n",
                     cert.strict ? "strict" : "weak", encode_graph6(g), path, cert.f_input, cert.f_path,
                     cert.strict ? "yes" : "no", cert.trace.size());
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Weighted distance sums, path maximization and spectral extremal checks on small graphs", "pathmax"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kLibraryVersion);

  // verify-spectral
  Common spectral_common;
  SpectralOptions spectral;
  std::string matrix = "d";
  std::string direction;
  std::string universe = "connected";
  std::string input;
  auto* spectral_cmd = app.add_subcommand("verify-spectral", "extremal largest eigenvalue over a graph universe");
  spectral_cmd->add_option("--n-min", spectral.n_min, "smallest order");
  spectral_cmd->add_option("--n-max", spectral.n_max, "largest order");
  spectral_cmd->add_option("--matrix", matrix, "d | dl | dq | adj | lap | q");
  spectral_cmd->add_option("--direction", direction, "max (distance kinds) | min (adjacency kinds)");
  spectral_cmd->add_option("--universe", universe, "connected | trees | file");
  spectral_cmd->add_option("--input", input, "graph6 list, one graph per line (implies --universe file)");
  spectral_cmd->add_option("--tie-tol", spectral.tie_tolerance, "relative tie tolerance");
  spectral_cmd->add_option("--eigen-tol", spectral.eigen_tolerance, "power iteration residual");
  spectral_cmd->add_option("--rayleigh-tol", spectral.rayleigh_tolerance, "quadratic form identity tolerance");
  spectral_common.attach(spectral_cmd);

  // verify-fa
  Common fa_common;
  FaMaxOptions fa;
  std::string fa_class = "positive";
  std::string fa_weights;
  std::optional<int> fa_tree_n_max;
  std::optional<int> fa_tree_trials;
  auto* fa_cmd = app.add_subcommand("verify-fa", "max of F over connected graphs against max over paths");
  fa_cmd->add_option("--n-min", fa.n_min, "smallest order");
  fa_cmd->add_option("--n-max", fa.n_max, "largest order (at most 6)");
  fa_cmd->add_option("--trials", fa.trials, "weight matrices per order");
  fa_cmd->add_option("--seed", fa.seed, "generator seed");
  fa_cmd->add_option("--class", fa_class, "positive | N_n | nonneg");
  fa_cmd->add_option("--tree-n-max", fa_tree_n_max, "largest order of the labeled-tree certificate sweep");
  fa_cmd->add_option("--tree-trials", fa_tree_trials, "weight matrices per order in the tree sweep");
  fa_cmd->add_option("--weights", fa_weights, "fixed integer weights CSV instead of random trials");
  fa_common.attach(fa_cmd);

  // verify-certificates
  Common cert_common;
  CertificateSweepOptions certs;
  std::string cert_class = "nonneg";
  bool no_replay = false;
  auto* cert_cmd = app.add_subcommand("verify-certificates", "random tree instances through build-path and check");
  cert_cmd->add_option("--n-min", certs.n_min, "smallest order");
  cert_cmd->add_option("--n-max", certs.n_max, "largest order");
  cert_cmd->add_option("--instances", certs.instances, "number of instances");
  cert_cmd->add_option("--seed", certs.seed, "generator seed");
  cert_cmd->add_option("--class", cert_class, "positive | N_n | nonneg");
  cert_cmd->add_flag("--no-replay", no_replay, "skip rebuilding each certificate");
  cert_common.attach(cert_cmd);

  // build-path
  Common build_common;
  std::string graph6;
  std::string edges_file;
  std::string weights_spec = "ones";
  std::string build_class = "nonneg";
  std::string check_file;
  auto* build_cmd = app.add_subcommand("build-path", "path P with F(P) >= F(G), with a replayable certificate");
  build_cmd->add_option("--graph6", graph6, "input graph in graph6");
  build_cmd->add_option("--edges", edges_file, "input graph as an edge-list file (n m, then m lines u v)");
  build_cmd->add_option("--weights", weights_spec, "ones | random:SEED | weights CSV file");
  build_cmd->add_option("--class", build_class, "class for random:SEED weights");
  build_cmd->add_option("--check", check_file, "re-verify a certificate file instead of building");
  build_common.attach(build_cmd);

  // oracle
  Common oracle_common;
  std::optional<int> oracle_n;
  std::string oracle_weights;
  std::string oracle_class = "positive";
  auto* oracle_cmd = app.add_subcommand("oracle", "exact max of F over all connected labeled graphs");
  oracle_cmd->add_option("--n", oracle_n, "order, for ones and random:SEED");
  oracle_cmd->add_option("--weights", oracle_weights, "ones | random:SEED | integer weights CSV file")->required();
  oracle_cmd->add_option("--class", oracle_class, "class for random:SEED weights");
  oracle_common.attach(oracle_cmd);

  // nath-paul
  Common np_common;
  NathPaulOptions np;
  auto* np_cmd = app.add_subcommand("nath-paul", "distinct entries of the top distance Laplacian eigenvector of P_n");
  np_cmd->add_option("--n-min", np.n_min, "smallest order");
  np_cmd->add_option("--n-max", np.n_max, "largest order");
  np_cmd->add_option("--gap", np.gap_threshold, "smallest accepted entry gap");
  np_common.attach(np_cmd);

  // tightness
  Common tight_common;
  TightnessOptions tight;
  auto* tight_cmd = app.add_subcommand("tightness", "search for non-path maximizers under planted zeros");
  tight_cmd->add_option("--n", tight.n, "order (at most 6)");
  tight_cmd->add_option("--zero-budget", tight.zero_budget, "planted zeros allowed per row");
  tight_cmd->add_option("--trials", tight.trials, "weight matrices");
  tight_cmd->add_option("--seed", tight.seed, "generator seed");
  tight_cmd->add_option("--max-weight", tight.max_weight, "largest nonzero weight");
  tight_cmd->add_option("--zero-row", tight.zero_row, "1-based row set entirely to zero");
  tight_common.attach(tight_cmd);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitPass;
  } catch (const CLI::CallForVersion&) {
    out << kLibraryVersion << "\n";
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (spectral_cmd->parsed()) {
      const auto kind = parse_matrix_kind(matrix);
      if (!kind) throw UsageError(fmt::format("unknown matrix kind '{}'", matrix));
      spectral.kind = *kind;
      if (direction.empty()) {
        spectral.direction = is_distance_kind(*kind) ? Direction::Max : Direction::Min;
      } else {
        const auto d = parse_direction(direction);
        if (!d) throw UsageError(fmt::format("unknown direction '{}'", direction));
        spectral.direction = *d;
      }
      const auto u = parse_universe(input.empty() ? universe : "file");
      if (!u) throw UsageError(fmt::format("unknown universe '{}'", universe));
      spectral.universe = *u;
      if (spectral.universe == UniverseKind::File) {
        if (input.empty()) throw UsageError("--universe file needs --input");
        spectral.file_graphs = read_graph6_lines(read_file(input));
      }
      spectral.control = spectral_common.control();
      return spectral_common.emit(verify_spectral(spectral), out);
    }
    if (fa_cmd->parsed()) {
      fa.sampling = sampling_from(fa_class);
      fa.tree_n_max = fa_tree_n_max;
      fa.tree_trials = fa_tree_trials;
      if (!fa_weights.empty()) {
        const WeightMatrix w = parse_weights_csv(read_file(fa_weights));
        if (!std::holds_alternative<IntMatrix>(w)) throw UsageError("verify-fa --weights needs integer weights");
        fa.fixed_weights = std::get<IntMatrix>(w);
      }
      fa.control = fa_common.control();
      return fa_common.emit(verify_fa_max(fa), out);
    }
    if (cert_cmd->parsed()) {
      certs.sampling = sampling_from(cert_class);
      certs.replay = !no_replay;
      certs.control = cert_common.control();
      return cert_common.emit(verify_certificates(certs), out);
    }
    if (build_cmd->parsed()) {
      if (build_common.format == "csv") throw UsageError("build-path writes json or text");
      if (!check_file.empty()) return check_certificate_file(check_file, build_common, out);
      if (graph6.empty() == edges_file.empty()) throw UsageError("build-path needs exactly one of --graph6 and --edges");
      const Graph g = graph6.empty() ? parse_edge_list(read_file(edges_file)) : decode_graph6(graph6);
      const WeightSpec w = load_weights(weights_spec, g.order(), sampling_from(build_class));
      std::string text;
      std::visit(
          [&](const auto& a) {
            const auto cert = maximize_on_path(g, a);
            text = build_common.format == "text" ? certificate_text(g, cert)
                                                 : certificate_to_json(g, w.label, cert).dump(2) + "\n";
          },
          w.weights);
      build_common.emit(text, out);
      return kExitPass;
    }
    if (oracle_cmd->parsed()) {
      const WeightSpec w = load_weights(oracle_weights, oracle_n, sampling_from(oracle_class));
      if (!std::holds_alternative<IntMatrix>(w.weights)) throw UsageError("oracle needs integer weights");
      FaMaxOptions o;
      o.fixed_weights = std::get<IntMatrix>(w.weights);
      o.control = oracle_common.control();
      VerificationReport r = verify_fa_max(o);
      r.task = "oracle";
      return oracle_common.emit(r, out);
    }
    if (np_cmd->parsed()) {
      np.control = np_common.control();
      return np_common.emit(nath_paul_distinctness(np), out);
    }
    if (tight_cmd->parsed()) {
      tight.control = tight_common.control();
      return tight_common.emit(tightness_search(tight), out);
    }
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::runtime_error& e) {
    // Malformed graph6, CSV or edge lists and out-of-range orders.
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::logic_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  err << "error: no subcommand\n";
  return kExitUsage;
}

}  // namespace pathmax
