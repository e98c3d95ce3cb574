#include "pathmax/path_builder.hpp"

namespace pathmax {

std::string_view to_string(TraceOp op) noexcept {
  switch (op) {
    case TraceOp::SpanningTree: return "spanning_tree";
    case TraceOp::LeafContract: return "leaf_contract";
    case TraceOp::AttachEndpoint: return "attach_endpoint";
  }
  return "?";
}

std::optional<TraceOp> parse_trace_op(std::string_view text) noexcept {
  if (text == "spanning_tree") return TraceOp::SpanningTree;
  if (text == "leaf_contract") return TraceOp::LeafContract;
  if (text == "attach_endpoint") return TraceOp::AttachEndpoint;
  return std::nullopt;
}

namespace detail {

Graph induced_subgraph(const Graph& g, const std::vector<int>& labels) {
  Graph out(static_cast<int>(labels.size()));
  for (std::size_t i = 0; i < labels.size(); ++i)
    for (std::size_t j = i + 1; j < labels.size(); ++j)
      if (g.has_edge(labels[i], labels[j])) out.add_edge(static_cast<int>(i) + 1, static_cast<int>(j) + 1);
  return out;
}

std::vector<int> without(const std::vector<int>& labels, int removed) {
  std::vector<int> out;
  out.reserve(labels.size());
  for (int l : labels)
    if (l != removed) out.push_back(l);
  return out;
}

std::vector<int> flatten(const std::vector<Edge>& edges) {
  std::vector<int> out;
  out.reserve(2 * edges.size());
  for (const auto& [u, v] : edges) {
    out.push_back(u);
    out.push_back(v);
  }
  return out;
}

std::vector<Edge> edge_difference(const Graph& g, const Graph& h) {
  std::vector<Edge> out;
  for (const auto& [u, v] : g.edges())
    if (!h.has_edge(u, v)) out.emplace_back(u, v);
  return out;
}

std::vector<Edge> cycle_edges(const Graph& unicyclic) {
  Graph core = unicyclic;
  for (bool stripped = true; stripped;) {
    stripped = false;
    for (int v = 1; v <= core.order(); ++v) {
      if (core.degree(v) == 1) {
        core.remove_edge(v, core.neighbors(v).front());
        stripped = true;
      }
    }
  }
  return core.edges();
}

}  // namespace detail

ConnectedUniverse::ConnectedUniverse(int n) : n_(n) {
  const ConnectedGraphs graphs(n);
  const Eigen::Index pairs = static_cast<Eigen::Index>(n) * (n - 1) / 2;
  std::vector<Vector<std::int64_t>> rows;
  graphs.for_each([&](const Graph& g, std::uint64_t mask) {
    masks_.push_back(mask);
    paths_.push_back(as_path_sequence(g).has_value());
    trees_.push_back(pathmax::is_tree(g));
    rows.push_back(pack_upper(all_pairs_distances(g)));
  });
  distances_.resize(static_cast<Eigen::Index>(rows.size()), pairs);
  for (std::size_t i = 0; i < rows.size(); ++i) distances_.row(static_cast<Eigen::Index>(i)) = rows[i].transpose();
}

}  // namespace pathmax
