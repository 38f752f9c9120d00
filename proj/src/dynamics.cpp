#include "graphcrit/dynamics.hpp"

#include <unordered_map>

#include "graphcrit/error.hpp"
#include "graphcrit/stats.hpp"

namespace graphcrit {

std::vector<Iteration> EntropyTrace::iterations() const {
  std::vector<Iteration> out;
  out.reserve(rows.size());
  for (const auto& r : rows) out.push_back(r.sample.iteration);
  return out;
}

std::vector<double> EntropyTrace::s_struct() const {
  std::vector<double> out;
  out.reserve(rows.size());
  for (const auto& r : rows) out.push_back(r.sample.s_struct);
  return out;
}

std::vector<double> EntropyTrace::s_sem() const {
  std::vector<double> out;
  out.reserve(rows.size());
  for (const auto& r : rows) out.push_back(r.sample.s_sem);
  return out;
}

TraceRow analyze_snapshot(const GraphSnapshot& g, const Eigen::MatrixXd& cosines, double surprise_threshold) {
  if (!(surprise_threshold >= -1.0 && surprise_threshold <= 1.0))
    throw InputError("similarity threshold must lie in [-1, 1]");
  const auto n = static_cast<Eigen::Index>(g.node_count());
  if (cosines.rows() != n || cosines.cols() != n) throw InputError("cosine matrix size mismatch");

  TraceRow row;
  row.n_nodes = g.node_count();
  row.sample.iteration = g.iteration();
  row.sample.s_struct = structural_entropy(g).entropy_nats;
  row.sample.s_sem = semantic_entropy(semantic_adjacency_from_cosines(cosines)).entropy_nats;
  row.sample.d_param = discovery_parameter(row.sample.s_struct, row.sample.s_sem);

  std::size_t surprising = 0;
  for (const auto& e : g.edges())
    surprising += cosines(static_cast<Eigen::Index>(e.u), static_cast<Eigen::Index>(e.v)) < surprise_threshold;
  row.surprise = summarize(g.iteration(), g.edge_count(), surprising, surprise_threshold);
  return row;
}

EntropyTrace build_trace(const SnapshotSeries& series, const EmbeddingTable& embeddings,
                         double surprise_threshold) {
  const auto labels = series.all_labels();
  embeddings.require_all(labels, "snapshot series");

  // Embeddings are fixed per label, so one cosine matrix serves every snapshot.
  const bool shared = labels.size() <= kMaxDenseNodes;
  Eigen::MatrixXd all_cos;
  std::unordered_map<std::string, Eigen::Index> pos;
  if (shared) {
    all_cos = cosine_matrix(embeddings.rows(labels));
    for (std::size_t i = 0; i < labels.size(); ++i) pos.emplace(labels[i], static_cast<Eigen::Index>(i));
  }

  EntropyTrace trace;
  trace.threshold = surprise_threshold;
  trace.rows.reserve(series.size());
  for (const auto& g : series) {
    try {
      Eigen::MatrixXd cos;
      if (shared) {
        std::vector<Eigen::Index> idx;
        idx.reserve(g.node_count());
        for (const auto& l : g.labels()) idx.push_back(pos.at(l));
        cos = all_cos(idx, idx);
      } else {
        cos = cosine_matrix(embeddings.rows(g.labels()));
      }
      trace.rows.push_back(analyze_snapshot(g, cos, surprise_threshold));
    } catch (const InputError& e) {
      throw InputError("iteration " + std::to_string(g.iteration()) + ": " + e.what());
    } catch (const InvariantError& e) {
      throw InvariantError("iteration " + std::to_string(g.iteration()) + ": " + e.what());
    }
  }
  return trace;
}

CrossCorrelationTrace rolling_cross_correlation(std::span<const Iteration> iterations,
                                                std::span<const double> x, std::span<const double> y,
                                                std::size_t window) {
  if (window < 3) throw InputError("correlation window must be >= 3");
  if (x.size() != y.size() || x.size() != iterations.size())
    throw InputError("correlation inputs differ in length");
  if (x.size() < window)
    throw InputError("trace has " + std::to_string(x.size()) + " samples, shorter than window " +
                     std::to_string(window));
  CrossCorrelationTrace out;
  out.window = window;
  out.points.reserve(x.size() - window + 1);
  for (std::size_t end = window; end <= x.size(); ++end) {
    const auto p = pearson(x.subspan(end - window, window), y.subspan(end - window, window));
    out.points.push_back({iterations[end - 1], p.r, p.degenerate});
  }
  return out;
}

CrossCorrelationTrace rolling_cross_correlation(const EntropyTrace& trace, std::size_t window) {
  const auto its = trace.iterations();
  const auto xs = trace.s_struct();
  const auto ys = trace.s_sem();
  return rolling_cross_correlation(its, xs, ys, window);
}

TransitionReport detect_transition(const CrossCorrelationTrace& xcorr, std::size_t sustain) {
  if (sustain < 1) throw InputError("sustain must be >= 1");
  const auto& pts = xcorr.points;
  TransitionReport rep;
  for (std::size_t i = 1; i < pts.size(); ++i) {
    if (!(pts[i - 1].r >= 0.0 && pts[i].r < 0.0)) continue;
    std::size_t run = 0;
    while (i + run < pts.size() && pts[i + run].r < 0.0) ++run;
    if (run < sustain) continue;
    rep.transition_iteration = pts[i].iteration;
    rep.sustain_length = run;
    double pre = 0.0, post = 0.0;
    for (std::size_t k = 0; k < i; ++k) pre += pts[k].r;
    for (std::size_t k = i; k < pts.size(); ++k) post += pts[k].r;
    rep.pre_mean_r = pre / static_cast<double>(i);
    rep.post_mean_r = post / static_cast<double>(pts.size() - i);
    return rep;
  }
  double all = 0.0;
  for (const auto& p : pts) all += p.r;
  rep.pre_mean_r = pts.empty() ? 0.0 : all / static_cast<double>(pts.size());
  return rep;
}

}  // namespace graphcrit
