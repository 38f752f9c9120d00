#include "graphcrit/edges.hpp"

#include <algorithm>

#include "graphcrit/error.hpp"

namespace graphcrit {

namespace {

void check_threshold(double t) {
  if (!(t >= -1.0 && t <= 1.0)) throw InputError("similarity threshold must lie in [-1, 1]");
}

std::vector<double> edge_cosines(const GraphSnapshot& g, const EmbeddingTable& embeddings) {
  embeddings.require_all(g.labels(), "snapshot " + std::to_string(g.iteration()));
  std::vector<double> out;
  out.reserve(g.edge_count());
  for (const auto& e : g.edges())
    out.push_back(cosine(embeddings.at(g.label(e.u)), embeddings.at(g.label(e.v))));
  return out;
}

}  // namespace

SurpriseStats summarize(Iteration iteration, std::size_t n_edges, std::size_t n_surprising,
                        double threshold) {
  if (n_surprising > n_edges) throw InvariantError("more surprising edges than edges");
  SurpriseStats s;
  s.iteration = iteration;
  s.n_edges = n_edges;
  s.n_surprising = n_surprising;
  s.alpha = n_edges > 0 ? static_cast<double>(n_surprising) / static_cast<double>(n_edges) : 0.0;
  s.threshold = threshold;
  return s;
}

EdgeClassification classify_edges(const GraphSnapshot& g, const EmbeddingTable& embeddings,
                                  double threshold) {
  check_threshold(threshold);
  const auto cosines = edge_cosines(g, embeddings);
  EdgeClassification out;
  out.edges.reserve(cosines.size());
  std::size_t surprising = 0;
  for (std::size_t i = 0; i < cosines.size(); ++i) {
    const bool s = cosines[i] < threshold;
    surprising += s;
    out.edges.push_back({g.edges()[i], cosines[i], s});
  }
  out.stats = summarize(g.iteration(), g.edge_count(), surprising, threshold);
  return out;
}

ThresholdSweep threshold_sweep(const SnapshotSeries& series, const EmbeddingTable& embeddings,
                               std::vector<double> thresholds) {
  if (thresholds.empty()) throw InputError("threshold sweep needs at least one threshold");
  for (double t : thresholds) check_threshold(t);
  std::sort(thresholds.begin(), thresholds.end());
  thresholds.erase(std::unique(thresholds.begin(), thresholds.end()), thresholds.end());

  ThresholdSweep sweep;
  sweep.thresholds = thresholds;
  for (const auto& g : series) {
    auto cosines = edge_cosines(g, embeddings);
    std::sort(cosines.begin(), cosines.end());
    std::vector<double> row;
    row.reserve(thresholds.size());
    for (double t : thresholds) {
      const auto n_s = static_cast<std::size_t>(std::lower_bound(cosines.begin(), cosines.end(), t) - cosines.begin());
      row.push_back(summarize(g.iteration(), cosines.size(), n_s, t).alpha);
    }
    for (std::size_t k = 1; k < row.size(); ++k)
      if (row[k] < row[k - 1])
        throw InvariantError("alpha decreased with threshold at iteration " + std::to_string(g.iteration()));
    sweep.iterations.push_back(g.iteration());
    sweep.alphas.push_back(std::move(row));
  }
  return sweep;
}

}  // namespace graphcrit
