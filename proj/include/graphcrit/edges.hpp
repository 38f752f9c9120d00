#pragma once

#include <vector>

#include "graphcrit/embeddings.hpp"
#include "graphcrit/graph.hpp"

namespace graphcrit {

inline constexpr double kDefaultSurpriseThreshold = 0.1;
inline const std::vector<double> kDefaultSweepGrid = {0.05, 0.10, 0.15, 0.20, 0.30};

struct SurpriseStats {
  Iteration iteration = 0;
  std::size_t n_edges = 0;
  std::size_t n_surprising = 0;
  double alpha = 0.0;
  double threshold = kDefaultSurpriseThreshold;
};

struct EdgeFlag {
  Edge edge;
  double cosine = 0.0;
  bool surprising = false;
};

struct EdgeClassification {
  std::vector<EdgeFlag> edges;  // same order as GraphSnapshot::edges()
  SurpriseStats stats;
};

/// An edge is surprising iff the raw cosine of its endpoint embeddings is
/// strictly below `threshold`.
EdgeClassification classify_edges(const GraphSnapshot& g, const EmbeddingTable& embeddings,
                                  double threshold = kDefaultSurpriseThreshold);

/// N_s / N, or 0 for an edgeless graph.
SurpriseStats summarize(Iteration iteration, std::size_t n_edges, std::size_t n_surprising,
                        double threshold);

struct ThresholdSweep {
  std::vector<double> thresholds;      // ascending, unique
  std::vector<Iteration> iterations;
  std::vector<std::vector<double>> alphas;  // [snapshot][threshold]
};

/// Alpha for every (snapshot, threshold) pair. Throws InvariantError if alpha
/// ever decreases with the threshold.
ThresholdSweep threshold_sweep(const SnapshotSeries& series, const EmbeddingTable& embeddings,
                               std::vector<double> thresholds);

}  // namespace graphcrit
