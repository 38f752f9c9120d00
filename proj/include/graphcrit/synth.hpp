#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "graphcrit/embeddings.hpp"
#include "graphcrit/graph.hpp"
#include "graphcrit/rng.hpp"

namespace graphcrit {

struct GrowthConfig {
  std::uint64_t seed = 1;
  int n_iterations = 500;
  int nodes_per_iter = 1;
  int edges_per_node = 2;        // m
  double pref_weight = 1.0;      // weight on target degree
  double sem_weight = 1.0;       // weight on scaled similarity to the target
  double surprise_prob = 0.12;   // q: chance an edge is a long-range link
  int n_centroids = 8;
  int embed_dim = kDefaultEmbeddingDim;
  double embed_noise = 0.02;     // per-coordinate Gaussian sd around the centroid
  double surprise_threshold = 0.1;  // cosine below which a target counts as distant

  /// Throws InputError when a field is out of range.
  void validate() const;
};

inline constexpr int kSurpriseRetryCap = 64;
inline constexpr int kSeedCliqueSize = 4;

struct GrowthStats {
  std::size_t surprise_attempts = 0;
  std::size_t surprise_edges = 0;
  /// Surprise attempts that exhausted the retry cap and used the weighted rule.
  std::size_t surprise_fallbacks = 0;
};

struct GrowthResult {
  SnapshotSeries series;
  EmbeddingTable embeddings;
  GrowthStats stats;
};

/// Seed K4, then per iteration `nodes_per_iter` arrivals, each attaching up to
/// `edges_per_node` edges by the surprise or weighted rule. A weighted draw that
/// finds no near target ends the node's attachment unless it has no edge yet.
/// One snapshot per iteration.
GrowthResult generate_series(const GrowthConfig& config);

/// Label of the i-th node created by the generator.
std::string synth_label(std::size_t index);

/// Draw a target for a new edge from `source` under the weighted rule:
/// weight = pref_weight * degree + sem_weight * (cos + 1) / 2, restricted to
/// targets with cos >= surprise_threshold when any carry positive weight.
/// `cosines[i]` is the cosine between the source and node i; `excluded[i]`
/// marks nodes that may not be chosen. Returns nullopt when none is eligible.
std::optional<NodeId> sample_weighted_target(std::span<const double> degrees, std::span<const double> cosines,
                                             std::span<const char> excluded, const GrowthConfig& config,
                                             CounterRng& rng);

/// Uniformly random distant target (cos < surprise_threshold) by rejection, at
/// most kSurpriseRetryCap tries.
std::optional<NodeId> sample_distant_target(std::span<const double> cosines, std::span<const char> excluded,
                                            const GrowthConfig& config, CounterRng& rng);

/// Unit-norm cluster centres; exactly orthogonal when n_centroids <= embed_dim.
std::vector<Eigen::VectorXd> make_centroids(const GrowthConfig& config);

}  // namespace graphcrit
