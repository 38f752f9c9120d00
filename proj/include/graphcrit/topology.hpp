#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "graphcrit/embeddings.hpp"
#include "graphcrit/graph.hpp"
#include "graphcrit/stats.hpp"

namespace graphcrit {

/// Exact betweenness, pair-count form: each unordered pair {s,t} contributes
/// sigma_st(u) / sigma_st to every interior node u. Indexed by node.
std::vector<double> betweenness(const GraphSnapshot& g);

/// Rescale to [0,1] by 2 / ((n-1)(n-2)); no-op for n < 3.
std::vector<double> normalize_betweenness(std::vector<double> bc);

/// Mean Euclidean distance over unordered pairs of the node's neighbor
/// embeddings (raw vectors); 0 for degree < 2.
double neighbor_diversity(const GraphSnapshot& g, NodeId u, const EmbeddingTable& embeddings);
double neighbor_diversity(const GraphSnapshot& g, std::string_view label, const EmbeddingTable& embeddings);
std::vector<double> neighbor_diversities(const GraphSnapshot& g, const EmbeddingTable& embeddings);

/// Pearson r between betweenness and neighbor diversity across all nodes.
PearsonResult bc_diversity_correlation(const GraphSnapshot& g, const EmbeddingTable& embeddings);

struct CommunityAssignment {
  std::vector<std::string> labels;     // node order of the snapshot
  std::vector<std::size_t> community;  // contiguous ids from 0, numbered by first appearance
  std::size_t count = 0;
  double modularity = 0.0;

  std::size_t of(std::string_view label) const;
  /// Community ids ordered by descending size, ties by id.
  std::vector<std::size_t> by_size() const;
};

/// Newman-Girvan modularity with resolution gamma.
double modularity(const GraphSnapshot& g, const std::vector<std::size_t>& community, double resolution = 1.0);

/// Louvain: local moves in seeded shuffled node order, then aggregation, until
/// no node moves. Deterministic for a fixed seed.
CommunityAssignment louvain(const GraphSnapshot& g, double resolution = 1.0, std::uint64_t seed = 0);

struct CentroidHistogram {
  std::vector<double> bin_edges;  // n_bins + 1 ascending values over [0, max distance]
  std::vector<std::size_t> counts;
  std::vector<std::string> labels;
  std::vector<double> distances;  // distance of labels[i] from its community centroid
};

/// Distances from community centroids in the 2-D projection, binned into
/// `n_bins` equal-width bins.
CentroidHistogram centroid_distance_histogram(const PcaProjection& proj, const CommunityAssignment& communities,
                                              std::size_t n_bins);

std::map<std::size_t, std::size_t> degree_distribution(const GraphSnapshot& g);

/// Per-node clustering coefficient; 0 for degree < 2.
std::vector<double> local_clustering(const GraphSnapshot& g);
/// Mean of local_clustering over all nodes.
double clustering_coefficient(const GraphSnapshot& g);

}  // namespace graphcrit
