#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include <Eigen/Dense>

namespace graphcrit {

using Iteration = std::int64_t;
using NodeId = std::size_t;

/// Undirected edge between node indices, stored with u < v.
struct Edge {
  NodeId u;
  NodeId v;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Immutable undirected simple graph at one iteration of a series.
///
/// Node order is the insertion order of the source; all matrices and
/// per-node vectors produced by analysis code are indexed by it.
class GraphSnapshot {
 public:
  /// Validates: unique labels, no self-loops, no duplicate edges, endpoints in range.
  GraphSnapshot(Iteration iteration, std::vector<std::string> labels, std::vector<Edge> edges);

  Iteration iteration() const noexcept { return iteration_; }
  std::size_t node_count() const noexcept { return labels_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::string& label(NodeId i) const { return labels_.at(i); }
  std::optional<NodeId> index_of(std::string_view label) const;

  const std::vector<Edge>& edges() const noexcept { return edges_; }
  /// Sorted ascending.
  std::span<const NodeId> neighbors(NodeId i) const { return adjacency_.at(i); }
  std::size_t degree(NodeId i) const { return adjacency_.at(i).size(); }
  bool has_edge(NodeId a, NodeId b) const;

 private:
  Iteration iteration_;
  std::vector<std::string> labels_;
  std::vector<Edge> edges_;
  std::vector<std::vector<NodeId>> adjacency_;
  std::unordered_map<std::string, NodeId> index_;
};

/// Accumulates labels and edges, collapsing duplicates and dropping self-loops.
class GraphBuilder {
 public:
  enum class EdgeOutcome { added, duplicate, self_loop };

  NodeId add_node(std::string_view label);
  EdgeOutcome add_edge(std::string_view a, std::string_view b);
  EdgeOutcome add_edge(NodeId a, NodeId b);

  std::size_t node_count() const noexcept { return labels_.size(); }
  GraphSnapshot build(Iteration iteration) const;

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, NodeId> index_;
  std::vector<Edge> edges_;
  std::unordered_set<std::uint64_t> seen_;
};

struct EdgeListStats {
  std::size_t lines = 0;
  std::size_t dropped_self_loops = 0;
  std::size_t merged_duplicates = 0;
};

/// Tab-separated edge list; '#' lines and blank lines are skipped.
GraphSnapshot parse_edge_list(std::istream& in, Iteration iteration, const std::string& source_name,
                              EdgeListStats* stats = nullptr);
GraphSnapshot load_edge_list(const std::filesystem::path& path, Iteration iteration,
                             EdgeListStats* stats = nullptr);
void write_edge_list(std::ostream& out, const GraphSnapshot& g);
void write_edge_list(const std::filesystem::path& path, const GraphSnapshot& g);

/// Snapshots in strictly ascending iteration order; never empty.
class SnapshotSeries {
 public:
  explicit SnapshotSeries(std::vector<GraphSnapshot> snapshots);

  std::size_t size() const noexcept { return snapshots_.size(); }
  const GraphSnapshot& operator[](std::size_t i) const { return snapshots_.at(i); }
  const GraphSnapshot& front() const { return snapshots_.front(); }
  const GraphSnapshot& back() const { return snapshots_.back(); }
  auto begin() const { return snapshots_.begin(); }
  auto end() const { return snapshots_.end(); }

  /// Union of all labels in first-seen order.
  std::vector<std::string> all_labels() const;
  /// Labels present in some snapshot but absent from the next one, as
  /// "iteration:label" with the iteration where the label is missing.
  std::vector<std::string> vanished_nodes() const;

 private:
  std::vector<GraphSnapshot> snapshots_;
};

inline constexpr std::string_view kDefaultSeriesPattern = "graph_{iter}.edges";

/// Files in `dir` matching `pattern`, keyed by parsed iteration. Throws on
/// two files with the same iteration; may be empty.
std::map<Iteration, std::filesystem::path> list_series_files(const std::filesystem::path& dir,
                                                             std::string_view pattern = kDefaultSeriesPattern);

/// Loads every file in `dir` matching `pattern`, where "{iter}" stands for a
/// run of decimal digits giving the iteration.
SnapshotSeries load_series(const std::filesystem::path& dir,
                           std::string_view pattern = kDefaultSeriesPattern,
                           std::vector<std::string>* warnings = nullptr);

/// Name of the file holding `iteration` under the default pattern.
std::string series_file_name(Iteration iteration, int width = 4);
void write_series(const std::filesystem::path& dir, const SnapshotSeries& series, int width = 4);

struct AdjacencyMatrices {
  Eigen::MatrixXd adjacency;  // symmetric 0/1, zero diagonal
  Eigen::VectorXd degrees;    // row sums
};

AdjacencyMatrices adjacency_and_degrees(const GraphSnapshot& g);

}  // namespace graphcrit
