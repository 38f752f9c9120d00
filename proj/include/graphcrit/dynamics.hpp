#pragma once

#include <optional>
#include <span>
#include <vector>

#include "graphcrit/edges.hpp"
#include "graphcrit/embeddings.hpp"
#include "graphcrit/graph.hpp"
#include "graphcrit/spectral.hpp"

namespace graphcrit {

inline constexpr std::size_t kDefaultWindow = 50;
inline constexpr std::size_t kDefaultSustain = 10;

struct TraceRow {
  EntropySample sample;
  std::size_t n_nodes = 0;
  SurpriseStats surprise;
};

/// One row per snapshot, in iteration order.
struct EntropyTrace {
  double threshold = kDefaultSurpriseThreshold;
  std::vector<TraceRow> rows;

  std::size_t size() const noexcept { return rows.size(); }
  std::vector<Iteration> iterations() const;
  std::vector<double> s_struct() const;
  std::vector<double> s_sem() const;
};

EntropyTrace build_trace(const SnapshotSeries& series, const EmbeddingTable& embeddings,
                         double surprise_threshold = kDefaultSurpriseThreshold);

/// Entropies, D and alpha for one snapshot given its cosine matrix.
TraceRow analyze_snapshot(const GraphSnapshot& g, const Eigen::MatrixXd& cosines, double surprise_threshold);

struct CorrelationPoint {
  Iteration iteration = 0;  // last sample of the window
  double r = 0.0;
  bool degenerate = false;
};

struct CrossCorrelationTrace {
  std::size_t window = kDefaultWindow;
  std::vector<CorrelationPoint> points;
};

/// Lag-0 Pearson r of (x, y) over each run of `window` consecutive samples.
CrossCorrelationTrace rolling_cross_correlation(std::span<const Iteration> iterations,
                                                std::span<const double> x, std::span<const double> y,
                                                std::size_t window);
CrossCorrelationTrace rolling_cross_correlation(const EntropyTrace& trace, std::size_t window = kDefaultWindow);

struct TransitionReport {
  std::optional<Iteration> transition_iteration;
  /// Length of the negative run starting at the transition (0 when none).
  std::size_t sustain_length = 0;
  /// Mean r before / from the transition; with no transition, pre is the mean of all points and post is 0.
  double pre_mean_r = 0.0;
  double post_mean_r = 0.0;
};

/// Earliest point where r drops from >= 0 to < 0 and stays negative for at
/// least `sustain` consecutive points.
TransitionReport detect_transition(const CrossCorrelationTrace& xcorr, std::size_t sustain = kDefaultSustain);

}  // namespace graphcrit
