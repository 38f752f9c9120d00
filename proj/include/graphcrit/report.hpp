#pragma once

#include <filesystem>
#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "graphcrit/dynamics.hpp"
#include "graphcrit/edges.hpp"
#include "graphcrit/embeddings.hpp"
#include "graphcrit/rl.hpp"
#include "graphcrit/synth.hpp"
#include "graphcrit/topology.hpp"

namespace graphcrit {

inline constexpr std::string_view kToolName = "graphcrit";
inline constexpr std::string_view kToolVersion = "0.1.0";

/// `significant` digits (shortest round-trip form when <= 0); "nan" for NaN.
std::string format_real(double v, int significant = 9);

/// Ordered key/value block written at the top of every output file.
struct Metadata {
  std::vector<std::pair<std::string, std::string>> config;
  std::vector<std::pair<std::string, std::string>> inputs;  // name -> sha256

  void set(std::string key, std::string value);
  void set(std::string key, double value) { set(std::move(key), format_real(value, 0)); }
  void add_input(std::string name, std::string digest) { inputs.emplace_back(std::move(name), std::move(digest)); }
  /// Every line starts with `prefix`.
  void write(std::ostream& out, std::string_view prefix = "# ") const;
};

std::string sha256_hex(std::string_view bytes);
std::string sha256_file(const std::filesystem::path& path);
/// Digest over (file name, content) of the given files, sorted by name.
std::string sha256_files(std::vector<std::filesystem::path> files);

void append_config(Metadata& meta, const GrowthConfig& cfg, const std::string& prefix = {});
void append_config(Metadata& meta, const RewardConfig& cfg);
void append_config(Metadata& meta, const TrainOptions& opt);

// CSV writers. Each writes the metadata block, then the header, then rows.
void write_trace_csv(std::ostream& out, const Metadata& meta, const EntropyTrace& trace);
void write_xcorr_csv(std::ostream& out, const Metadata& meta, const CrossCorrelationTrace& xcorr);
void write_transition_csv(std::ostream& out, const Metadata& meta, const TransitionReport& rep);
void write_surprise_csv(std::ostream& out, const Metadata& meta, const GraphSnapshot& g,
                        const EdgeClassification& cls);
void write_sweep_csv(std::ostream& out, const Metadata& meta, const ThresholdSweep& sweep);

struct NodeMetricsRow {
  std::string label;
  std::size_t degree = 0;
  double betweenness = 0.0;
  double diversity = 0.0;
  std::size_t community = 0;
};
void write_node_metrics_csv(std::ostream& out, const Metadata& meta, const std::vector<NodeMetricsRow>& rows);
void write_histogram_csv(std::ostream& out, const Metadata& meta, const CentroidHistogram& h);
void write_curve_csv(std::ostream& out, const Metadata& meta, const std::vector<TrainingPoint>& curve);

/// Write `content` produced by `fill` to `path`, throwing InputError on I/O failure.
template <class Fill>
void write_file(const std::filesystem::path& path, Fill&& fill);

void write_text_file(const std::filesystem::path& path, std::string_view content);

}  // namespace graphcrit

#include <fstream>

#include "graphcrit/error.hpp"

namespace graphcrit {

template <class Fill>
void write_file(const std::filesystem::path& path, Fill&& fill) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path.string());
  fill(out);
  out.flush();
  if (!out) throw InputError("write failed for " + path.string());
}

}  // namespace graphcrit
