#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "graphcrit/dynamics.hpp"
#include "graphcrit/edges.hpp"
#include "graphcrit/rl.hpp"
#include "graphcrit/synth.hpp"

namespace graphcrit {

/// Exit codes of the command-line tool.
enum ExitCode : int { kExitOk = 0, kExitInput = 1, kExitInternal = 2 };

struct EmbeddingSource {
  std::filesystem::path embeddings;
  bool fallback = false;
  int fallback_dim = kDefaultEmbeddingDim;
  std::uint64_t seed = 1;
};

struct AnalyzeConfig {
  std::filesystem::path snapshots;
  std::string pattern{kDefaultSeriesPattern};
  EmbeddingSource source;
  std::filesystem::path out = "analysis";
  double threshold = kDefaultSurpriseThreshold;
  std::size_t window = kDefaultWindow;
  std::size_t sustain = kDefaultSustain;
  std::uint64_t louvain_seed = 0;
  double resolution = 1.0;
  std::size_t bins = 20;
  std::size_t max_communities = 20;
  bool normalize_bc = false;
  std::vector<double> sweep = kDefaultSweepGrid;
};

struct SimulateConfig {
  GrowthConfig growth;
  std::filesystem::path out = "corpus";
};

struct RlTrainConfig {
  GrowthConfig env;
  RewardConfig reward;
  TrainOptions train;
  std::filesystem::path out = "rl";
};

struct SweepConfig {
  std::filesystem::path snapshots;
  std::string pattern{kDefaultSeriesPattern};
  EmbeddingSource source;
  std::vector<double> thresholds = kDefaultSweepGrid;
  std::filesystem::path out = "sweep";
};

inline constexpr const char* kEmbeddingsFileName = "embeddings.tsv";
inline constexpr const char* kManifestFileName = "manifest.txt";

// Each command throws InputError / InvariantError on failure; `log` receives warnings.
void cmd_analyze(const AnalyzeConfig& cfg, std::ostream& log);
void cmd_simulate(const SimulateConfig& cfg, std::ostream& log);
void cmd_rl_train(const RlTrainConfig& cfg, std::ostream& log);
void cmd_sweep(const SweepConfig& cfg, std::ostream& log);

/// Parses arguments (with optional --config file), runs the subcommand and
/// maps failures to exit codes with a single-line JSON error on `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace graphcrit
