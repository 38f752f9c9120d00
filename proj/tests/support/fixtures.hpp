#pragma once

// Constructed inputs shared by unit and acceptance tests.

#include <cstddef>
#include <vector>

#include "graphcrit/embeddings.hpp"
#include "graphcrit/graph.hpp"
#include "graphcrit/rl.hpp"
#include "graphcrit/rng.hpp"

namespace fixture {

/// Entropy-like traces that move together before `flip` and in opposite
/// directions from `flip` on. Both follow a sinusoid of period 17 samples;
/// after the flip its amplitude is multiplied by `post_gain`.
struct FlipTrace {
  std::vector<graphcrit::Iteration> iterations;
  std::vector<double> s_struct;
  std::vector<double> s_sem;
};
FlipTrace flip_trace(std::size_t n, std::size_t flip, double post_gain);

/// Ten edges: seven between nodes sharing one vector, three between nodes
/// with orthogonal vectors.
struct LabeledGraph {
  graphcrit::GraphSnapshot graph;
  graphcrit::EmbeddingTable embeddings;
};
LabeledGraph three_of_ten_surprising();

/// Episode with random candidate features, actions and rewards.
graphcrit::EpisodeLog random_episode(graphcrit::CounterRng& rng, int steps, int features);

/// max |analytic - central difference| / max(|central difference|, 1e-6) over
/// the gradient components.
double gradient_check(const Eigen::VectorXd& theta, const graphcrit::EpisodeLog& episode, double baseline,
                      double eps);

/// Mean of each full trailing window.
std::vector<double> trailing_mean(const std::vector<double>& x, std::size_t window);

/// Reward on alpha alone with target 1: a distant-pair edge always moves
/// alpha toward the target and a near-pair edge always moves it away.
struct TrainingSetup {
  graphcrit::GrowthConfig env;
  graphcrit::RewardConfig reward;
  graphcrit::TrainOptions options;
};
TrainingSetup alpha_only_training();

}  // namespace fixture
