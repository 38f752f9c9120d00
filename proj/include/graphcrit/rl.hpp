#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "graphcrit/synth.hpp"

namespace graphcrit {

/// Weights and targets of the discovery reward.
struct RewardConfig {
  double lambda_d = 1.0;
  double lambda_se = 0.1;
  double lambda_alpha = 1.0;
  double d_target = -0.03;
  double alpha_target = 0.12;

  void validate() const;
};

/// R = -lambda_d (d - d_target)^2 + lambda_se * s_sem + lambda_alpha (1 - |alpha - alpha_target|)
double reward(double d_t, double s_sem_t, double alpha_t, const RewardConfig& cfg);

/// Action features: normalized endpoint degree, raw cosine, distant-pair indicator, bias.
inline constexpr Eigen::Index kPolicyFeatures = 4;

struct PolicyParams {
  Eigen::VectorXd theta = Eigen::VectorXd::Zero(kPolicyFeatures);
};

/// Softmax over candidates.row(i) . theta, max-subtracted.
Eigen::VectorXd policy_probs(const Eigen::VectorXd& theta, const Eigen::MatrixXd& candidates);
Eigen::VectorXd log_policy_probs(const Eigen::VectorXd& theta, const Eigen::MatrixXd& candidates);

struct EpisodeStep {
  Eigen::MatrixXd candidates;  // one feature row per candidate action
  Eigen::Index action = 0;
  double log_prob = 0.0;
  double reward = 0.0;
};

struct EpisodeLog {
  std::vector<EpisodeStep> steps;

  std::vector<double> rewards() const;
  double mean_reward() const;
};

/// sum_t (R_t - baseline) * log pi_theta(a_t | G_t), with the candidate sets held fixed.
double surrogate_objective(const Eigen::VectorXd& theta, const EpisodeLog& episode, double baseline);
/// Gradient of surrogate_objective: sum_t (R_t - b) (f_{a_t} - E_pi[f]).
Eigen::VectorXd reinforce_gradient(const Eigen::VectorXd& theta, const EpisodeLog& episode, double baseline);

/// theta + lr * reinforce_gradient. Throws InvariantError naming the step on a
/// non-finite gradient term.
PolicyParams reinforce_update(const PolicyParams& params, const EpisodeLog& episode, double learning_rate,
                              double baseline);

struct TrainOptions {
  int episodes = 20;
  int steps_per_episode = 30;
  double learning_rate = 0.05;
  std::uint64_t seed = 1;
  int random_candidates = 8;
  int weighted_candidates = 8;
  std::size_t max_nodes = 300;
  /// A generator node arrives after every this many steps; 0 disables arrivals.
  int arrival_interval = 5;
};

struct TrainingPoint {
  int episode = 0;
  double mean_reward = 0.0;
  double alpha_end = 0.0;
  double d_end = 0.0;  // NaN when both entropies are zero
};

struct TrainResult {
  PolicyParams params;
  std::vector<TrainingPoint> curve;
  std::size_t start_nodes = 0;
};

/// Episodes replay the same generated start graph; each step the policy picks
/// one edge among random pairs and weighted-rule proposals, the reward is
/// computed from exact entropies of the updated graph, and theta is updated
/// once per episode. The baseline for step t is the running mean of R_t over
/// the episodes so far. Proposals at step t come from a stream shared by all
/// episodes; only action sampling differs between episodes.
TrainResult train(const GrowthConfig& env, const RewardConfig& reward_cfg, const TrainOptions& options);

}  // namespace graphcrit
