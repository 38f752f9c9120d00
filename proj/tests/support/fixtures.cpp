#include "fixtures.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace fixture {

FlipTrace flip_trace(std::size_t n, std::size_t flip, double post_gain) {
  FlipTrace t;
  for (std::size_t i = 0; i < n; ++i) {
    const bool after = i >= flip;
    const double s = std::sin(2.0 * std::numbers::pi * double(i) / 17.0) * (after ? post_gain : 1.0);
    t.iterations.push_back(static_cast<graphcrit::Iteration>(i));
    t.s_struct.push_back(3.0 + 0.1 * s);
    t.s_sem.push_back(4.0 + 0.1 * (after ? -s : s));
  }
  return t;
}

LabeledGraph three_of_ten_surprising() {
  graphcrit::GraphBuilder b;
  for (const char* l : {"a0", "a1", "a2", "a3", "a4", "b0", "b1", "b2"}) b.add_node(l);
  for (auto [u, v] : {std::pair{"a0", "a1"}, {"a1", "a2"}, {"a2", "a3"}, {"a3", "a4"}, {"a0", "a2"},
                      {"a1", "a3"}, {"a2", "a4"}, {"a0", "b0"}, {"a1", "b1"}, {"a2", "b2"}})
    b.add_edge(u, v);
  graphcrit::EmbeddingTable t(3);
  for (const char* l : {"a0", "a1", "a2", "a3", "a4"}) t.insert(l, Eigen::Vector3d(1, 0, 0));
  for (const char* l : {"b0", "b1", "b2"}) t.insert(l, Eigen::Vector3d(0, 1, 0));
  return {b.build(0), std::move(t)};
}

graphcrit::EpisodeLog random_episode(graphcrit::CounterRng& rng, int steps, int features) {
  graphcrit::EpisodeLog log;
  for (int t = 0; t < steps; ++t) {
    graphcrit::EpisodeStep s;
    const auto k = static_cast<Eigen::Index>(1 + rng.below(6));
    s.candidates.resize(k, features);
    for (Eigen::Index i = 0; i < k; ++i)
      for (Eigen::Index j = 0; j < features; ++j) s.candidates(i, j) = rng.normal();
    s.action = static_cast<Eigen::Index>(rng.below(static_cast<std::uint64_t>(k)));
    s.reward = rng.normal();
    log.steps.push_back(std::move(s));
  }
  return log;
}

double gradient_check(const Eigen::VectorXd& theta, const graphcrit::EpisodeLog& episode, double baseline,
                      double eps) {
  const Eigen::VectorXd g = graphcrit::reinforce_gradient(theta, episode, baseline);
  double worst = 0.0;
  for (Eigen::Index i = 0; i < theta.size(); ++i) {
    Eigen::VectorXd hi = theta, lo = theta;
    hi(i) += eps;
    lo(i) -= eps;
    const double fd = (graphcrit::surrogate_objective(hi, episode, baseline) -
                       graphcrit::surrogate_objective(lo, episode, baseline)) /
                      (2.0 * eps);
    worst = std::max(worst, std::abs(g(i) - fd) / std::max(std::abs(fd), 1e-6));
  }
  return worst;
}

std::vector<double> trailing_mean(const std::vector<double>& x, std::size_t window) {
  std::vector<double> out;
  for (std::size_t end = window; end <= x.size(); ++end) {
    double s = 0.0;
    for (std::size_t i = end - window; i < end; ++i) s += x[i];
    out.push_back(s / double(window));
  }
  return out;
}

TrainingSetup alpha_only_training() {
  TrainingSetup s;
  s.env.n_iterations = 100;
  s.reward.lambda_d = 0.0;
  s.reward.lambda_se = 0.0;
  s.reward.lambda_alpha = 1.0;
  s.reward.alpha_target = 1.0;
  s.options.episodes = 20;
  s.options.steps_per_episode = 30;
  s.options.learning_rate = 20.0;
  s.options.seed = 1;
  return s;
}

}  // namespace fixture
