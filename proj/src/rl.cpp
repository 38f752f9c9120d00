#include "graphcrit/rl.hpp"

#include <cmath>
#include <limits>

#include "graphcrit/error.hpp"
#include "graphcrit/spectral.hpp"

namespace graphcrit {

void RewardConfig::validate() const {
  if (!(lambda_d >= 0.0 && lambda_se >= 0.0 && lambda_alpha >= 0.0))
    throw InputError("reward lambdas must be >= 0");
  if (!(lambda_d > 0.0 || lambda_se > 0.0 || lambda_alpha > 0.0))
    throw InputError("at least one reward lambda must be > 0");
  if (!(d_target >= -1.0 && d_target <= 1.0)) throw InputError("d_target must lie in [-1, 1]");
  if (!(alpha_target >= 0.0 && alpha_target <= 1.0)) throw InputError("alpha_target must lie in [0, 1]");
}

double reward(double d_t, double s_sem_t, double alpha_t, const RewardConfig& cfg) {
  if (!(alpha_t >= 0.0 && alpha_t <= 1.0)) throw InputError("alpha must lie in [0, 1]");
  const double dd = d_t - cfg.d_target;
  return -cfg.lambda_d * dd * dd + cfg.lambda_se * s_sem_t +
         cfg.lambda_alpha * (1.0 - std::abs(alpha_t - cfg.alpha_target));
}

Eigen::VectorXd log_policy_probs(const Eigen::VectorXd& theta, const Eigen::MatrixXd& candidates) {
  if (candidates.rows() == 0) throw InputError("policy needs at least one candidate");
  if (candidates.cols() != theta.size()) throw InputError("candidate features do not match theta");
  Eigen::VectorXd s = candidates * theta;
  s.array() -= s.maxCoeff();
  const double lse = std::log(s.array().exp().sum());
  return s.array() - lse;
}

Eigen::VectorXd policy_probs(const Eigen::VectorXd& theta, const Eigen::MatrixXd& candidates) {
  Eigen::VectorXd p = log_policy_probs(theta, candidates).array().exp();
  return p / p.sum();
}

std::vector<double> EpisodeLog::rewards() const {
  std::vector<double> r;
  r.reserve(steps.size());
  for (const auto& s : steps) r.push_back(s.reward);
  return r;
}

double EpisodeLog::mean_reward() const {
  if (steps.empty()) return 0.0;
  double sum = 0.0;
  for (const auto& s : steps) sum += s.reward;
  return sum / static_cast<double>(steps.size());
}

double surrogate_objective(const Eigen::VectorXd& theta, const EpisodeLog& episode, double baseline) {
  double j = 0.0;
  for (const auto& s : episode.steps) j += (s.reward - baseline) * log_policy_probs(theta, s.candidates)(s.action);
  return j;
}

Eigen::VectorXd reinforce_gradient(const Eigen::VectorXd& theta, const EpisodeLog& episode, double baseline) {
  Eigen::VectorXd grad = Eigen::VectorXd::Zero(theta.size());
  for (std::size_t t = 0; t < episode.steps.size(); ++t) {
    const auto& s = episode.steps[t];
    if (s.action < 0 || s.action >= s.candidates.rows()) throw InputError("episode action out of range");
    const Eigen::VectorXd p = policy_probs(theta, s.candidates);
    // d/dtheta log softmax = f_a - sum_j p_j f_j
    const Eigen::VectorXd score = s.candidates.row(s.action).transpose() - s.candidates.transpose() * p;
    const Eigen::VectorXd term = (s.reward - baseline) * score;
    if (!term.allFinite()) throw InvariantError("non-finite policy gradient at step " + std::to_string(t));
    grad += term;
  }
  return grad;
}

PolicyParams reinforce_update(const PolicyParams& params, const EpisodeLog& episode, double learning_rate,
                              double baseline) {
  if (episode.steps.empty()) throw InputError("cannot update on an empty episode");
  if (!(learning_rate > 0.0)) throw InputError("learning rate must be > 0");
  PolicyParams out = params;
  out.theta += learning_rate * reinforce_gradient(params.theta, episode, baseline);
  if (!out.theta.allFinite()) throw InvariantError("policy parameters became non-finite");
  return out;
}

namespace {

// Mutable graph over the generator's node order; nodes [0, active) are present.
class GrowthEnv {
 public:
  GrowthEnv(const GraphSnapshot& full, const Eigen::MatrixXd& cosines, std::size_t start, double threshold)
      : full_(full), cos_(cosines), threshold_(threshold), n_(full.node_count()),
        adj_(n_ * n_, 0), degree_(n_, 0.0) {
    for (std::size_t i = 0; i < start; ++i) arrive();
  }

  std::size_t active() const { return active_; }
  bool linked(NodeId a, NodeId b) const { return adj_[a * n_ + b] != 0; }
  double degree(NodeId a) const { return degree_[a]; }
  double cosine(NodeId a, NodeId b) const { return cos_(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)); }
  bool can_arrive() const { return active_ < n_; }

  void add_edge(NodeId a, NodeId b) {
    if (a == b || linked(a, b)) return;
    adj_[a * n_ + b] = adj_[b * n_ + a] = 1;
    degree_[a] += 1.0;
    degree_[b] += 1.0;
    ++edges_;
    surprising_ += cosine(a, b) < threshold_;
  }

  // Next generator node joins with the edges the generator gave it.
  void arrive() {
    const NodeId v = active_++;
    for (NodeId u : full_.neighbors(v))
      if (u < v) add_edge(u, v);
    sem_valid_ = false;
  }

  double alpha() const { return edges_ ? static_cast<double>(surprising_) / static_cast<double>(edges_) : 0.0; }

  double s_struct() const {
    const auto n = static_cast<Eigen::Index>(active_);
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index j = 0; j < n; ++j) a(i, j) = adj_[static_cast<std::size_t>(i) * n_ + static_cast<std::size_t>(j)];
    return von_neumann_entropy(normalized_laplacian(a)).entropy_nats;
  }

  double s_sem() {
    if (!sem_valid_) {
      const auto n = static_cast<Eigen::Index>(active_);
      sem_ = semantic_entropy(semantic_adjacency_from_cosines(cos_.topLeftCorner(n, n))).entropy_nats;
      sem_valid_ = true;
    }
    return sem_;
  }

 private:
  const GraphSnapshot& full_;
  const Eigen::MatrixXd& cos_;
  double threshold_;
  std::size_t n_;
  std::vector<char> adj_;
  std::vector<double> degree_;
  std::size_t active_ = 0;
  std::size_t edges_ = 0;
  std::size_t surprising_ = 0;
  double sem_ = 0.0;
  bool sem_valid_ = false;
};

}  // namespace

TrainResult train(const GrowthConfig& env, const RewardConfig& reward_cfg, const TrainOptions& options) {
  env.validate();
  reward_cfg.validate();
  if (options.episodes < 0) throw InputError("episodes must be >= 0");
  if (options.steps_per_episode < 1) throw InputError("steps_per_episode must be >= 1");
  if (!(options.learning_rate >= 0.0)) throw InputError("learning rate must be >= 0");
  if (options.random_candidates < 0 || options.weighted_candidates < 0 ||
      options.random_candidates + options.weighted_candidates < 1)
    throw InputError("need at least one candidate per step");
  if (options.arrival_interval < 0) throw InputError("arrival_interval must be >= 0");

  TrainResult result;
  if (options.episodes == 0) return result;

  const auto grown = generate_series(env);
  const GraphSnapshot& full = grown.series.back();
  const std::size_t arrivals =
      options.arrival_interval > 0 ? static_cast<std::size_t>(options.steps_per_episode / options.arrival_interval) : 0;
  const std::size_t capacity = std::min(full.node_count(), options.max_nodes);
  if (capacity < arrivals + static_cast<std::size_t>(kSeedCliqueSize))
    throw InputError("environment too small: " + std::to_string(capacity) + " nodes for " +
                     std::to_string(arrivals) + " arrivals");
  const std::size_t start = capacity - arrivals;
  result.start_nodes = start;

  const Eigen::MatrixXd cosines = cosine_matrix(grown.embeddings.rows(full.labels()));
  const double thr = env.surprise_threshold;

  std::vector<double> baseline(static_cast<std::size_t>(options.steps_per_episode), 0.0);
  for (int ep = 0; ep < options.episodes; ++ep) {
    GrowthEnv state(full, cosines, start, thr);
    EpisodeLog log;
    for (int step = 0; step < options.steps_per_episode; ++step) {
      // Proposals depend on the step only, so episodes differ through the policy alone.
      CounterRng rng = CounterRng::keyed({options.seed, static_cast<std::uint64_t>(step), 0x726cULL});
      CounterRng act_rng = CounterRng::keyed({options.seed, static_cast<std::uint64_t>(ep),
                                              static_cast<std::uint64_t>(step), 0x616374ULL});
      const std::size_t n = state.active();

      std::vector<std::pair<NodeId, NodeId>> cands;
      for (int c = 0; c < options.random_candidates; ++c) {
        for (int tries = 0; tries < 32; ++tries) {
          const NodeId a = rng.below(n);
          const NodeId b = rng.below(n);
          if (a != b && !state.linked(a, b)) {
            cands.emplace_back(a, b);
            break;
          }
        }
      }
      std::vector<double> deg(n), cos(n);
      std::vector<char> excluded(n);
      for (int c = 0; c < options.weighted_candidates; ++c) {
        const NodeId src = rng.below(n);
        for (NodeId i = 0; i < n; ++i) {
          deg[i] = state.degree(i);
          cos[i] = state.cosine(src, i);
          excluded[i] = (i == src || state.linked(src, i)) ? 1 : 0;
        }
        if (auto tgt = sample_weighted_target(deg, cos, excluded, env, rng)) cands.emplace_back(src, *tgt);
      }
      if (cands.empty()) throw InputError("episode " + std::to_string(ep) + " step " + std::to_string(step) + ": no candidate edges");

      double max_deg = 1.0;
      for (NodeId i = 0; i < n; ++i) max_deg = std::max(max_deg, state.degree(i));
      Eigen::MatrixXd feats(static_cast<Eigen::Index>(cands.size()), kPolicyFeatures);
      for (std::size_t c = 0; c < cands.size(); ++c) {
        const auto [a, b] = cands[c];
        const double cs = state.cosine(a, b);
        const auto r = static_cast<Eigen::Index>(c);
        feats(r, 0) = (state.degree(a) + state.degree(b)) / (2.0 * max_deg);
        feats(r, 1) = cs;
        feats(r, 2) = cs < thr ? 1.0 : 0.0;
        feats(r, 3) = 1.0;
      }

      const Eigen::VectorXd logp = log_policy_probs(result.params.theta, feats);
      double u = act_rng.uniform();
      Eigen::Index action = feats.rows() - 1;
      for (Eigen::Index c = 0; c < feats.rows(); ++c) {
        u -= std::exp(logp(c));
        if (u < 0.0) {
          action = c;
          break;
        }
      }

      state.add_edge(cands[static_cast<std::size_t>(action)].first, cands[static_cast<std::size_t>(action)].second);
      if (options.arrival_interval > 0 && (step + 1) % options.arrival_interval == 0 && state.can_arrive())
        state.arrive();

      double s_struct = 0.0, s_sem = 0.0;
      try {
        s_struct = state.s_struct();
        s_sem = state.s_sem();
      } catch (const std::exception& e) {
        throw InvariantError("episode " + std::to_string(ep) + " step " + std::to_string(step) + ": " + e.what());
      }
      const auto d = discovery_parameter(s_struct, s_sem);
      const double d_val = d.value_or(0.0);
      log.steps.push_back({std::move(feats), action, std::min(0.0, logp(action)),
                           reward(d_val, s_sem, state.alpha(), reward_cfg)});

      if (step + 1 == options.steps_per_episode) {
        TrainingPoint pt;
        pt.episode = ep;
        pt.alpha_end = state.alpha();
        pt.d_end = d ? *d : std::numeric_limits<double>::quiet_NaN();
        result.curve.push_back(pt);
      }
    }
    result.curve.back().mean_reward = log.mean_reward();
    // Per-step running-mean baseline over episodes so far, current one included.
    EpisodeLog centered = log;
    for (std::size_t t = 0; t < log.steps.size(); ++t) {
      baseline[t] += (log.steps[t].reward - baseline[t]) / static_cast<double>(ep + 1);
      centered.steps[t].reward -= baseline[t];
    }
    if (options.learning_rate > 0.0)
      result.params = reinforce_update(result.params, centered, options.learning_rate, 0.0);
  }
  return result;
}

}  // namespace graphcrit
