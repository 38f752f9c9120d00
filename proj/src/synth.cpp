#include "graphcrit/synth.hpp"

#include <algorithm>
#include <cstdio>

#include "graphcrit/error.hpp"

namespace graphcrit {

void GrowthConfig::validate() const {
  if (n_iterations < 1) throw InputError("n_iterations must be >= 1");
  if (nodes_per_iter < 1) throw InputError("nodes_per_iter must be >= 1");
  if (edges_per_node < 1) throw InputError("edges_per_node must be >= 1");
  if (!(pref_weight >= 0.0) || !(sem_weight >= 0.0)) throw InputError("attachment weights must be >= 0");
  if (!(pref_weight + sem_weight > 0.0)) throw InputError("pref_weight + sem_weight must be > 0");
  if (!(surprise_prob >= 0.0 && surprise_prob <= 1.0)) throw InputError("surprise_prob must lie in [0, 1]");
  if (n_centroids < 1) throw InputError("n_centroids must be >= 1");
  if (embed_dim < 2) throw InputError("embed_dim must be >= 2");
  if (!(embed_noise >= 0.0)) throw InputError("embed_noise must be >= 0");
  if (!(surprise_threshold >= -1.0 && surprise_threshold <= 1.0))
    throw InputError("surprise_threshold must lie in [-1, 1]");
}

std::string synth_label(std::size_t index) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "concept_%05zu", index);
  return buf;
}

std::vector<Eigen::VectorXd> make_centroids(const GrowthConfig& config) {
  CounterRng rng = CounterRng::keyed({config.seed, 0x63656e74ULL});
  std::vector<Eigen::VectorXd> out;
  for (int c = 0; c < config.n_centroids; ++c) {
    Eigen::VectorXd v(config.embed_dim);
    for (int i = 0; i < config.embed_dim; ++i) v(i) = rng.normal();
    if (c < config.embed_dim) {
      // Two Gram-Schmidt sweeps for orthogonality to rounding.
      for (int sweep = 0; sweep < 2; ++sweep)
        for (const auto& u : out) v -= u.dot(v) * u;
    }
    v.normalize();
    out.push_back(std::move(v));
  }
  return out;
}

namespace {

Eigen::VectorXd noisy_unit(const Eigen::VectorXd& centroid, double noise, CounterRng& rng) {
  Eigen::VectorXd v = centroid;
  for (Eigen::Index i = 0; i < v.size(); ++i) v(i) += noise * rng.normal();
  const double n = v.norm();
  return n > 0.0 ? Eigen::VectorXd(v / n) : centroid;
}

}  // namespace

std::optional<NodeId> sample_weighted_target(std::span<const double> degrees, std::span<const double> cosines,
                                             std::span<const char> excluded, const GrowthConfig& config,
                                             CounterRng& rng) {
  const std::size_t n = degrees.size();
  std::vector<double> w(n, 0.0);
  double near_total = 0.0, all_total = 0.0;
  std::size_t available = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (excluded[i]) continue;
    ++available;
    w[i] = config.pref_weight * degrees[i] + config.sem_weight * 0.5 * (cosines[i] + 1.0);
    all_total += w[i];
    if (cosines[i] >= config.surprise_threshold) near_total += w[i];
  }
  if (available == 0) return std::nullopt;

  const bool near_only = near_total > 0.0;
  const double total = near_only ? near_total : all_total;
  if (!(total > 0.0)) {
    // All weights zero: uniform over available nodes.
    std::uint64_t pick = rng.below(available);
    for (std::size_t i = 0; i < n; ++i)
      if (!excluded[i] && pick-- == 0) return i;
  }
  double u = rng.uniform() * total;
  std::optional<NodeId> last;
  for (std::size_t i = 0; i < n; ++i) {
    if (excluded[i] || (near_only && cosines[i] < config.surprise_threshold) || w[i] <= 0.0) continue;
    last = i;
    if (u < w[i]) return i;
    u -= w[i];
  }
  return last;
}

std::optional<NodeId> sample_distant_target(std::span<const double> cosines, std::span<const char> excluded,
                                            const GrowthConfig& config, CounterRng& rng) {
  if (cosines.empty()) return std::nullopt;
  for (int attempt = 0; attempt < kSurpriseRetryCap; ++attempt) {
    const auto i = static_cast<std::size_t>(rng.below(cosines.size()));
    if (!excluded[i] && cosines[i] < config.surprise_threshold) return i;
  }
  return std::nullopt;
}

GrowthResult generate_series(const GrowthConfig& config) {
  config.validate();
  const auto centroids = make_centroids(config);
  const auto k = static_cast<std::size_t>(config.n_centroids);

  EmbeddingTable table(config.embed_dim);
  std::vector<Eigen::VectorXd> vecs;  // unit vectors in node order
  std::vector<double> degrees;
  GraphBuilder builder;
  GrowthStats stats;

  auto add_node = [&](Eigen::VectorXd v) {
    const std::string label = synth_label(vecs.size());
    builder.add_node(label);
    table.insert(label, v);
    vecs.push_back(std::move(v));
    degrees.push_back(0.0);
  };

  {
    CounterRng rng = CounterRng::keyed({config.seed, 0, 0x73656564ULL});
    for (int i = 0; i < kSeedCliqueSize; ++i)
      add_node(noisy_unit(centroids[static_cast<std::size_t>(i) % k], config.embed_noise, rng));
    for (NodeId a = 0; a < kSeedCliqueSize; ++a)
      for (NodeId b = a + 1; b < kSeedCliqueSize; ++b) {
        builder.add_edge(a, b);
        degrees[a] += 1.0;
        degrees[b] += 1.0;
      }
  }

  std::vector<GraphSnapshot> snaps;
  snaps.reserve(static_cast<std::size_t>(config.n_iterations));
  std::vector<double> cos;
  std::vector<char> excluded;
  for (int t = 1; t <= config.n_iterations; ++t) {
    for (int j = 0; j < config.nodes_per_iter; ++j) {
      CounterRng rng = CounterRng::keyed({config.seed, static_cast<std::uint64_t>(t), static_cast<std::uint64_t>(j)});
      const std::size_t existing = vecs.size();
      Eigen::VectorXd v = noisy_unit(centroids[rng.below(k)], config.embed_noise, rng);

      cos.resize(existing);
      for (std::size_t i = 0; i < existing; ++i) cos[i] = std::clamp(v.dot(vecs[i]), -1.0, 1.0);
      excluded.assign(existing, 0);

      std::vector<NodeId> targets;
      const std::size_t m = std::min(static_cast<std::size_t>(config.edges_per_node), existing);
      for (std::size_t e = 0; e < m; ++e) {
        std::optional<NodeId> target;
        if (rng.uniform() < config.surprise_prob) {
          ++stats.surprise_attempts;
          target = sample_distant_target(cos, excluded, config, rng);
          if (target) ++stats.surprise_edges;
          else ++stats.surprise_fallbacks;
        }
        if (!target) {
          target = sample_weighted_target(degrees, cos, excluded, config, rng);
          // No near target left: keep the node attached but add no further stray distant edges.
          if (target && cos[*target] < config.surprise_threshold && !targets.empty()) break;
        }
        if (!target) break;
        excluded[*target] = 1;
        targets.push_back(*target);
      }

      add_node(std::move(v));
      const NodeId self = existing;
      for (NodeId tgt : targets) {
        builder.add_edge(self, tgt);
        degrees[self] += 1.0;
        degrees[tgt] += 1.0;
      }
    }
    snaps.push_back(builder.build(t));
  }
  return {SnapshotSeries(std::move(snaps)), std::move(table), stats};
}

}  // namespace graphcrit
