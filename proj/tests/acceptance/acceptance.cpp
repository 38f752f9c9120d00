// Acceptance gate: one PASS/FAIL line per criterion, non-zero exit if any fails.

#include <sys/wait.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "fixtures.hpp"
#include "graphcrit/dynamics.hpp"
#include "graphcrit/edges.hpp"
#include "graphcrit/rl.hpp"
#include "graphcrit/spectral.hpp"
#include "graphcrit/synth.hpp"
#include "graphcrit/topology.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace graphcrit;
namespace fs = std::filesystem;

namespace {

// Pinned tolerances and limits.
constexpr double kClosedFormTol = 1e-9;
constexpr double kClosedFormSeconds = 1.0;
constexpr int kOracleGraphs = 100;
constexpr std::size_t kOracleMaxNodes = 8;
constexpr double kOracleEntropyTol = 1e-8;
constexpr double kOracleBetweennessTol = 1e-9;
constexpr double kOracleSeconds = 30.0;
constexpr double kIdentityTol = 1e-12;
constexpr int kIdentityPairs = 1000;
constexpr double kAlphaLo = 0.09, kAlphaHi = 0.15;
constexpr std::size_t kSteadyTail = 100;
constexpr double kPipelineSeconds = 300.0;
constexpr std::size_t kFlipSample = 120, kFlipWindow = 50, kFlipSustain = 10;
constexpr long kFlipTol = 25;
constexpr int kGradientTrials = 50;
constexpr double kGradientEps = 1e-5, kGradientTol = 1e-4;
constexpr std::size_t kSmoothWindow = 5;
constexpr double kSmoothDropTol = 2e-3;  // one or two flipped actions in one episode
constexpr double kSmoothMinGain = 0.01;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

struct Gate {
  int failures = 0;
  int index = 0;

  void report(const std::string& name, bool ok, const std::string& detail) {
    ++index;
    std::cout << (ok ? "PASS" : "FAIL") << " [" << index << "] " << name << ": " << detail << std::endl;
    if (!ok) ++failures;
  }

  // A criterion that throws is a failure, not a crash.
  void run(const std::string& name, const std::function<std::pair<bool, std::string>()>& body) {
    try {
      auto [ok, detail] = body();
      report(name, ok, detail);
    } catch (const std::exception& e) {
      report(name, false, std::string("exception: ") + e.what());
    }
  }
};

int run_cli_binary(const std::string& args) {
  const std::string cmd = std::string(GRAPHCRIT_CLI_PATH) + " " + args;
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

// Mean alpha over the last snapshots, from the written corpus with cosines taken directly.
double corpus_tail_alpha(const fs::path& dir, std::size_t tail, double threshold) {
  const auto series = load_series(dir);
  const auto emb = load_embeddings(dir / "embeddings.tsv");
  double sum = 0.0;
  for (std::size_t i = series.size() - tail; i < series.size(); ++i) {
    const auto& g = series[i];
    std::size_t s = 0;
    for (const auto& e : g.edges()) {
      const auto& a = emb.at(g.label(e.u));
      const auto& b = emb.at(g.label(e.v));
      if (a.dot(b) / (a.norm() * b.norm()) < threshold) ++s;
    }
    sum += double(s) / double(g.edge_count());
  }
  return sum / double(tail);
}

bool same_tree(const fs::path& a, const fs::path& b, std::string& first_diff, std::size_t& n_files) {
  std::vector<fs::path> fa, fb;
  for (const auto& e : fs::recursive_directory_iterator(a))
    if (e.is_regular_file()) fa.push_back(fs::relative(e.path(), a));
  for (const auto& e : fs::recursive_directory_iterator(b))
    if (e.is_regular_file()) fb.push_back(fs::relative(e.path(), b));
  std::sort(fa.begin(), fa.end());
  std::sort(fb.begin(), fb.end());
  n_files = fa.size();
  if (fa != fb) {
    first_diff = "file lists differ";
    return false;
  }
  for (const auto& f : fa)
    if (testutil::read_file(a / f) != testutil::read_file(b / f)) {
      first_diff = f.string();
      return false;
    }
  return true;
}

}  // namespace

int main() {
  Gate gate;
  testutil::TempDir work("acceptance");
  const fs::path corpus = work / "corpus";
  const fs::path run_a = work / "analysis_a";
  const fs::path run_b = work / "analysis_b";

  gate.run("closed-form entropy", [] {
    const auto t0 = Clock::now();
    double worst = 0.0;
    for (std::size_t n = 2; n <= 12; ++n)
      worst = std::max(worst, std::abs(structural_entropy(testutil::complete_graph(n)).entropy_nats -
                                       std::log(double(n - 1))));
    const double star = structural_entropy(testutil::make_graph(4, {{0, 1}, {0, 2}, {0, 3}})).entropy_nats;
    const double star_err = std::abs(star - 1.5 * std::log(2.0));
    const double secs = seconds_since(t0);
    return std::pair{worst <= kClosedFormTol && star_err <= kClosedFormTol && secs < kClosedFormSeconds,
                     "K_2..K_12 max err " + sci(worst) + ", star-4 err " + sci(star_err) + " (tol " +
                         sci(kClosedFormTol) + "), " + sci(secs) + " s (limit " + sci(kClosedFormSeconds) + " s)"};
  });

  gate.run("oracle equivalence", [] {
    const auto t0 = Clock::now();
    CounterRng rng = CounterRng::keyed({20240601});
    double worst_s = 0.0, worst_bc = 0.0;
    for (int i = 0; i < kOracleGraphs; ++i) {
      const std::size_t n = 1 + rng.below(kOracleMaxNodes);
      auto g = oracle::random_graph(n, 0.15 + 0.7 * rng.uniform(), rng);
      worst_s = std::max(worst_s, std::abs(structural_entropy(g).entropy_nats - oracle::structural_entropy(g)));
      const auto got = betweenness(g), want = oracle::betweenness(g);
      for (std::size_t u = 0; u < n; ++u) worst_bc = std::max(worst_bc, std::abs(got[u] - want[u]));
    }
    const double secs = seconds_since(t0);
    return std::pair{worst_s <= kOracleEntropyTol && worst_bc <= kOracleBetweennessTol && secs < kOracleSeconds,
                     std::to_string(kOracleGraphs) + " graphs, entropy max err " + sci(worst_s) + " (tol " +
                         sci(kOracleEntropyTol) + "), betweenness max err " + sci(worst_bc) + " (tol " +
                         sci(kOracleBetweennessTol) + "), " + sci(secs) + " s (limit " + sci(kOracleSeconds) + " s)"};
  });

  gate.run("discovery parameter identities", [] {
    CounterRng rng = CounterRng::keyed({4242});
    double worst = 0.0;
    worst = std::max(worst, std::abs(*discovery_parameter(1.0, 0.0) - 1.0));
    worst = std::max(worst, std::abs(*discovery_parameter(0.0, 1.0) + 1.0));
    for (int i = 0; i < kIdentityPairs; ++i) {
      const double a = 8.0 * rng.uniform(), b = 8.0 * rng.uniform();
      worst = std::max(worst, std::abs(*discovery_parameter(a, a)));
      worst = std::max(worst, std::abs(*discovery_parameter(a, b) + *discovery_parameter(b, a)));
    }
    return std::pair{worst <= kIdentityTol, "max deviation " + sci(worst) + " over " + std::to_string(kIdentityPairs) +
                                                " pairs (tol " + sci(kIdentityTol) + ")"};
  });

  // Synthetic corpus used by the next criteria.
  const auto t_pipeline = Clock::now();
  const int sim_code = run_cli_binary("simulate --seed 1 --iterations 500 --surprise-prob 0.12 --centroids 8 --out " +
                                      corpus.string() + " 2>/dev/null");
  const int analyze_code = sim_code == 0 ? run_cli_binary("analyze --snapshots " + corpus.string() + " --embeddings " +
                                                          (corpus / "embeddings.tsv").string() + " --out " +
                                                          run_a.string() + " 2>/dev/null")
                                         : -1;
  const double pipeline_secs = seconds_since(t_pipeline);

  gate.run("surprise classification", [&] {
    auto f = fixture::three_of_ten_surprising();
    const auto c = classify_edges(f.graph, f.embeddings, 0.1);
    const bool exact = c.stats.n_edges == 10 && c.stats.n_surprising == 3 && c.stats.alpha == 0.3;
    if (sim_code != 0) return std::pair{false, std::string("simulate failed")};
    const auto series = load_series(corpus);
    const auto emb = load_embeddings(corpus / "embeddings.tsv");
    std::size_t violations = 0;
    for (const auto& g : series) {
      const auto cls = classify_edges(g, emb, 0.0);
      std::vector<double> cos;
      for (const auto& e : cls.edges) cos.push_back(e.cosine);
      double prev = -1.0;
      for (double t : kDefaultSweepGrid) {
        std::size_t s = 0;
        for (double v : cos) s += v < t;
        const double a = g.edge_count() ? double(s) / double(g.edge_count()) : 0.0;
        if (a < prev) ++violations;
        prev = a;
      }
    }
    // The library's sweep also self-checks monotonicity and throws on violation.
    (void)threshold_sweep(series, emb, kDefaultSweepGrid);
    return std::pair{exact && violations == 0,
                     "constructed alpha " + sci(c.stats.alpha) + " (" + std::to_string(c.stats.n_surprising) + "/" +
                         std::to_string(c.stats.n_edges) + ", expected exactly 0.3); " +
                         std::to_string(violations) + " monotonicity violations over " +
                         std::to_string(series.size()) + " snapshots x " + std::to_string(kDefaultSweepGrid.size()) +
                         " thresholds"};
  });

  gate.run("synthetic criticality demo", [&] {
    if (sim_code != 0 || analyze_code != 0)
      return std::pair{false, "simulate exit " + std::to_string(sim_code) + ", analyze exit " +
                                  std::to_string(analyze_code)};
    GrowthConfig cfg;
    double worst_centroid_cos = 0.0;
    const auto cents = make_centroids(cfg);
    for (std::size_t i = 0; i < cents.size(); ++i)
      for (std::size_t j = i + 1; j < cents.size(); ++j)
        worst_centroid_cos = std::max(worst_centroid_cos, std::abs(cents[i].dot(cents[j])));
    const double alpha = corpus_tail_alpha(corpus, kSteadyTail, 0.1);
    const bool ok = alpha >= kAlphaLo && alpha <= kAlphaHi && pipeline_secs < kPipelineSeconds &&
                    cents.size() >= 8 && worst_centroid_cos < 0.05;
    return std::pair{ok, "mean alpha over last " + std::to_string(kSteadyTail) + " snapshots " + sci(alpha) +
                             " (band [" + sci(kAlphaLo) + ", " + sci(kAlphaHi) + "]), " +
                             std::to_string(cents.size()) + " centroids, max |cos| " + sci(worst_centroid_cos) +
                             ", simulate+analyze " + sci(pipeline_secs) + " s (limit " + sci(kPipelineSeconds) +
                             " s)"};
  });

  gate.run("transition detection", [] {
    const auto flip = fixture::flip_trace(300, kFlipSample, 2.0);
    const auto rep = detect_transition(
        rolling_cross_correlation(flip.iterations, flip.s_struct, flip.s_sem, kFlipWindow), kFlipSustain);
    const auto none = fixture::flip_trace(300, 300, 2.0);
    const auto rep_none = detect_transition(
        rolling_cross_correlation(none.iterations, none.s_struct, none.s_sem, kFlipWindow), kFlipSustain);
    const bool found = rep.transition_iteration.has_value() &&
                       std::abs(*rep.transition_iteration - Iteration(kFlipSample)) <= kFlipTol;
    const bool quiet = !rep_none.transition_iteration.has_value();
    return std::pair{found && quiet,
                     "flip at " + std::to_string(kFlipSample) + " detected at " +
                         (rep.transition_iteration ? std::to_string(*rep.transition_iteration) : "none") + " (tol " +
                         std::to_string(kFlipTol) + "); all-positive trace: " +
                         (quiet ? "none" : std::to_string(*rep_none.transition_iteration))};
  });

  gate.run("Louvain communities", [&] {
    const auto g = testutil::two_cliques(5);
    const auto c = louvain(g, 1.0, 0);
    const auto best = oracle::best_partition(g);
    bool same_split = c.count == 2;
    for (NodeId i = 0; i < g.node_count(); ++i)
      for (NodeId j = 0; j < g.node_count(); ++j)
        same_split &= (c.community[i] == c.community[j]) == (best.community[i] == best.community[j]);
    const double dq = std::abs(c.modularity - best.modularity);

    bool repeatable = true;
    std::string repeat_note = "two-clique graph";
    for (int k = 0; k < 3; ++k) {
      const auto again = louvain(g, 1.0, 0);
      repeatable &= again.community == c.community && again.modularity == c.modularity;
    }
    if (sim_code == 0) {
      const auto series = load_series(corpus);
      const auto first = louvain(series.back(), 1.0, 7);
      for (int k = 0; k < 3; ++k) {
        const auto again = louvain(series.back(), 1.0, 7);
        repeatable &= again.community == first.community && again.modularity == first.modularity;
      }
      repeat_note += " and " + std::to_string(series.back().node_count()) + "-node synthetic graph";
    }
    return std::pair{same_split && best.optimal_count == 1 && dq <= 1e-12 && repeatable,
                     std::to_string(c.count) + " communities, partition " + (same_split ? "matches" : "differs from") +
                         " exhaustive optimum (Q " + sci(c.modularity) + " vs " + sci(best.modularity) + ", |dQ| " +
                         sci(dq) + ", tol 1e-12); fixed-seed reruns on " + repeat_note + ": " +
                         (repeatable ? "identical" : "DIFFER")};
  });

  gate.run("RL gradient check and alpha-only training", [] {
    CounterRng rng = CounterRng::keyed({777});
    double worst = 0.0;
    for (int t = 0; t < kGradientTrials; ++t) {
      const auto ep = fixture::random_episode(rng, 1 + int(rng.below(12)), int(kPolicyFeatures));
      Eigen::VectorXd theta(kPolicyFeatures);
      for (Eigen::Index i = 0; i < kPolicyFeatures; ++i) theta(i) = rng.normal();
      worst = std::max(worst, fixture::gradient_check(theta, ep, 0.5 * rng.normal(), kGradientEps));
    }
    const auto s = fixture::alpha_only_training();
    const auto res = train(s.env, s.reward, s.options);
    std::vector<double> m;
    for (const auto& p : res.curve) m.push_back(p.mean_reward);
    const auto sm = fixture::trailing_mean(m, kSmoothWindow);
    double max_drop = 0.0;
    for (std::size_t i = 1; i < sm.size(); ++i) max_drop = std::max(max_drop, sm[i - 1] - sm[i]);
    const double gain = sm.empty() ? 0.0 : sm.back() - sm.front();
    const bool ok = worst <= kGradientTol && res.curve.size() == 20 && max_drop <= kSmoothDropTol &&
                    gain >= kSmoothMinGain;
    return std::pair{ok, std::to_string(kGradientTrials) + " trials, max relative err " + sci(worst) + " (tol " +
                             sci(kGradientTol) + "); " + std::to_string(res.curve.size()) +
                             " episodes, smoothed reward " + sci(sm.front()) + " -> " + sci(sm.back()) +
                             ", max drop " + sci(max_drop) + " (tol " + sci(kSmoothDropTol) + ")"};
  });

  gate.run("analyze determinism", [&] {
    if (analyze_code != 0) return std::pair{false, std::string("first analyze run failed")};
    const int code = run_cli_binary("analyze --snapshots " + corpus.string() + " --embeddings " +
                                    (corpus / "embeddings.tsv").string() + " --out " + run_b.string() + " 2>/dev/null");
    if (code != 0) return std::pair{false, "second analyze run exited " + std::to_string(code)};
    std::string diff;
    std::size_t n = 0;
    const bool same = same_tree(run_a, run_b, diff, n);
    return std::pair{same, same ? std::to_string(n) + " output files byte-identical" : "differs at " + diff};
  });

  std::cout << (gate.failures == 0 ? "ALL PASS" : std::to_string(gate.failures) + " FAILED") << std::endl;
  return gate.failures == 0 ? 0 : 1;
}
