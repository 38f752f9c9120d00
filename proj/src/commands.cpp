#include "graphcrit/commands.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "graphcrit/error.hpp"
#include "graphcrit/report.hpp"
#include "graphcrit/spectral.hpp"
#include "graphcrit/svg.hpp"
#include "graphcrit/topology.hpp"

namespace graphcrit {

namespace fs = std::filesystem;

namespace {

std::string join_reals(const std::vector<double>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + format_real(v[i], 0);
  return s;
}

std::string padded(Iteration it, int width) {
  std::string d = std::to_string(it);
  if (static_cast<int>(d.size()) < width) d.insert(0, static_cast<std::size_t>(width) - d.size(), '0');
  return d;
}

int iteration_width(Iteration max_iteration) {
  return std::max<int>(4, static_cast<int>(std::to_string(max_iteration).size()));
}

void prepare_out_dir(const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec || !fs::is_directory(dir)) throw InputError("cannot create output directory " + dir.string());
}

struct LoadedInputs {
  SnapshotSeries series;
  EmbeddingTable embeddings;
};

LoadedInputs load_inputs(const fs::path& snapshots, const std::string& pattern, const EmbeddingSource& src,
                         Metadata& meta, std::ostream& log) {
  if (snapshots.empty()) throw InputError("--snapshots DIR is required");
  if (src.embeddings.empty() && !src.fallback)
    throw InputError("no embedding file: pass --embeddings FILE or --fallback-embeddings");
  if (!src.embeddings.empty() && src.fallback)
    throw InputError("--embeddings and --fallback-embeddings are mutually exclusive");

  std::vector<std::string> warnings;
  SnapshotSeries series = load_series(snapshots, pattern, &warnings);
  for (const auto& w : warnings) log << "warning: " << w << '\n';

  std::vector<fs::path> files;
  for (const auto& [it, p] : list_series_files(snapshots, pattern)) files.push_back(p);

  meta.set("snapshots", snapshots.generic_string());
  meta.set("pattern", pattern);
  meta.add_input("snapshots", sha256_files(files));
  if (src.fallback) {
    meta.set("embeddings", "fallback");
    meta.set("fallback-dim", std::to_string(src.fallback_dim));
    meta.set("seed", std::to_string(src.seed));
    const auto labels = series.all_labels();
    return {std::move(series), fallback_table(labels, src.fallback_dim, src.seed)};
  }
  meta.set("embeddings", src.embeddings.generic_string());
  meta.add_input("embeddings", sha256_file(src.embeddings));
  return {std::move(series), load_embeddings(src.embeddings)};
}

template <class Writer>
void emit(const fs::path& path, Writer&& writer) {
  write_file(path, std::forward<Writer>(writer));
}

}  // namespace

void cmd_analyze(const AnalyzeConfig& cfg, std::ostream& log) {
  Metadata meta;
  auto [series, emb] = load_inputs(cfg.snapshots, cfg.pattern, cfg.source, meta, log);
  meta.set("threshold", cfg.threshold);
  meta.set("window", std::to_string(cfg.window));
  meta.set("sustain", std::to_string(cfg.sustain));
  meta.set("louvain-seed", std::to_string(cfg.louvain_seed));
  meta.set("resolution", cfg.resolution);
  meta.set("bins", std::to_string(cfg.bins));
  meta.set("max-communities", std::to_string(cfg.max_communities));
  meta.set("normalize-bc", cfg.normalize_bc ? "true" : "false");
  meta.set("sweep", join_reals(cfg.sweep));
  meta.set("entropy-units", "nats");
  meta.set("correlation", "windowed lag-0 pearson");

  if (cfg.window < 3) throw InputError("--window must be >= 3");
  if (cfg.sustain < 1) throw InputError("--sustain must be >= 1");
  if (cfg.bins < 1) throw InputError("--bins must be >= 1");

  prepare_out_dir(cfg.out);
  const fs::path& out = cfg.out;

  // Entropy dynamics.
  const EntropyTrace trace = build_trace(series, emb, cfg.threshold);
  CrossCorrelationTrace xcorr;
  xcorr.window = cfg.window;
  if (trace.size() >= cfg.window) {
    xcorr = rolling_cross_correlation(trace, cfg.window);
  } else {
    log << "warning: " << trace.size() << " snapshots is fewer than --window " << cfg.window
        << "; cross-correlation is empty\n";
  }
  const TransitionReport transition = detect_transition(xcorr, cfg.sustain);

  emit(out / "trace.csv", [&](std::ostream& o) { write_trace_csv(o, meta, trace); });
  emit(out / "xcorr.csv", [&](std::ostream& o) { write_xcorr_csv(o, meta, xcorr); });
  emit(out / "transition.csv", [&](std::ostream& o) { write_transition_csv(o, meta, transition); });

  // Surprising edges per snapshot, threshold sensitivity, BC-diversity per snapshot.
  const fs::path surprise_dir = out / "surprise";
  prepare_out_dir(surprise_dir);
  const int width = iteration_width(series.back().iteration());
  std::vector<double> bc_iter, bc_r;
  std::ostringstream bc_csv;
  meta.write(bc_csv);
  bc_csv << "iteration,pearson_r,degenerate\n";
  for (const auto& g : series) {
    const auto cls = classify_edges(g, emb, cfg.threshold);
    emit(surprise_dir / ("surprise_" + padded(g.iteration(), width) + ".csv"),
         [&](std::ostream& o) { write_surprise_csv(o, meta, g, cls); });
    if (g.node_count() >= 3) {
      const auto r = bc_diversity_correlation(g, emb);
      bc_csv << g.iteration() << ',' << format_real(r.r) << ',' << (r.degenerate ? 1 : 0) << '\n';
      bc_iter.push_back(static_cast<double>(g.iteration()));
      bc_r.push_back(r.r);
    }
  }
  write_text_file(out / "bc_diversity.csv", bc_csv.str());
  const auto sweep = threshold_sweep(series, emb, cfg.sweep);
  emit(out / "sweep.csv", [&](std::ostream& o) { write_sweep_csv(o, meta, sweep); });

  // Structure of the final snapshot.
  const GraphSnapshot& last = series.back();
  auto bc = betweenness(last);
  if (cfg.normalize_bc) bc = normalize_betweenness(std::move(bc));
  const auto div = neighbor_diversities(last, emb);
  const auto comm = louvain(last, cfg.resolution, cfg.louvain_seed);
  std::vector<NodeMetricsRow> rows;
  rows.reserve(last.node_count());
  for (NodeId i = 0; i < last.node_count(); ++i)
    rows.push_back({last.label(i), last.degree(i), bc[i], div[i], comm.community[i]});
  emit(out / "node_metrics.csv", [&](std::ostream& o) { write_node_metrics_csv(o, meta, rows); });

  {
    std::ostringstream dd;
    meta.write(dd);
    dd << "degree,count\n";
    for (const auto& [k, n] : degree_distribution(last)) dd << k << ',' << n << '\n';
    write_text_file(out / "degree_distribution.csv", dd.str());
  }

  std::vector<svg::ScatterPoint> scatter_pts;
  std::string hist_note = "n/a";
  if (last.node_count() >= 3) {
    const auto proj = pca_2d(emb, last.labels());
    const auto hist = centroid_distance_histogram(proj, comm, cfg.bins);
    emit(out / "centroid_histogram.csv", [&](std::ostream& o) { write_histogram_csv(o, meta, hist); });

    const auto ranked = comm.by_size();
    std::vector<std::size_t> shown_rank(comm.count, SIZE_MAX);
    for (std::size_t r = 0; r < ranked.size() && r < cfg.max_communities; ++r) shown_rank[ranked[r]] = r;
    std::ostringstream pca;
    meta.write(pca);
    pca << "# explained_variance " << format_real(proj.explained_variance[0]) << ' '
        << format_real(proj.explained_variance[1]) << '\n';
    pca << "label,pc1,pc2,community,centroid_distance\n";
    for (std::size_t i = 0; i < proj.labels.size(); ++i) {
      const auto ri = static_cast<Eigen::Index>(i);
      pca << proj.labels[i] << ',' << format_real(proj.coordinates(ri, 0)) << ','
          << format_real(proj.coordinates(ri, 1)) << ',' << comm.community[i] << ',' << format_real(hist.distances[i])
          << '\n';
      if (shown_rank[comm.community[i]] != SIZE_MAX)
        scatter_pts.push_back({proj.coordinates(ri, 0), proj.coordinates(ri, 1), shown_rank[comm.community[i]]});
    }
    write_text_file(out / "pca.csv", pca.str());
    write_text_file(out / "pca_communities.svg",
                    svg::scatter(meta, "Embedding PCA by community (largest " + std::to_string(cfg.max_communities) + ")",
                                 "PC1", "PC2", scatter_pts));
    write_text_file(out / "centroid_histogram.svg",
                    svg::histogram(meta, "Distance from community centroid (PCA space)", "distance",
                                   hist.bin_edges, hist.counts));
  } else {
    log << "warning: final snapshot has fewer than 3 nodes; skipping PCA and centroid histogram\n";
    CentroidHistogram empty;
    empty.bin_edges = {0.0};
    emit(out / "centroid_histogram.csv", [&](std::ostream& o) { write_histogram_csv(o, meta, empty); });
  }

  // Summary.
  {
    std::ostringstream s;
    meta.write(s);
    s << "key,value\n";
    s << "snapshots," << series.size() << '\n';
    s << "final_iteration," << last.iteration() << '\n';
    s << "final_nodes," << last.node_count() << '\n';
    s << "final_edges," << last.edge_count() << '\n';
    const auto& lr = trace.rows.back();
    s << "final_s_struct," << format_real(lr.sample.s_struct) << '\n';
    s << "final_s_sem," << format_real(lr.sample.s_sem) << '\n';
    s << "final_d_param," << (lr.sample.d_param ? format_real(*lr.sample.d_param) : "nan") << '\n';
    s << "final_alpha," << format_real(lr.surprise.alpha) << '\n';
    const std::size_t tail = std::min<std::size_t>(100, trace.size());
    double tail_alpha = 0.0;
    for (std::size_t i = trace.size() - tail; i < trace.size(); ++i) tail_alpha += trace.rows[i].surprise.alpha;
    s << "tail_mean_alpha," << format_real(tail_alpha / static_cast<double>(tail)) << '\n';
    s << "tail_length," << tail << '\n';
    s << "transition_iteration,"
      << (transition.transition_iteration ? std::to_string(*transition.transition_iteration) : "none") << '\n';
    s << "clustering_coefficient," << format_real(clustering_coefficient(last)) << '\n';
    s << "communities," << comm.count << '\n';
    s << "modularity," << format_real(comm.modularity) << '\n';
    write_text_file(out / "summary.csv", s.str());
  }

  // Charts.
  std::vector<double> it, s_struct, s_sem, d, n_edges, n_surp, alpha;
  for (const auto& r : trace.rows) {
    it.push_back(static_cast<double>(r.sample.iteration));
    s_struct.push_back(r.sample.s_struct);
    s_sem.push_back(r.sample.s_sem);
    d.push_back(r.sample.d_param.value_or(std::numeric_limits<double>::quiet_NaN()));
    n_edges.push_back(static_cast<double>(r.surprise.n_edges));
    n_surp.push_back(static_cast<double>(r.surprise.n_surprising));
    alpha.push_back(r.surprise.alpha);
  }
  std::vector<double> xc_it, xc_r;
  for (const auto& p : xcorr.points) {
    xc_it.push_back(static_cast<double>(p.iteration));
    xc_r.push_back(p.r);
  }
  auto chart = [&](const char* file, const std::string& title, const std::string& y_label,
                   std::vector<svg::LineSeries> ls) {
    write_text_file(out / file, svg::line_chart(meta, title, "iteration", y_label, ls));
  };
  chart("structural_entropy.svg", "Structural (Von Neumann) entropy", "nats", {{"S_struct", it, s_struct}});
  chart("semantic_entropy.svg", "Semantic entropy", "nats", {{"S_sem", it, s_sem}});
  chart("entropy_correlation.svg", "Rolling correlation of structural and semantic entropy (window " +
                                       std::to_string(cfg.window) + ")",
        "pearson r", {{"r", xc_it, xc_r}});
  chart("discovery_parameter.svg", "Critical discovery parameter D", "D", {{"D", it, d}});
  chart("edge_counts.svg", "Total and surprising edges", "edges",
        {{"all edges", it, n_edges}, {"surprising edges", it, n_surp}});
  chart("surprise_fraction.svg", "Fraction of surprising edges", "alpha", {{"alpha", it, alpha}});
  chart("bc_diversity.svg", "Betweenness vs. neighbor diversity correlation", "pearson r",
        {{"r", bc_iter, bc_r}});
}

void cmd_simulate(const SimulateConfig& cfg, std::ostream& log) {
  cfg.growth.validate();
  prepare_out_dir(cfg.out);
  const auto result = generate_series(cfg.growth);

  Metadata meta;
  append_config(meta, cfg.growth);
  const int width = iteration_width(cfg.growth.n_iterations);
  for (const auto& g : result.series) {
    emit(cfg.out / series_file_name(g.iteration(), width), [&](std::ostream& o) {
      meta.write(o);
      write_edge_list(o, g);
    });
  }
  write_embeddings(cfg.out / kEmbeddingsFileName, result.embeddings);

  std::ostringstream m;
  meta.write(m);
  m << "# surprise attempts " << result.stats.surprise_attempts << ", placed " << result.stats.surprise_edges
    << ", fell back to weighted rule " << result.stats.surprise_fallbacks << '\n';
  for (const auto& [k, v] : meta.config) m << k << " = " << v << '\n';
  write_text_file(cfg.out / kManifestFileName, m.str());
  if (result.stats.surprise_fallbacks > 0)
    log << "warning: " << result.stats.surprise_fallbacks << " surprise edge(s) fell back to the weighted rule\n";
}

void cmd_rl_train(const RlTrainConfig& cfg, std::ostream& /*log*/) {
  prepare_out_dir(cfg.out);
  const auto result = train(cfg.env, cfg.reward, cfg.train);
  Metadata meta;
  append_config(meta, cfg.env, "env-");
  append_config(meta, cfg.reward);
  append_config(meta, cfg.train);
  emit(cfg.out / "curve.csv", [&](std::ostream& o) { write_curve_csv(o, meta, result.curve); });
  emit(cfg.out / "theta.csv", [&](std::ostream& o) {
    meta.write(o);
    static constexpr const char* names[] = {"degree", "cosine", "distant", "bias"};
    o << "feature,value\n";
    for (Eigen::Index i = 0; i < result.params.theta.size(); ++i)
      o << names[i] << ',' << format_real(result.params.theta(i), 17) << '\n';
  });
}

void cmd_sweep(const SweepConfig& cfg, std::ostream& log) {
  Metadata meta;
  auto [series, emb] = load_inputs(cfg.snapshots, cfg.pattern, cfg.source, meta, log);
  meta.set("thresholds", join_reals(cfg.thresholds));
  prepare_out_dir(cfg.out);
  const auto sweep = threshold_sweep(series, emb, cfg.thresholds);
  emit(cfg.out / "sweep.csv", [&](std::ostream& o) { write_sweep_csv(o, meta, sweep); });
}

// --- command line ------------------------------------------------------------

namespace {

std::string trim(std::string s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

// Flat "key = value" file; values fill options not given on the command line.
void apply_config_file(CLI::App* sub, const fs::path& file) {
  std::ifstream in(file);
  if (!in) throw InputError("cannot open config file " + file.string());
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string line = trim(raw);
    if (line.empty() || line[0] == '#' || line[0] == ';') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ParseError(file.string(), line_no, "expected 'key = value'");
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (value.size() >= 2 && value.front() == '"' && value.back() == '"') value = value.substr(1, value.size() - 2);
    if (key.rfind("--", 0) == 0) key = key.substr(2);
    if (key == "config") throw ParseError(file.string(), line_no, "nested config files are not supported");
    CLI::Option* opt = sub->get_option_no_throw("--" + key);
    if (!opt) throw ParseError(file.string(), line_no, "unknown key '" + key + "' for " + sub->get_name());
    if (opt->count() > 0) continue;
    try {
      opt->add_result(value);
      opt->run_callback();
    } catch (const CLI::Error& e) {
      throw ParseError(file.string(), line_no, "bad value for '" + key + "': " + e.what());
    }
  }
}

void add_source_options(CLI::App* sub, EmbeddingSource& src) {
  sub->add_option("--embeddings", src.embeddings, "Embedding file (#dim header, label<TAB>v1,...,vd)");
  sub->add_flag("--fallback-embeddings", src.fallback, "Use deterministic hash-seeded embeddings");
  sub->add_option("--fallback-dim", src.fallback_dim, "Dimension of fallback embeddings")->capture_default_str();
  sub->add_option("--seed", src.seed, "Seed for fallback embeddings")->capture_default_str();
}

void add_growth_options(CLI::App* sub, GrowthConfig& g, const std::string& prefix) {
  const std::string p = "--" + prefix;
  sub->add_option(p + "seed", g.seed, "Generator seed")->capture_default_str();
  sub->add_option(p + "iterations", g.n_iterations, "Growth iterations (one snapshot each)")->capture_default_str();
  sub->add_option(p + "nodes-per-iter", g.nodes_per_iter, "New nodes per iteration")->capture_default_str();
  sub->add_option(p + "edges-per-node", g.edges_per_node, "Edges attached per new node (m)")->capture_default_str();
  sub->add_option(p + "pref-weight", g.pref_weight, "Degree weight of the attachment rule")->capture_default_str();
  sub->add_option(p + "sem-weight", g.sem_weight, "Similarity weight of the attachment rule")->capture_default_str();
  sub->add_option(p + "surprise-prob", g.surprise_prob, "Probability an edge targets a distant node (q)")
      ->capture_default_str();
  sub->add_option(p + "centroids", g.n_centroids, "Number of semantic clusters")->capture_default_str();
  sub->add_option(p + "embed-dim", g.embed_dim, "Embedding dimension")->capture_default_str();
  sub->add_option(p + "embed-noise", g.embed_noise, "Per-coordinate noise around the cluster centre")
      ->capture_default_str();
  sub->add_option(p + "surprise-threshold", g.surprise_threshold, "Cosine below which a target is distant")
      ->capture_default_str();
}

std::string error_line(const char* kind, const std::string& message) {
  nlohmann::json j;
  j["error"] = kind;
  j["message"] = message;
  return j.dump();
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Structural and semantic criticality analysis of evolving graphs", "graphcrit"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kToolVersion));

  AnalyzeConfig analyze;
  SimulateConfig simulate;
  RlTrainConfig rl;
  SweepConfig sweep;
  fs::path analyze_cfg, simulate_cfg, rl_cfg, sweep_cfg;

  auto* a = app.add_subcommand("analyze", "Entropy dynamics, surprising edges, topology and charts");
  a->add_option("--config", analyze_cfg, "Flat key = value file of flag values");
  a->add_option("--snapshots", analyze.snapshots, "Directory of edge-list snapshots");
  a->add_option("--pattern", analyze.pattern, "Snapshot file name pattern")->capture_default_str();
  add_source_options(a, analyze.source);
  a->add_option("--out", analyze.out, "Output directory")->capture_default_str();
  a->add_option("--threshold", analyze.threshold, "Surprising-edge cosine threshold")->capture_default_str();
  a->add_option("--window", analyze.window, "Rolling correlation window")->capture_default_str();
  a->add_option("--sustain", analyze.sustain, "Points a negative correlation must persist")->capture_default_str();
  a->add_option("--louvain-seed", analyze.louvain_seed, "Louvain node-order seed")->capture_default_str();
  a->add_option("--resolution", analyze.resolution, "Louvain resolution")->capture_default_str();
  a->add_option("--bins", analyze.bins, "Centroid-distance histogram bins")->capture_default_str();
  a->add_option("--max-communities", analyze.max_communities, "Communities drawn in the PCA chart")
      ->capture_default_str();
  a->add_flag("--normalize-bc", analyze.normalize_bc, "Report betweenness scaled to [0,1]");
  a->add_option("--sweep", analyze.sweep, "Threshold grid for the sensitivity sweep")->delimiter(',');

  auto* s = app.add_subcommand("simulate", "Generate a synthetic snapshot corpus");
  s->add_option("--config", simulate_cfg, "Flat key = value file of flag values");
  s->add_option("--out", simulate.out, "Output directory")->capture_default_str();
  add_growth_options(s, simulate.growth, "");

  auto* r = app.add_subcommand("rl-train", "Train the edge-proposal policy on the discovery reward");
  r->add_option("--config", rl_cfg, "Flat key = value file of flag values");
  r->add_option("--out", rl.out, "Output directory")->capture_default_str();
  rl.env.n_iterations = 100;
  add_growth_options(r, rl.env, "env-");
  r->add_option("--lambda-d", rl.reward.lambda_d, "Weight of the (D - D_target)^2 penalty")->capture_default_str();
  r->add_option("--lambda-se", rl.reward.lambda_se, "Weight of semantic entropy")->capture_default_str();
  r->add_option("--lambda-alpha", rl.reward.lambda_alpha, "Weight of the alpha term")->capture_default_str();
  r->add_option("--d-target", rl.reward.d_target, "Target D")->capture_default_str();
  r->add_option("--alpha-target", rl.reward.alpha_target, "Target alpha")->capture_default_str();
  r->add_option("--episodes", rl.train.episodes, "Training episodes")->capture_default_str();
  r->add_option("--steps", rl.train.steps_per_episode, "Steps per episode")->capture_default_str();
  r->add_option("--lr", rl.train.learning_rate, "Learning rate")->capture_default_str();
  r->add_option("--seed", rl.train.seed, "Policy sampling seed")->capture_default_str();
  r->add_option("--random-candidates", rl.train.random_candidates, "Random pair proposals per step")
      ->capture_default_str();
  r->add_option("--weighted-candidates", rl.train.weighted_candidates, "Attachment-rule proposals per step")
      ->capture_default_str();
  r->add_option("--max-nodes", rl.train.max_nodes, "Node cap of the environment graph")->capture_default_str();
  r->add_option("--arrival-interval", rl.train.arrival_interval, "Steps between node arrivals (0 = none)")
      ->capture_default_str();

  auto* w = app.add_subcommand("sweep", "Surprising-edge fraction over a threshold grid");
  w->add_option("--config", sweep_cfg, "Flat key = value file of flag values");
  w->add_option("--snapshots", sweep.snapshots, "Directory of edge-list snapshots");
  w->add_option("--pattern", sweep.pattern, "Snapshot file name pattern")->capture_default_str();
  add_source_options(w, sweep.source);
  w->add_option("--thresholds", sweep.thresholds, "Comma-separated cosine thresholds")->delimiter(',');
  w->add_option("--out", sweep.out, "Output directory")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << error_line("usage", e.what()) << '\n';
    return kExitInput;
  }

  try {
    if (a->parsed()) {
      if (!analyze_cfg.empty()) apply_config_file(a, analyze_cfg);
      cmd_analyze(analyze, err);
    } else if (s->parsed()) {
      if (!simulate_cfg.empty()) apply_config_file(s, simulate_cfg);
      cmd_simulate(simulate, err);
    } else if (r->parsed()) {
      if (!rl_cfg.empty()) apply_config_file(r, rl_cfg);
      cmd_rl_train(rl, err);
    } else if (w->parsed()) {
      if (!sweep_cfg.empty()) apply_config_file(w, sweep_cfg);
      cmd_sweep(sweep, err);
    }
  } catch (const InputError& e) {
    err << error_line("input", e.what()) << '\n';
    return kExitInput;
  } catch (const fs::filesystem_error& e) {
    err << error_line("input", e.what()) << '\n';
    return kExitInput;
  } catch (const InvariantError& e) {
    err << error_line("internal", e.what()) << '\n';
    return kExitInternal;
  } catch (const std::exception& e) {
    err << error_line("internal", e.what()) << '\n';
    return kExitInternal;
  }
  return kExitOk;
}

}  // namespace graphcrit
