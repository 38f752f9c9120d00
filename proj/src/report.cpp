#include "graphcrit/report.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iterator>
#include <ostream>

#include <openssl/evp.h>

namespace graphcrit {

std::string format_real(double v, int significant) {
  if (std::isnan(v)) return "nan";
  if (v == 0.0) v = 0.0;  // no "-0"
  char buf[64];
  auto [end, ec] = significant > 0
                       ? std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, significant)
                       : std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, end);
}

void Metadata::set(std::string key, std::string value) {
  for (auto& [k, v] : config)
    if (k == key) {
      v = std::move(value);
      return;
    }
  config.emplace_back(std::move(key), std::move(value));
}

void Metadata::write(std::ostream& out, std::string_view prefix) const {
  out << prefix << kToolName << ' ' << kToolVersion << '\n';
  for (const auto& [k, v] : config) out << prefix << "config " << k << " = " << v << '\n';
  for (const auto& [k, v] : inputs) out << prefix << "input " << k << " sha256 = " << v << '\n';
}

namespace {

class Sha256 {
 public:
  Sha256() : ctx_(EVP_MD_CTX_new()) {
    if (!ctx_ || EVP_DigestInit_ex(ctx_, EVP_sha256(), nullptr) != 1) throw InvariantError("sha256 init failed");
  }
  ~Sha256() { EVP_MD_CTX_free(ctx_); }
  Sha256(const Sha256&) = delete;
  Sha256& operator=(const Sha256&) = delete;

  void update(std::string_view bytes) {
    if (EVP_DigestUpdate(ctx_, bytes.data(), bytes.size()) != 1) throw InvariantError("sha256 update failed");
  }
  std::string hex() {
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_DigestFinal_ex(ctx_, md, &len) != 1) throw InvariantError("sha256 final failed");
    static constexpr char digits[] = "0123456789abcdef";
    std::string out;
    for (unsigned int i = 0; i < len; ++i) {
      out.push_back(digits[md[i] >> 4]);
      out.push_back(digits[md[i] & 0xf]);
    }
    return out;
  }

 private:
  EVP_MD_CTX* ctx_;
};

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path.string());
  return std::string(std::istreambuf_iterator<char>(in), {});
}

}  // namespace

std::string sha256_hex(std::string_view bytes) {
  Sha256 h;
  h.update(bytes);
  return h.hex();
}

std::string sha256_file(const std::filesystem::path& path) { return sha256_hex(slurp(path)); }

std::string sha256_files(std::vector<std::filesystem::path> files) {
  std::sort(files.begin(), files.end(),
            [](const auto& a, const auto& b) { return a.filename().string() < b.filename().string(); });
  Sha256 h;
  for (const auto& f : files) {
    const std::string name = f.filename().string();
    const std::string body = slurp(f);
    h.update(name);
    h.update(std::string_view("\0", 1));
    h.update(std::to_string(body.size()));
    h.update(std::string_view("\0", 1));
    h.update(body);
  }
  return h.hex();
}

void append_config(Metadata& meta, const GrowthConfig& c, const std::string& prefix) {
  meta.set(prefix + "seed", std::to_string(c.seed));
  meta.set(prefix + "iterations", std::to_string(c.n_iterations));
  meta.set(prefix + "nodes-per-iter", std::to_string(c.nodes_per_iter));
  meta.set(prefix + "edges-per-node", std::to_string(c.edges_per_node));
  meta.set(prefix + "pref-weight", c.pref_weight);
  meta.set(prefix + "sem-weight", c.sem_weight);
  meta.set(prefix + "surprise-prob", c.surprise_prob);
  meta.set(prefix + "centroids", std::to_string(c.n_centroids));
  meta.set(prefix + "embed-dim", std::to_string(c.embed_dim));
  meta.set(prefix + "embed-noise", c.embed_noise);
  meta.set(prefix + "surprise-threshold", c.surprise_threshold);
}

void append_config(Metadata& meta, const RewardConfig& c) {
  meta.set("lambda-d", c.lambda_d);
  meta.set("lambda-se", c.lambda_se);
  meta.set("lambda-alpha", c.lambda_alpha);
  meta.set("d-target", c.d_target);
  meta.set("alpha-target", c.alpha_target);
}

void append_config(Metadata& meta, const TrainOptions& o) {
  meta.set("episodes", std::to_string(o.episodes));
  meta.set("steps", std::to_string(o.steps_per_episode));
  meta.set("lr", o.learning_rate);
  meta.set("seed", std::to_string(o.seed));
  meta.set("random-candidates", std::to_string(o.random_candidates));
  meta.set("weighted-candidates", std::to_string(o.weighted_candidates));
  meta.set("max-nodes", std::to_string(o.max_nodes));
  meta.set("arrival-interval", std::to_string(o.arrival_interval));
  meta.set("baseline", "per-step running mean of rewards over episodes");
  meta.set("proposals", "keyed by step, shared across episodes");
}

void write_trace_csv(std::ostream& out, const Metadata& meta, const EntropyTrace& trace) {
  meta.write(out);
  out << "# entropies in nats; d_param is nan when both entropies are zero\n";
  out << "iteration,s_struct,s_sem,d_param,n_edges,n_surprising,alpha\n";
  for (const auto& r : trace.rows) {
    out << r.sample.iteration << ',' << format_real(r.sample.s_struct) << ',' << format_real(r.sample.s_sem) << ','
        << (r.sample.d_param ? format_real(*r.sample.d_param) : "nan") << ',' << r.surprise.n_edges << ','
        << r.surprise.n_surprising << ',' << format_real(r.surprise.alpha) << '\n';
  }
}

void write_xcorr_csv(std::ostream& out, const Metadata& meta, const CrossCorrelationTrace& xcorr) {
  meta.write(out);
  out << "iteration,pearson_r,degenerate\n";
  for (const auto& p : xcorr.points)
    out << p.iteration << ',' << format_real(p.r) << ',' << (p.degenerate ? 1 : 0) << '\n';
}

void write_transition_csv(std::ostream& out, const Metadata& meta, const TransitionReport& rep) {
  meta.write(out);
  out << "transition_iteration,sustain_length,pre_mean_r,post_mean_r\n";
  out << (rep.transition_iteration ? std::to_string(*rep.transition_iteration) : "none") << ','
      << rep.sustain_length << ',' << format_real(rep.pre_mean_r) << ',' << format_real(rep.post_mean_r) << '\n';
}

void write_surprise_csv(std::ostream& out, const Metadata& meta, const GraphSnapshot& g,
                        const EdgeClassification& cls) {
  meta.write(out);
  out << "# iteration " << g.iteration() << ": " << cls.stats.n_surprising << " of " << cls.stats.n_edges
      << " edges below cosine " << format_real(cls.stats.threshold) << "; scaled similarity = (cosine + 1) / 2\n";
  out << "source,target,cosine,surprising\n";
  for (const auto& f : cls.edges)
    out << g.label(f.edge.u) << ',' << g.label(f.edge.v) << ',' << format_real(f.cosine) << ','
        << (f.surprising ? 1 : 0) << '\n';
}

void write_sweep_csv(std::ostream& out, const Metadata& meta, const ThresholdSweep& sweep) {
  meta.write(out);
  out << "iteration,threshold,alpha\n";
  for (std::size_t s = 0; s < sweep.iterations.size(); ++s)
    for (std::size_t t = 0; t < sweep.thresholds.size(); ++t)
      out << sweep.iterations[s] << ',' << format_real(sweep.thresholds[t]) << ','
          << format_real(sweep.alphas[s][t]) << '\n';
}

void write_node_metrics_csv(std::ostream& out, const Metadata& meta, const std::vector<NodeMetricsRow>& rows) {
  meta.write(out);
  out << "label,degree,betweenness,diversity,community\n";
  for (const auto& r : rows)
    out << r.label << ',' << r.degree << ',' << format_real(r.betweenness) << ',' << format_real(r.diversity) << ','
        << r.community << '\n';
}

void write_histogram_csv(std::ostream& out, const Metadata& meta, const CentroidHistogram& h) {
  meta.write(out);
  out << "bin_lo,bin_hi,count\n";
  for (std::size_t b = 0; b < h.counts.size(); ++b)
    out << format_real(h.bin_edges[b]) << ',' << format_real(h.bin_edges[b + 1]) << ',' << h.counts[b] << '\n';
}

void write_curve_csv(std::ostream& out, const Metadata& meta, const std::vector<TrainingPoint>& curve) {
  meta.write(out);
  out << "episode,mean_reward,alpha_end,d_end\n";
  for (const auto& p : curve)
    out << p.episode << ',' << format_real(p.mean_reward) << ',' << format_real(p.alpha_end) << ','
        << format_real(p.d_end) << '\n';
}

void write_text_file(const std::filesystem::path& path, std::string_view content) {
  write_file(path, [&](std::ostream& out) { out << content; });
}

}  // namespace graphcrit
