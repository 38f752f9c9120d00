#include "graphcrit/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <regex>
#include <sstream>

#include "graphcrit/error.hpp"

namespace graphcrit {

namespace {

std::uint64_t edge_key(NodeId a, NodeId b) {
  if (a > b) std::swap(a, b);
  return (static_cast<std::uint64_t>(a) << 32) | static_cast<std::uint64_t>(b);
}

std::string_view trim_cr(std::string_view s) {
  if (!s.empty() && s.back() == '\r') s.remove_suffix(1);
  return s;
}

}  // namespace

GraphSnapshot::GraphSnapshot(Iteration iteration, std::vector<std::string> labels,
                             std::vector<Edge> edges)
    : iteration_(iteration), labels_(std::move(labels)), adjacency_(labels_.size()) {
  if (iteration_ < 0) throw InputError("snapshot iteration must be non-negative");
  index_.reserve(labels_.size());
  for (NodeId i = 0; i < labels_.size(); ++i) {
    if (labels_[i].empty()) throw InputError("empty node label");
    if (!index_.emplace(labels_[i], i).second)
      throw InputError("duplicate node label '" + labels_[i] + "'");
  }
  std::unordered_set<std::uint64_t> seen;
  seen.reserve(edges.size());
  edges_.reserve(edges.size());
  for (auto e : edges) {
    if (e.u >= labels_.size() || e.v >= labels_.size())
      throw InputError("edge endpoint out of range");
    if (e.u == e.v) throw InputError("self-loop on '" + labels_[e.u] + "'");
    if (e.u > e.v) std::swap(e.u, e.v);
    if (!seen.insert(edge_key(e.u, e.v)).second)
      throw InputError("duplicate edge {" + labels_[e.u] + ", " + labels_[e.v] + "}");
    edges_.push_back(e);
    adjacency_[e.u].push_back(e.v);
    adjacency_[e.v].push_back(e.u);
  }
  for (auto& nbrs : adjacency_) std::sort(nbrs.begin(), nbrs.end());
}

std::optional<NodeId> GraphSnapshot::index_of(std::string_view label) const {
  auto it = index_.find(std::string(label));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool GraphSnapshot::has_edge(NodeId a, NodeId b) const {
  const auto& nbrs = adjacency_.at(a);
  return std::binary_search(nbrs.begin(), nbrs.end(), b);
}

NodeId GraphBuilder::add_node(std::string_view label) {
  if (label.empty()) throw InputError("empty node label");
  auto [it, inserted] = index_.try_emplace(std::string(label), labels_.size());
  if (inserted) labels_.emplace_back(label);
  return it->second;
}

GraphBuilder::EdgeOutcome GraphBuilder::add_edge(std::string_view a, std::string_view b) {
  const NodeId ia = add_node(a);
  const NodeId ib = add_node(b);
  return add_edge(ia, ib);
}

GraphBuilder::EdgeOutcome GraphBuilder::add_edge(NodeId a, NodeId b) {
  if (a >= labels_.size() || b >= labels_.size()) throw InputError("edge endpoint out of range");
  if (a == b) return EdgeOutcome::self_loop;
  if (!seen_.insert(edge_key(a, b)).second) return EdgeOutcome::duplicate;
  edges_.push_back(a < b ? Edge{a, b} : Edge{b, a});
  return EdgeOutcome::added;
}

GraphSnapshot GraphBuilder::build(Iteration iteration) const {
  return GraphSnapshot(iteration, labels_, edges_);
}

GraphSnapshot parse_edge_list(std::istream& in, Iteration iteration, const std::string& source_name,
                              EdgeListStats* stats) {
  GraphBuilder builder;
  EdgeListStats local;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string_view line = trim_cr(raw);
    if (line.empty() || line.front() == '#') continue;
    const auto tab = line.find('\t');
    if (tab == std::string_view::npos || line.find('\t', tab + 1) != std::string_view::npos)
      throw ParseError(source_name, line_no, "expected exactly two tab-separated labels");
    const auto a = line.substr(0, tab);
    const auto b = line.substr(tab + 1);
    if (a.empty() || b.empty()) throw ParseError(source_name, line_no, "empty label");
    ++local.lines;
    switch (builder.add_edge(a, b)) {
      case GraphBuilder::EdgeOutcome::self_loop: ++local.dropped_self_loops; break;
      case GraphBuilder::EdgeOutcome::duplicate: ++local.merged_duplicates; break;
      case GraphBuilder::EdgeOutcome::added: break;
    }
  }
  if (builder.node_count() == 0) throw InputError(source_name + ": graph has no nodes");
  if (stats) *stats = local;
  return builder.build(iteration);
}

GraphSnapshot load_edge_list(const std::filesystem::path& path, Iteration iteration,
                             EdgeListStats* stats) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open edge list " + path.string());
  return parse_edge_list(in, iteration, path.string(), stats);
}

void write_edge_list(std::ostream& out, const GraphSnapshot& g) {
  for (const auto& e : g.edges()) out << g.label(e.u) << '\t' << g.label(e.v) << '\n';
}

void write_edge_list(const std::filesystem::path& path, const GraphSnapshot& g) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path.string());
  write_edge_list(out, g);
  if (!out) throw InputError("write failed for " + path.string());
}

SnapshotSeries::SnapshotSeries(std::vector<GraphSnapshot> snapshots)
    : snapshots_(std::move(snapshots)) {
  if (snapshots_.empty()) throw InputError("no snapshots");
  for (std::size_t i = 1; i < snapshots_.size(); ++i) {
    if (snapshots_[i].iteration() <= snapshots_[i - 1].iteration())
      throw InputError("snapshot iterations must be strictly increasing (iteration " +
                       std::to_string(snapshots_[i].iteration()) + ")");
  }
}

std::vector<std::string> SnapshotSeries::all_labels() const {
  std::vector<std::string> out;
  std::unordered_set<std::string> seen;
  for (const auto& g : snapshots_)
    for (const auto& l : g.labels())
      if (seen.insert(l).second) out.push_back(l);
  return out;
}

std::vector<std::string> SnapshotSeries::vanished_nodes() const {
  std::vector<std::string> out;
  for (std::size_t i = 1; i < snapshots_.size(); ++i) {
    const auto& prev = snapshots_[i - 1];
    const auto& cur = snapshots_[i];
    for (const auto& l : prev.labels())
      if (!cur.index_of(l)) out.push_back(std::to_string(cur.iteration()) + ":" + l);
  }
  return out;
}

namespace {

std::regex pattern_regex(std::string_view pattern) {
  const auto pos = pattern.find("{iter}");
  if (pos == std::string_view::npos || pattern.find("{iter}", pos + 1) != std::string_view::npos)
    throw InputError("series pattern must contain exactly one {iter} field");
  auto escape = [](std::string_view s) {
    static const std::string special = R"(\^$.|?*+()[]{}/)";
    std::string out;
    for (char c : s) {
      if (special.find(c) != std::string::npos) out.push_back('\\');
      out.push_back(c);
    }
    return out;
  };
  return std::regex(escape(pattern.substr(0, pos)) + "([0-9]+)" + escape(pattern.substr(pos + 6)));
}

}  // namespace

std::map<Iteration, std::filesystem::path> list_series_files(const std::filesystem::path& dir,
                                                             std::string_view pattern) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(dir)) throw InputError("snapshot directory not found: " + dir.string());
  const std::regex re = pattern_regex(pattern);
  std::map<Iteration, fs::path> files;
  std::vector<fs::directory_entry> entries(fs::directory_iterator(dir), fs::directory_iterator{});
  std::sort(entries.begin(), entries.end());
  for (const auto& entry : entries) {
    if (!entry.is_regular_file()) continue;
    const std::string name = entry.path().filename().string();
    std::smatch m;
    if (!std::regex_match(name, m, re)) continue;
    const std::string digits = m[1].str();
    Iteration it = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), it);
    if (ec != std::errc{}) throw InputError("iteration out of range in " + name);
    auto [pos, inserted] = files.emplace(it, entry.path());
    if (!inserted)
      throw InputError("duplicate iteration " + std::to_string(it) + ": " +
                       pos->second.filename().string() + " and " + name);
  }
  return files;
}

SnapshotSeries load_series(const std::filesystem::path& dir, std::string_view pattern,
                           std::vector<std::string>* warnings) {
  const auto files = list_series_files(dir, pattern);
  if (files.empty()) throw InputError("no snapshots matching '" + std::string(pattern) + "' in " + dir.string());

  std::vector<GraphSnapshot> snaps;
  snaps.reserve(files.size());
  for (const auto& [it, path] : files) {
    EdgeListStats stats;
    snaps.push_back(load_edge_list(path, it, &stats));
    if (warnings && stats.dropped_self_loops > 0)
      warnings->push_back(path.filename().string() + ": dropped " +
                          std::to_string(stats.dropped_self_loops) + " self-loop line(s)");
  }
  SnapshotSeries series(std::move(snaps));
  if (warnings) {
    for (const auto& v : series.vanished_nodes()) warnings->push_back("node vanished at " + v);
  }
  return series;
}

std::string series_file_name(Iteration iteration, int width) {
  std::string digits = std::to_string(iteration);
  if (static_cast<int>(digits.size()) < width)
    digits.insert(0, static_cast<std::size_t>(width) - digits.size(), '0');
  return "graph_" + digits + ".edges";
}

void write_series(const std::filesystem::path& dir, const SnapshotSeries& series, int width) {
  std::filesystem::create_directories(dir);
  for (const auto& g : series) write_edge_list(dir / series_file_name(g.iteration(), width), g);
}

AdjacencyMatrices adjacency_and_degrees(const GraphSnapshot& g) {
  const auto n = static_cast<Eigen::Index>(g.node_count());
  AdjacencyMatrices m{Eigen::MatrixXd::Zero(n, n), Eigen::VectorXd::Zero(n)};
  for (const auto& e : g.edges()) {
    const auto u = static_cast<Eigen::Index>(e.u);
    const auto v = static_cast<Eigen::Index>(e.v);
    m.adjacency(u, v) = 1.0;
    m.adjacency(v, u) = 1.0;
  }
  for (NodeId i = 0; i < g.node_count(); ++i)
    m.degrees(static_cast<Eigen::Index>(i)) = static_cast<double>(g.degree(i));
  return m;
}

}  // namespace graphcrit
