#include "graphcrit/topology.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <queue>
#include <unordered_map>

#include "graphcrit/error.hpp"
#include "graphcrit/rng.hpp"

namespace graphcrit {

std::vector<double> betweenness(const GraphSnapshot& g) {
  const std::size_t n = g.node_count();
  std::vector<double> bc(n, 0.0);
  std::vector<std::size_t> order;
  std::vector<double> sigma(n), delta(n);
  std::vector<long> dist(n);
  std::vector<std::vector<NodeId>> preds(n);
  order.reserve(n);

  for (NodeId s = 0; s < n; ++s) {
    order.clear();
    for (NodeId v = 0; v < n; ++v) preds[v].clear();
    std::fill(sigma.begin(), sigma.end(), 0.0);
    std::fill(delta.begin(), delta.end(), 0.0);
    std::fill(dist.begin(), dist.end(), -1);
    sigma[s] = 1.0;
    dist[s] = 0;

    std::queue<NodeId> q;
    q.push(s);
    while (!q.empty()) {
      const NodeId v = q.front();
      q.pop();
      order.push_back(v);
      for (NodeId w : g.neighbors(v)) {
        if (dist[w] < 0) {
          dist[w] = dist[v] + 1;
          q.push(w);
        }
        if (dist[w] == dist[v] + 1) {
          sigma[w] += sigma[v];
          preds[w].push_back(v);
        }
      }
    }
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      const NodeId w = *it;
      for (NodeId v : preds[w]) delta[v] += sigma[v] / sigma[w] * (1.0 + delta[w]);
      if (w != s) bc[w] += delta[w];
    }
  }
  // Each unordered pair was visited from both endpoints.
  for (auto& b : bc) b *= 0.5;
  return bc;
}

std::vector<double> normalize_betweenness(std::vector<double> bc) {
  const double n = static_cast<double>(bc.size());
  if (bc.size() < 3) return bc;
  const double scale = 2.0 / ((n - 1.0) * (n - 2.0));
  for (auto& b : bc) b *= scale;
  return bc;
}

double neighbor_diversity(const GraphSnapshot& g, NodeId u, const EmbeddingTable& embeddings) {
  const auto nbrs = g.neighbors(u);
  const std::size_t k = nbrs.size();
  if (k < 2) return 0.0;
  std::vector<const Eigen::VectorXd*> vecs;
  vecs.reserve(k);
  for (NodeId v : nbrs) vecs.push_back(&embeddings.at(g.label(v)));
  double sum = 0.0;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) sum += (*vecs[i] - *vecs[j]).norm();
  return sum / (0.5 * static_cast<double>(k) * static_cast<double>(k - 1));
}

double neighbor_diversity(const GraphSnapshot& g, std::string_view label, const EmbeddingTable& embeddings) {
  const auto u = g.index_of(label);
  if (!u) throw InputError("node '" + std::string(label) + "' not in snapshot");
  return neighbor_diversity(g, *u, embeddings);
}

std::vector<double> neighbor_diversities(const GraphSnapshot& g, const EmbeddingTable& embeddings) {
  std::vector<double> out(g.node_count());
  for (NodeId u = 0; u < g.node_count(); ++u) out[u] = neighbor_diversity(g, u, embeddings);
  return out;
}

PearsonResult bc_diversity_correlation(const GraphSnapshot& g, const EmbeddingTable& embeddings) {
  if (g.node_count() < 3) throw InputError("BC-diversity correlation needs at least 3 nodes");
  const auto bc = betweenness(g);
  const auto div = neighbor_diversities(g, embeddings);
  return pearson(bc, div);
}

// --- communities -----------------------------------------------------------

std::size_t CommunityAssignment::of(std::string_view label) const {
  for (std::size_t i = 0; i < labels.size(); ++i)
    if (labels[i] == label) return community[i];
  throw InputError("label not in community assignment: '" + std::string(label) + "'");
}

std::vector<std::size_t> CommunityAssignment::by_size() const {
  std::vector<std::size_t> sizes(count, 0);
  for (auto c : community) ++sizes[c];
  std::vector<std::size_t> ids(count);
  std::iota(ids.begin(), ids.end(), 0);
  std::stable_sort(ids.begin(), ids.end(), [&](auto a, auto b) { return sizes[a] > sizes[b]; });
  return ids;
}

double modularity(const GraphSnapshot& g, const std::vector<std::size_t>& community, double resolution) {
  if (community.size() != g.node_count()) throw InputError("community vector size mismatch");
  const double m = static_cast<double>(g.edge_count());
  if (m == 0.0) return 0.0;
  const std::size_t k = community.empty() ? 0 : *std::max_element(community.begin(), community.end()) + 1;
  std::vector<double> internal(k, 0.0), degree(k, 0.0);
  for (const auto& e : g.edges())
    if (community[e.u] == community[e.v]) internal[community[e.u]] += 1.0;
  for (NodeId i = 0; i < g.node_count(); ++i) degree[community[i]] += static_cast<double>(g.degree(i));
  double q = 0.0;
  for (std::size_t c = 0; c < k; ++c) {
    const double frac = degree[c] / (2.0 * m);
    q += internal[c] / m - resolution * frac * frac;
  }
  return q;
}

namespace {

// Weighted graph used between aggregation levels. self_loops[i] is A_ii
// (twice the internal weight folded into node i).
struct WeightedGraph {
  std::vector<std::vector<std::pair<std::size_t, double>>> adj;  // excludes self
  std::vector<double> self_loops;
  std::vector<double> degree;

  std::size_t size() const { return adj.size(); }
};

WeightedGraph from_snapshot(const GraphSnapshot& g) {
  WeightedGraph w;
  const std::size_t n = g.node_count();
  w.adj.resize(n);
  w.self_loops.assign(n, 0.0);
  w.degree.assign(n, 0.0);
  for (NodeId i = 0; i < n; ++i) {
    for (NodeId j : g.neighbors(i)) w.adj[i].emplace_back(j, 1.0);
    w.degree[i] = static_cast<double>(g.degree(i));
  }
  return w;
}

// One round of local moves; returns true if any node changed community.
bool local_moves(const WeightedGraph& w, std::vector<std::size_t>& comm, double resolution, double two_m,
                 std::uint64_t seed, std::size_t level) {
  const std::size_t n = w.size();
  std::vector<double> tot(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) tot[comm[i]] += w.degree[i];

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  CounterRng rng = CounterRng::keyed({seed, level, 0x4c6f7576ULL});
  for (std::size_t i = n; i > 1; --i) std::swap(order[i - 1], order[rng.below(i)]);

  std::vector<double> link(n, 0.0);
  std::vector<std::size_t> touched;
  bool any_move = false;
  constexpr double kEps = 1e-12;
  for (int pass = 0; pass < 1000; ++pass) {
    bool moved = false;
    for (std::size_t i : order) {
      const std::size_t own = comm[i];
      const double ki = w.degree[i];
      touched.clear();
      for (auto [j, wt] : w.adj[i]) {
        const std::size_t c = comm[j];
        if (link[c] == 0.0) touched.push_back(c);
        link[c] += wt;
      }
      tot[own] -= ki;
      auto gain = [&](std::size_t c) { return link[c] - resolution * tot[c] * ki / two_m; };

      std::size_t best = own;
      double best_gain = gain(own);
      std::sort(touched.begin(), touched.end());
      for (std::size_t c : touched) {
        if (c == own) continue;
        const double gc = gain(c);
        if (gc > best_gain + kEps) {
          best = c;
          best_gain = gc;
        }
      }
      tot[best] += ki;
      if (best != own) {
        comm[i] = best;
        moved = true;
      }
      for (std::size_t c : touched) link[c] = 0.0;
    }
    if (!moved) break;
    any_move = true;
  }
  return any_move;
}

// Renumber to contiguous ids in order of first appearance.
std::size_t compact(std::vector<std::size_t>& comm) {
  std::unordered_map<std::size_t, std::size_t> remap;
  for (auto& c : comm) {
    auto [it, inserted] = remap.try_emplace(c, remap.size());
    c = it->second;
  }
  return remap.size();
}

WeightedGraph aggregate(const WeightedGraph& w, const std::vector<std::size_t>& comm, std::size_t k) {
  WeightedGraph out;
  out.adj.resize(k);
  out.self_loops.assign(k, 0.0);
  out.degree.assign(k, 0.0);
  std::vector<std::map<std::size_t, double>> acc(k);
  for (std::size_t i = 0; i < w.size(); ++i) {
    const std::size_t ci = comm[i];
    out.self_loops[ci] += w.self_loops[i];
    out.degree[ci] += w.degree[i];
    for (auto [j, wt] : w.adj[i]) {
      const std::size_t cj = comm[j];
      if (ci == cj) out.self_loops[ci] += wt;
      else acc[ci][cj] += wt;
    }
  }
  for (std::size_t c = 0; c < k; ++c)
    for (auto [d, wt] : acc[c]) out.adj[c].emplace_back(d, wt);
  return out;
}

}  // namespace

CommunityAssignment louvain(const GraphSnapshot& g, double resolution, std::uint64_t seed) {
  if (!(resolution > 0.0)) throw InputError("Louvain resolution must be positive");
  const std::size_t n = g.node_count();
  CommunityAssignment out;
  out.labels = g.labels();
  out.community.resize(n);
  std::iota(out.community.begin(), out.community.end(), 0);
  out.count = n;
  if (g.edge_count() == 0) {
    out.modularity = 0.0;
    return out;
  }

  const double two_m = 2.0 * static_cast<double>(g.edge_count());
  WeightedGraph w = from_snapshot(g);
  std::vector<std::size_t> node_to_comm = out.community;
  for (std::size_t level = 0; level < 64; ++level) {
    std::vector<std::size_t> comm(w.size());
    std::iota(comm.begin(), comm.end(), 0);
    const bool moved = local_moves(w, comm, resolution, two_m, seed, level);
    if (!moved) break;
    const std::size_t k = compact(comm);
    for (auto& c : node_to_comm) c = comm[c];
    w = aggregate(w, comm, k);
  }
  out.count = compact(node_to_comm);
  out.community = std::move(node_to_comm);
  out.modularity = modularity(g, out.community, resolution);
  return out;
}

CentroidHistogram centroid_distance_histogram(const PcaProjection& proj, const CommunityAssignment& communities,
                                              std::size_t n_bins) {
  if (n_bins < 1) throw InputError("histogram needs at least one bin");
  std::unordered_map<std::string, std::size_t> comm_of;
  for (std::size_t i = 0; i < communities.labels.size(); ++i)
    comm_of.emplace(communities.labels[i], communities.community[i]);

  const std::size_t n = proj.labels.size();
  std::vector<std::size_t> comm(n);
  for (std::size_t i = 0; i < n; ++i) {
    auto it = comm_of.find(proj.labels[i]);
    if (it == comm_of.end()) throw InputError("node '" + proj.labels[i] + "' has no community");
    comm[i] = it->second;
  }
  std::unordered_map<std::size_t, std::pair<Eigen::Vector2d, std::size_t>> centroid;
  for (std::size_t i = 0; i < n; ++i) {
    auto& [sum, count] = centroid.try_emplace(comm[i], Eigen::Vector2d::Zero(), 0).first->second;
    sum += proj.coordinates.row(static_cast<Eigen::Index>(i)).transpose();
    ++count;
  }

  CentroidHistogram h;
  h.labels = proj.labels;
  h.distances.resize(n);
  double max_d = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const auto& [sum, count] = centroid.at(comm[i]);
    const Eigen::Vector2d c = sum / static_cast<double>(count);
    h.distances[i] = (proj.coordinates.row(static_cast<Eigen::Index>(i)).transpose() - c).norm();
    max_d = std::max(max_d, h.distances[i]);
  }
  const double upper = max_d > 0.0 ? max_d : 1.0;
  const double width = upper / static_cast<double>(n_bins);
  h.bin_edges.resize(n_bins + 1);
  for (std::size_t b = 0; b <= n_bins; ++b) h.bin_edges[b] = width * static_cast<double>(b);
  h.bin_edges.back() = upper;
  h.counts.assign(n_bins, 0);
  for (double d : h.distances) {
    auto b = static_cast<std::size_t>(d / width);
    ++h.counts[std::min(b, n_bins - 1)];
  }
  return h;
}

std::map<std::size_t, std::size_t> degree_distribution(const GraphSnapshot& g) {
  std::map<std::size_t, std::size_t> out;
  for (NodeId i = 0; i < g.node_count(); ++i) ++out[g.degree(i)];
  return out;
}

std::vector<double> local_clustering(const GraphSnapshot& g) {
  std::vector<double> out(g.node_count(), 0.0);
  for (NodeId i = 0; i < g.node_count(); ++i) {
    const auto nbrs = g.neighbors(i);
    const std::size_t k = nbrs.size();
    if (k < 2) continue;
    std::size_t links = 0;
    for (std::size_t a = 0; a < k; ++a)
      for (std::size_t b = a + 1; b < k; ++b) links += g.has_edge(nbrs[a], nbrs[b]);
    out[i] = static_cast<double>(links) / (0.5 * static_cast<double>(k) * static_cast<double>(k - 1));
  }
  return out;
}

double clustering_coefficient(const GraphSnapshot& g) {
  if (g.node_count() == 0) throw InputError("clustering coefficient of an empty graph");
  const auto c = local_clustering(g);
  return std::accumulate(c.begin(), c.end(), 0.0) / static_cast<double>(c.size());
}

}  // namespace graphcrit
