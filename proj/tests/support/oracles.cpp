#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <string>

namespace oracle {

using graphcrit::GraphSnapshot;
using graphcrit::NodeId;

std::vector<double> jacobi_eigenvalues(std::vector<std::vector<double>> a, double tol) {
  const std::size_t n = a.size();
  for (int sweep = 0; sweep < 200; ++sweep) {
    double off = 0.0, scale = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) (i == j ? scale : off) += a[i][j] * a[i][j];
    if (off <= tol * tol * std::max(1.0, scale)) break;
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        if (std::abs(a[p][q]) < 1e-300) continue;
        const double theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a[k][p], akq = a[k][q];
          a[k][p] = c * akp - s * akq;
          a[k][q] = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a[p][k], aqk = a[q][k];
          a[p][k] = c * apk - s * aqk;
          a[q][k] = s * apk + c * aqk;
        }
      }
    }
  }
  std::vector<double> ev(n);
  for (std::size_t i = 0; i < n; ++i) ev[i] = a[i][i];
  std::sort(ev.begin(), ev.end());
  return ev;
}

double von_neumann_entropy(const std::vector<std::vector<double>>& w) {
  const std::size_t n = w.size();
  std::vector<double> deg(n, 0.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) deg[i] += w[i][j];
  std::vector<std::vector<double>> l(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (deg[i] == 0.0 || deg[j] == 0.0) continue;
      l[i][j] = (i == j ? 1.0 : 0.0) - w[i][j] / std::sqrt(deg[i] * deg[j]);
    }
  auto ev = jacobi_eigenvalues(l);
  double total = 0.0;
  for (double& v : ev) {
    v = std::max(v, 0.0);
    total += v;
  }
  if (total <= 0.0) return 0.0;
  double h = 0.0;
  for (double v : ev) {
    const double p = v / total;
    if (p > 0.0) h -= p * std::log(p);
  }
  return h;
}

double structural_entropy(const GraphSnapshot& g) {
  const std::size_t n = g.node_count();
  std::vector<std::vector<double>> w(n, std::vector<double>(n, 0.0));
  for (const auto& e : g.edges()) w[e.u][e.v] = w[e.v][e.u] = 1.0;
  return von_neumann_entropy(w);
}

std::vector<double> betweenness(const GraphSnapshot& g) {
  const std::size_t n = g.node_count();
  std::vector<double> bc(n, 0.0);
  for (NodeId s = 0; s < n; ++s) {
    // BFS distances from s.
    std::vector<long> dist(n, -1);
    std::vector<NodeId> frontier{s};
    dist[s] = 0;
    while (!frontier.empty()) {
      std::vector<NodeId> next;
      for (NodeId v : frontier)
        for (NodeId w : g.neighbors(v))
          if (dist[w] < 0) {
            dist[w] = dist[v] + 1;
            next.push_back(w);
          }
      frontier = std::move(next);
    }
    for (NodeId t = s + 1; t < n; ++t) {
      if (dist[t] < 0) continue;
      // Enumerate every shortest s-t path explicitly.
      std::vector<std::vector<NodeId>> paths;
      std::vector<NodeId> path{s};
      std::function<void(NodeId)> walk = [&](NodeId v) {
        if (v == t) {
          paths.push_back(path);
          return;
        }
        for (NodeId w : g.neighbors(v)) {
          if (dist[w] != dist[v] + 1) continue;
          path.push_back(w);
          walk(w);
          path.pop_back();
        }
      };
      walk(s);
      // Only walks that reach t are recorded, and each is a shortest path.
      std::vector<double> through(n, 0.0);
      for (const auto& p : paths)
        for (std::size_t k = 1; k + 1 < p.size(); ++k) through[p[k]] += 1.0;
      for (NodeId u = 0; u < n; ++u) bc[u] += through[u] / static_cast<double>(paths.size());
    }
  }
  return bc;
}

double modularity(const GraphSnapshot& g, const std::vector<std::size_t>& community) {
  const std::size_t n = g.node_count();
  const double two_m = 2.0 * static_cast<double>(g.edge_count());
  if (two_m == 0.0) return 0.0;
  double q = 0.0;
  for (NodeId i = 0; i < n; ++i)
    for (NodeId j = 0; j < n; ++j) {
      if (community[i] != community[j]) continue;
      const double a = g.has_edge(i, j) ? 1.0 : 0.0;
      q += a - static_cast<double>(g.degree(i)) * static_cast<double>(g.degree(j)) / two_m;
    }
  return q / two_m;
}

BestPartition best_partition(const GraphSnapshot& g) {
  const std::size_t n = g.node_count();
  BestPartition best;
  best.modularity = -1.0;
  std::vector<std::size_t> rgs(n, 0);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t i, std::size_t max_used) {
    if (i == n) {
      const double q = modularity(g, rgs);
      if (q > best.modularity + 1e-12) {
        best.modularity = q;
        best.community = rgs;
        best.optimal_count = 1;
      } else if (std::abs(q - best.modularity) <= 1e-12) {
        ++best.optimal_count;
      }
      return;
    }
    for (std::size_t c = 0; c <= max_used + 1 && c <= i; ++c) {
      rgs[i] = c;
      rec(i + 1, std::max(max_used, c));
    }
  };
  if (n == 0) return best;
  rgs[0] = 0;
  rec(1, 0);
  return best;
}

std::vector<std::size_t> triangles_per_node(const GraphSnapshot& g) {
  const std::size_t n = g.node_count();
  std::vector<std::size_t> t(n, 0);
  for (NodeId a = 0; a < n; ++a)
    for (NodeId b = a + 1; b < n; ++b)
      for (NodeId c = b + 1; c < n; ++c)
        if (g.has_edge(a, b) && g.has_edge(b, c) && g.has_edge(a, c)) {
          ++t[a];
          ++t[b];
          ++t[c];
        }
  return t;
}

GraphSnapshot random_graph(std::size_t n, double p, graphcrit::CounterRng& rng, graphcrit::Iteration iteration) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back("v" + std::to_string(i));
  std::vector<graphcrit::Edge> edges;
  for (NodeId a = 0; a < n; ++a)
    for (NodeId b = a + 1; b < n; ++b)
      if (rng.uniform() < p) edges.push_back({a, b});
  return GraphSnapshot(iteration, labels, edges);
}

GraphSnapshot permuted(const GraphSnapshot& g, graphcrit::CounterRng& rng) {
  const std::size_t n = g.node_count();
  std::vector<NodeId> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  for (std::size_t i = n; i > 1; --i) std::swap(perm[i - 1], perm[rng.below(i)]);
  std::vector<std::string> labels(n);
  for (NodeId i = 0; i < n; ++i) labels[perm[i]] = g.label(i);
  std::vector<graphcrit::Edge> edges;
  for (const auto& e : g.edges()) edges.push_back({perm[e.u], perm[e.v]});
  return GraphSnapshot(g.iteration(), labels, edges);
}

}  // namespace oracle
