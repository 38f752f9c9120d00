#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "graphcrit/error.hpp"
#include "graphcrit/synth.hpp"
#include "graphcrit/topology.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace graphcrit;
using doctest::Approx;

TEST_CASE("betweenness closed forms") {
  auto star = testutil::make_graph(4, {{0, 1}, {0, 2}, {0, 3}});
  CHECK(betweenness(star) == std::vector<double>{3, 0, 0, 0});
  auto path = testutil::make_graph(3, {{0, 1}, {1, 2}});
  CHECK(betweenness(path) == std::vector<double>{0, 1, 0});
  // 4-cycle: each node lies on one of the two shortest paths between its neighbours.
  auto cyc = testutil::make_graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  for (double b : betweenness(cyc)) CHECK(b == Approx(0.5));
  auto n = normalize_betweenness(betweenness(star));
  CHECK(n[0] == Approx(1.0));
}

TEST_CASE("betweenness matches path enumeration on random graphs") {
  CounterRng rng = CounterRng::keyed({99});
  for (int trial = 0; trial < 40; ++trial) {
    auto g = oracle::random_graph(8, 0.2 + 0.5 * rng.uniform(), rng);
    auto got = betweenness(g);
    auto want = oracle::betweenness(g);
    for (std::size_t i = 0; i < got.size(); ++i) CHECK(std::abs(got[i] - want[i]) <= 1e-9);
  }
}

TEST_CASE("neighbor diversity") {
  auto g = testutil::make_graph(4, {{0, 1}, {0, 2}, {2, 3}});
  EmbeddingTable t(2);
  t.insert("0", Eigen::Vector2d(1, 1));
  t.insert("1", Eigen::Vector2d(1, 0));
  t.insert("2", Eigen::Vector2d(0, 1));
  t.insert("3", Eigen::Vector2d(0, 1));
  CHECK(neighbor_diversity(g, "0", t) == Approx(std::sqrt(2.0)));
  CHECK(neighbor_diversity(g, "1", t) == 0.0);
  // Node 2's neighbours are 0 and 3.
  CHECK(neighbor_diversity(g, "2", t) == Approx(1.0));
  CHECK_THROWS_AS(neighbor_diversity(g, "x", t), InputError);

  EmbeddingTable same(2);
  for (const char* l : {"0", "1", "2", "3"}) same.insert(l, Eigen::Vector2d(3, 4));
  CHECK(neighbor_diversity(g, "0", same) == 0.0);
  auto r = bc_diversity_correlation(g, same);
  CHECK(r.degenerate);
  CHECK(r.r == 0.0);
}

TEST_CASE("betweenness and diversity rising together give r = 1") {
  // Star: hub has BC 3 and spread neighbours; leaves have BC 0 and diversity 0.
  auto g = testutil::make_graph(4, {{0, 1}, {0, 2}, {0, 3}});
  EmbeddingTable t(3);
  t.insert("0", Eigen::Vector3d(1, 1, 1));
  t.insert("1", Eigen::Vector3d(1, 0, 0));
  t.insert("2", Eigen::Vector3d(0, 1, 0));
  t.insert("3", Eigen::Vector3d(0, 0, 1));
  CHECK(bc_diversity_correlation(g, t).r == Approx(1.0));
}

TEST_CASE("modularity agrees with the pairwise definition") {
  CounterRng rng = CounterRng::keyed({17});
  for (int trial = 0; trial < 20; ++trial) {
    auto g = oracle::random_graph(9, 0.35, rng);
    std::vector<std::size_t> c(g.node_count());
    for (auto& v : c) v = rng.below(3);
    CHECK(modularity(g, c) == Approx(oracle::modularity(g, c)).epsilon(1e-12));
  }
}

TEST_CASE("Louvain") {
  SUBCASE("two 5-cliques and a bridge") {
    auto g = testutil::two_cliques(5);
    auto c = louvain(g, 1.0, 0);
    CHECK(c.count == 2);
    for (std::size_t i = 0; i < 10; ++i) CHECK(c.community[i] == (i < 5 ? 0u : 1u));
    auto best = oracle::best_partition(g);
    CHECK(best.optimal_count == 1);
    CHECK(best.community == c.community);
    CHECK(c.modularity == Approx(best.modularity).epsilon(1e-12));
    CHECK(c.modularity == Approx(oracle::modularity(g, c.community)).epsilon(1e-12));
  }
  SUBCASE("edgeless graph") {
    auto c = louvain(testutil::make_graph(4, {}));
    CHECK(c.count == 4);
    CHECK(c.modularity == 0.0);
  }
  SUBCASE("single clique") {
    auto c = louvain(testutil::complete_graph(6));
    CHECK(c.count == 1);
  }
  SUBCASE("fixed seed gives identical assignments") {
    GrowthConfig cfg;
    cfg.n_iterations = 200;
    cfg.embed_dim = 16;
    auto grown = generate_series(cfg);
    const auto& g = grown.series.back();
    auto a = louvain(g, 1.0, 42), b = louvain(g, 1.0, 42);
    CHECK(a.community == b.community);
    CHECK(a.modularity == b.modularity);
    CHECK(a.modularity > 0.3);
  }
  SUBCASE("close to the optimum on small random graphs") {
    CounterRng rng = CounterRng::keyed({5150});
    for (int trial = 0; trial < 10; ++trial) {
      auto g = oracle::random_graph(8, 0.35, rng);
      auto best = oracle::best_partition(g);
      auto c = louvain(g);
      CHECK(c.modularity <= best.modularity + 1e-12);
      CHECK(c.modularity >= best.modularity - 0.1);
    }
  }
  SUBCASE("resolution must be positive") { CHECK_THROWS_AS(louvain(testutil::complete_graph(3), 0.0), InputError); }
  SUBCASE("communities by size") {
    CommunityAssignment c;
    c.labels = {"a", "b", "c", "d"};
    c.community = {0, 1, 1, 2};
    c.count = 3;
    CHECK(c.by_size() == std::vector<std::size_t>{1, 0, 2});
    CHECK(c.of("c") == 1);
  }
}

TEST_CASE("centroid distance histogram") {
  PcaProjection p;
  p.labels = {"a", "b", "c", "d"};
  p.coordinates.resize(4, 2);
  CommunityAssignment one;
  one.labels = p.labels;
  one.community = {0, 0, 0, 0};
  one.count = 1;

  SUBCASE("coincident points") {
    p.coordinates.setConstant(2.0);
    auto h = centroid_distance_histogram(p, one, 5);
    CHECK(h.counts[0] == 4);
    CHECK(h.bin_edges.back() > 0.0);
  }
  SUBCASE("square corners") {
    p.coordinates << 1, 1, -1, 1, -1, -1, 1, -1;
    auto h = centroid_distance_histogram(p, one, 4);
    for (double d : h.distances) CHECK(d == Approx(std::sqrt(2.0)));
    CHECK(std::count_if(h.counts.begin(), h.counts.end(), [](std::size_t c) { return c > 0; }) == 1);
  }
  SUBCASE("tight cluster with far outliers is right-skewed") {
    CounterRng rng = CounterRng::keyed({8});
    const std::size_t n = 200;
    p.labels.clear();
    p.coordinates.resize(n, 2);
    for (std::size_t i = 0; i < n; ++i) {
      p.labels.push_back(std::to_string(i));
      const double s = i < 190 ? 0.3 : 3.0;
      p.coordinates.row(Eigen::Index(i)) << s * rng.normal(), s * rng.normal();
    }
    CommunityAssignment c;
    c.labels = p.labels;
    c.community.assign(n, 0);
    c.count = 1;
    auto h = centroid_distance_histogram(p, c, 20);
    std::size_t total = 0, median_bin = 0, last_bin = 0;
    for (std::size_t b = 0; b < h.counts.size(); ++b)
      if (h.counts[b]) last_bin = b;
    for (std::size_t b = 0; b < h.counts.size(); ++b) {
      total += h.counts[b];
      if (total * 2 >= n) {
        median_bin = b;
        break;
      }
    }
    CHECK(last_bin > median_bin);
    CHECK(median_bin < h.counts.size() / 2);
  }
}

TEST_CASE("degree distribution") {
  using M = std::map<std::size_t, std::size_t>;
  CHECK(degree_distribution(testutil::complete_graph(4)) == M{{3, 4}});
  CHECK(degree_distribution(testutil::make_graph(6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}})) == M{{1, 5}, {5, 1}});
}

TEST_CASE("generated graph has a decaying degree tail") {
  GrowthConfig cfg;
  cfg.n_iterations = 1996;  // 2000 nodes with the seed clique
  cfg.embed_dim = 16;
  cfg.n_centroids = 8;
  auto grown = generate_series(cfg);
  const auto& g = grown.series.back();
  REQUIRE(g.node_count() == 2000);
  auto d = degree_distribution(g);
  // Counts over doubling degree bands beyond m decrease.
  std::vector<std::size_t> band(6, 0);
  for (auto [k, c] : d)
    for (std::size_t b = 0; b < band.size(); ++b)
      if (k >= (2u << b) && k < (4u << b)) band[b] += c;
  for (std::size_t b = 1; b < band.size(); ++b) CHECK(band[b] < band[b - 1]);
  CHECK(d.rbegin()->first >= 30);
}

TEST_CASE("clustering") {
  CHECK(clustering_coefficient(testutil::complete_graph(3)) == 1.0);
  CHECK(clustering_coefficient(testutil::make_graph(4, {{0, 1}, {0, 2}, {0, 3}})) == 0.0);
  CounterRng rng = CounterRng::keyed({66});
  for (int trial = 0; trial < 20; ++trial) {
    auto g = oracle::random_graph(6, 0.5, rng);
    auto tri = oracle::triangles_per_node(g);
    auto cc = local_clustering(g);
    for (NodeId u = 0; u < g.node_count(); ++u) {
      const double k = double(g.degree(u));
      CHECK(cc[u] == Approx(k < 2 ? 0.0 : 2.0 * double(tri[u]) / (k * (k - 1))));
    }
  }
}
