#include <gtest/gtest.h>

#include <random>

#include "stargraph/autgroup.hpp"

using namespace stargraph;

namespace {

Graph from(std::size_t n, std::vector<Edge> es) { return Graph::from_edges(n, es); }

Graph petersen() {
  std::vector<Edge> es;
  for (Vertex i = 0; i < 5; ++i) {
    es.emplace_back(i, (i + 1) % 5);
    es.emplace_back(i, i + 5);
    es.emplace_back(5 + i, 5 + (i + 2) % 5);
  }
  return from(10, es);
}

Graph lcf(std::size_t n, std::vector<int> jumps) {
  std::vector<Edge> es;
  for (Vertex i = 0; i < n; ++i) es.emplace_back(i, static_cast<Vertex>((i + 1) % n));
  for (Vertex i = 0; i < n; ++i) {
    int j = jumps[i % jumps.size()];
    auto t = static_cast<Vertex>((static_cast<int>(i) + j + static_cast<int>(n)) % static_cast<int>(n));
    if (i < t) es.emplace_back(i, t);
  }
  return from(n, es);
}

Graph cycle_graph(std::size_t n) {
  std::vector<Edge> es;
  for (Vertex i = 0; i < n; ++i) es.emplace_back(i, static_cast<Vertex>((i + 1) % n));
  return from(n, es);
}

Graph random_graph(std::size_t n, double p, std::mt19937& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> es;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j)
      if (coin(rng)) es.emplace_back(i, j);
  return from(n, es);
}

Permutation shuffled(std::size_t n, std::mt19937& rng) {
  std::vector<Point> img(n);
  for (std::size_t i = 0; i < n; ++i) img[i] = static_cast<Point>(i);
  std::shuffle(img.begin(), img.end(), rng);
  return Permutation(img);
}

}  // namespace

TEST(Refine, EquitableAndInvariant) {
  auto p = petersen();
  auto c = refine(p, Colouring(10, 0));
  EXPECT_EQ(*std::max_element(c.begin(), c.end()), 0u);
  auto c1 = refine(p, individualise(c, 0));
  // 0, its three neighbours, the six others
  EXPECT_EQ(*std::max_element(c1.begin(), c1.end()), 2u);

  std::mt19937 rng(5);
  for (int t = 0; t < 40; ++t) {
    auto g = random_graph(9, 0.35, rng);
    auto perm = shuffled(9, rng);
    auto h = relabel(g, perm);
    auto cg = refine(g, Colouring(9, 0)), ch = refine(h, Colouring(9, 0));
    for (Vertex v = 0; v < 9; ++v) EXPECT_EQ(cg[v], ch[perm[v]]);
  }
}

TEST(AutGroup, KnownOrders) {
  EXPECT_EQ(automorphism_group(petersen()).order(), 120);
  EXPECT_EQ(automorphism_group(lcf(14, {5, -5})).order(), 336);
  for (std::size_t n = 3; n <= 12; ++n) EXPECT_EQ(automorphism_group(cycle_graph(n)).order(), 2 * n);
  EXPECT_EQ(automorphism_group(Graph(6)).order(), 720);
  EXPECT_EQ(automorphism_group(Graph()).order(), 1);
}

TEST(AutGroup, BruteOracleSmallCases) {
  auto k4 = from(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  auto p4 = from(4, {{0, 1}, {1, 2}, {2, 3}});
  auto spider3 = from(7, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 5}, {3, 6}});
  EXPECT_EQ(brute_automorphisms(k4).order(), 24);
  EXPECT_EQ(brute_automorphisms(p4).order(), 2);
  EXPECT_EQ(brute_automorphisms(spider3).order(), 6);
  EXPECT_EQ(brute_automorphisms(petersen()).order(), 120);
  EXPECT_EQ(count_automorphisms_brute(petersen()), 120u);
  EXPECT_THROW(brute_automorphisms(Graph(11)), CapacityError);
}

TEST(AutGroup, MatchesBruteOnRandomGraphs) {
  std::mt19937 rng(2024);
  for (int t = 0; t < 300; ++t) {
    std::size_t n = 1 + t % 8;
    auto g = random_graph(n, 0.2 + 0.1 * (t % 6), rng);
    auto aut = automorphism_group(g);
    for (const auto& p : aut.generators()) EXPECT_TRUE(is_automorphism(g, p));
    EXPECT_EQ(aut.order(), count_automorphisms_brute(g)) << serialize(g);
    EXPECT_EQ(aut.order(), brute_automorphisms(g).order());
  }
}

TEST(AutGroup, CapIsEnforced) { EXPECT_THROW(automorphism_group(Graph(50), 40), CapacityError); }

TEST(Isomorphism, Witnesses) {
  std::mt19937 rng(99);
  auto p = petersen();
  auto q = relabel(p, shuffled(10, rng));
  auto w = are_isomorphic(p, q);
  ASSERT_TRUE(w);
  for (auto [u, v] : p.edges()) EXPECT_TRUE(q.adjacent((*w)[u], (*w)[v]));
  EXPECT_TRUE(are_isomorphic(p, p));
  EXPECT_FALSE(are_isomorphic(cycle_graph(5), cycle_graph(6)));
  auto two_triangles = from(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
  EXPECT_FALSE(are_isomorphic(cycle_graph(6), two_triangles));
  // same degree sequence, refinement cannot separate: 3-prism vs K_{3,3}
  auto prism = from(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}});
  auto k33 = from(6, {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}});
  EXPECT_FALSE(are_isomorphic(prism, k33));
}

TEST(Isomorphism, RandomPairsAgreeWithRelabelling) {
  std::mt19937 rng(17);
  for (int t = 0; t < 200; ++t) {
    std::size_t n = 2 + t % 7;
    auto g = random_graph(n, 0.45, rng);
    auto h = relabel(g, shuffled(n, rng));
    ASSERT_TRUE(are_isomorphic(g, h)) << serialize(g);
    auto other = random_graph(n, 0.45, rng);
    auto w = are_isomorphic(g, other);
    if (w) {
      EXPECT_EQ(relabel(g, *w), other);
    } else {
      // no relabelling of g equals other: check exhaustively
      std::vector<Point> img(n);
      for (std::size_t i = 0; i < n; ++i) img[i] = static_cast<Point>(i);
      bool any = false;
      do {
        any = any || relabel(g, Permutation(img)) == other;
      } while (!any && std::next_permutation(img.begin(), img.end()));
      EXPECT_FALSE(any);
    }
  }
}
