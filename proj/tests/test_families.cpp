#include <gtest/gtest.h>

#include "stargraph/autgroup.hpp"
#include "stargraph/families.hpp"

using namespace stargraph;

namespace {

using Profile = std::map<std::size_t, std::size_t>;

void expect_generators_are_automorphisms(const ConstructedInstance& inst) {
  ASSERT_TRUE(inst.group);
  for (const auto& p : inst.group->generators()) EXPECT_TRUE(is_automorphism(inst.graph, p)) << inst.name;
}

std::size_t orbit_count(const PermGroup& g) { return g.orbits().size(); }

}  // namespace

TEST(Families, Basic) {
  auto sp = spider(3);
  EXPECT_EQ(sp.graph.vertex_count(), 7u);
  EXPECT_EQ(sp.graph.edge_count(), 6u);
  EXPECT_EQ(valency_profile(sp.graph), (Profile{{1, 3}, {2, 3}, {3, 1}}));
  EXPECT_FALSE(girth(sp.graph));
  auto star = complete_bipartite(1, 5);
  EXPECT_EQ(valency_profile(star.graph), (Profile{{1, 5}, {5, 1}}));
  EXPECT_EQ(girth(cycle(5).graph), 5u);
  EXPECT_EQ(path(4).graph.edge_count(), 3u);
  EXPECT_THROW(cycle(2), std::invalid_argument);
  EXPECT_THROW(spider(2), std::invalid_argument);
  EXPECT_THROW(complete_bipartite(0, 3), std::invalid_argument);
}

TEST(Families, ColexOrder) {
  auto s = colex_subsets(4, 2);
  std::vector<std::vector<Point>> expect{{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}, {2, 3}};
  EXPECT_EQ(s, expect);
  EXPECT_EQ(colex_subsets(7, 3).size(), 35u);
  EXPECT_EQ(colex_subsets(5, 0).size(), 1u);
}

TEST(Families, OddGraphs) {
  auto o3 = odd_graph(3);
  EXPECT_EQ(o3.graph.vertex_count(), 10u);
  EXPECT_EQ(regular_valency(o3.graph), 3u);
  EXPECT_EQ(girth(o3.graph), 5u);
  EXPECT_EQ(o3.group->order(), 120);
  expect_generators_are_automorphisms(o3);
  EXPECT_EQ(orbit_count(*o3.group), 1u);

  auto o4 = odd_graph(4);
  EXPECT_EQ(o4.graph.vertex_count(), 35u);
  EXPECT_EQ(regular_valency(o4.graph), 4u);
  EXPECT_EQ(girth(o4.graph), 6u);
  EXPECT_EQ(o4.group->order(), 5040);
  EXPECT_THROW(odd_graph(2), std::invalid_argument);
  Caps small;
  small.max_vertices = 100;
  EXPECT_THROW(odd_graph(5, small), CapacityError);
}

TEST(Families, JohnsonIncidence) {
  auto j = johnson_incidence(7, 3);
  EXPECT_EQ(j.graph.vertex_count(), 56u);
  auto br = biregular_bipartition(j.graph);
  ASSERT_TRUE(br);
  EXPECT_EQ(std::set<std::size_t>({br->valency0, br->valency1}), std::set<std::size_t>({3, 5}));
  expect_generators_are_automorphisms(j);
  EXPECT_EQ(j.group->order(), 5040);
  EXPECT_EQ(orbit_count(*j.group), 2u);
  EXPECT_TRUE(j.has_flag("doubled-odd-graph"));
  EXPECT_FALSE(j.has_flag("equal-valency-exception"));
  EXPECT_TRUE(johnson_incidence(5, 3).has_flag("equal-valency-exception"));

  auto j52 = johnson_incidence(5, 2);
  EXPECT_TRUE(are_isomorphic(j52.graph, subdivide_1(complete(5).graph)));
  EXPECT_THROW(johnson_incidence(5, 5), std::invalid_argument);
  EXPECT_THROW(johnson_incidence(5, 1), std::invalid_argument);
}

TEST(Families, HammingCliqueIncidence) {
  auto h = hamming_clique_incidence(2, 3);
  EXPECT_EQ(h.graph.vertex_count(), 15u);
  EXPECT_EQ(valency_profile(h.graph), (Profile{{2, 9}, {3, 6}}));
  EXPECT_EQ(h.group->order(), 72);
  expect_generators_are_automorphisms(h);
  EXPECT_EQ(orbit_count(*h.group), 2u);

  auto h33 = hamming_clique_incidence(3, 3);
  EXPECT_EQ(h33.graph.vertex_count(), 54u);
  EXPECT_EQ(h33.group->order(), 6 * 6 * 6 * 6);

  auto h34 = hamming_clique_incidence(3, 4);
  EXPECT_EQ(h34.graph.vertex_count(), 64u + 48u);
  EXPECT_EQ(h34.group->order(), Order(24 * 24 * 24) * 6);
  EXPECT_EQ(valency_profile(h34.graph), (Profile{{3, 64}, {4, 48}}));
  EXPECT_THROW(hamming_clique_incidence(1, 3), std::invalid_argument);
}

TEST(Families, ProjectivePlanes) {
  auto h = pg_incidence(2);
  EXPECT_EQ(h.graph.vertex_count(), 14u);
  EXPECT_EQ(regular_valency(h.graph), 3u);
  EXPECT_EQ(girth(h.graph), 6u);
  EXPECT_EQ(automorphism_group(h.graph).order(), 336);
  auto p3 = pg_incidence(3);
  EXPECT_EQ(p3.graph.vertex_count(), 26u);
  EXPECT_EQ(regular_valency(p3.graph), 4u);
  EXPECT_EQ(girth(p3.graph), 6u);
  EXPECT_FALSE(p3.group);
  EXPECT_THROW(pg_incidence(5), std::invalid_argument);
}

TEST(Families, HermitianQuadrangle) {
  auto gq = hermitian_gq();
  EXPECT_EQ(gq.graph.vertex_count(), 72u);
  EXPECT_EQ(valency_profile(gq.graph), (Profile{{3, 45}, {5, 27}}));
  EXPECT_EQ(girth(gq.graph), 8u);
  auto aut = automorphism_group(gq.graph);
  EXPECT_EQ(aut.order(), 51840);
  EXPECT_EQ(aut.point_stabiliser(0).order(), 1152);
  EXPECT_EQ(aut.point_stabiliser(45).order(), 1920);
}

TEST(Families, Gf3Translate) {
  auto g = gf3_translate_graph(4);
  EXPECT_EQ(g.graph.vertex_count(), 63u);
  EXPECT_EQ(valency_profile(g.graph), (Profile{{3, 36}, {4, 27}}));
  for (Vertex l = 27; l < 63; ++l) EXPECT_EQ(g.graph.valency(l), 3u);
  EXPECT_EQ(g.group->order(), 1296);
  expect_generators_are_automorphisms(g);
  EXPECT_EQ(orbit_count(*g.group), 2u);
  EXPECT_THROW(gf3_translate_graph(6), std::invalid_argument);
  EXPECT_THROW(gf3_translate_graph(2), std::invalid_argument);
}

TEST(Families, SSquaredExample) {
  auto s = s_squared_example(4);
  EXPECT_EQ(s.graph.vertex_count(), 2520u);
  EXPECT_TRUE(is_connected(s.graph));
  EXPECT_EQ(s.group->order(), 362880);
  EXPECT_EQ(s.group->point_stabiliser(0).order(), 144);
  // |H : H cap H^g| for the swap involution: H cap H^g is the diagonal S_3
  EXPECT_EQ(regular_valency(s.graph), 24u);
  EXPECT_THROW(s_squared_example(5), CapacityError);
  EXPECT_THROW(s_squared_example(3), std::invalid_argument);
}

TEST(Families, BlockExtensionRejectsNonAutomorphisms) {
  auto h = hamming_clique_incidence(2, 3);
  std::vector<Point> img{1, 0, 2, 4, 3, 5, 7, 6, 8};  // values 0 <-> 1 in coordinate 0
  auto ext = extend_to_blocks(h.graph, 9, Permutation(img));
  EXPECT_TRUE(is_automorphism(h.graph, ext));
  std::vector<Point> bad{1, 0, 2, 3, 4, 5, 6, 7, 8};  // swaps two tuples only
  EXPECT_THROW(extend_to_blocks(h.graph, 9, Permutation(bad)), std::invalid_argument);
}
