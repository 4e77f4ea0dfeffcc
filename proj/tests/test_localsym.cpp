#include <gtest/gtest.h>

#include <json.hpp>

#include "stargraph/autgroup.hpp"
#include "stargraph/families.hpp"
#include "stargraph/localsym.hpp"

using namespace stargraph;

namespace {

Graph heawood() { return pg_incidence(2).graph; }

struct Both {
  bool star, stedge;
};

Both both(const Graph& g) {
  auto aut = automorphism_group(g);
  return {is_star_transitive_direct(g, aut).transitive, is_stedge_transitive_direct(g, aut).transitive};
}

}  // namespace

TEST(Stars, OpenAndEdgeStars) {
  auto k4 = complete(4).graph;
  EXPECT_EQ(open_star(k4, 0).edges.size(), 3u);
  EXPECT_EQ(edge_star(complete(3).graph, {0, 1}).edges.size(), 3u);
  EXPECT_EQ(edge_star(cycle(5).graph, {1, 2}).edges.size(), 3u);
  EXPECT_EQ(edge_star(k4, {0, 1}).edges.size(), 5u);
  EXPECT_THROW(edge_star(cycle(5).graph, {0, 2}), std::invalid_argument);
}

TEST(Stars, DirectChecksOnSmallGraphs) {
  auto p = both(odd_graph(3).graph);
  EXPECT_TRUE(p.star);
  EXPECT_TRUE(p.stedge);
  p = both(spider(3).graph);
  EXPECT_FALSE(p.star);
  EXPECT_TRUE(p.stedge);
  p = both(subdivide_2(complete(4).graph));
  EXPECT_FALSE(p.star);
  EXPECT_TRUE(p.stedge);
  p = both(complete(4).graph);
  EXPECT_TRUE(p.star);
  EXPECT_FALSE(p.stedge);
  p = both(complete_bipartite(2, 3).graph);
  EXPECT_TRUE(p.star);
  EXPECT_TRUE(p.stedge);
  p = both(complete(3).graph);
  EXPECT_TRUE(p.star);
  EXPECT_TRUE(p.stedge);
}

TEST(Stars, CounterexamplesAreReported) {
  auto g = spider(3).graph;
  auto c = is_star_transitive_direct(g, automorphism_group(g));
  ASSERT_TRUE(c.counterexample);
  // centre and the inner vertices share no orbit with anything of equal valency... the leaves and inner
  // vertices differ in valency, so the failure is at the inner vertices' local action
  EXPECT_FALSE(to_string(*c.counterexample).empty());
  auto k4 = complete(4).graph;
  auto e = is_stedge_transitive_direct(k4, automorphism_group(k4));
  ASSERT_TRUE(e.counterexample);
  EXPECT_NE(to_string(*e.counterexample).find("edge-star"), std::string::npos);
}

TEST(Stars, GroupRelativeSemantics) {
  // C_6 under the rotation group: vertex-transitive but no reflections, so not star-transitive
  auto c6 = cycle(6).graph;
  PermGroup rot(6, {Permutation({1, 2, 3, 4, 5, 0})});
  EXPECT_FALSE(is_star_transitive_direct(c6, rot).transitive);
  EXPECT_FALSE(is_star_transitive_fast(c6, rot));
  EXPECT_FALSE(is_stedge_transitive_direct(c6, rot).transitive);
  EXPECT_FALSE(is_stedge_transitive_by_image(c6, rot));
  // the trivial group realises nothing but identities
  EXPECT_FALSE(is_star_transitive_direct(complete(2).graph, PermGroup::trivial(2)).transitive);
  EXPECT_TRUE(is_star_transitive_direct(complete(2).graph, PermGroup::symmetric(2)).transitive);
}

TEST(Stars, DirectCapAndHypotheses) {
  Caps caps;
  caps.direct_valency = 3;
  auto k5 = complete(5).graph;
  EXPECT_THROW(is_star_transitive_direct(k5, PermGroup::symmetric(5), caps), CapacityError);
  EXPECT_THROW(is_stedge_transitive_fast(k5, PermGroup::symmetric(5)), HypothesisError);
  EXPECT_THROW(is_stedge_transitive_fast(cycle(6).graph, PermGroup::symmetric(6)), std::invalid_argument);
  auto h = hamming_clique_incidence(2, 3);
  EXPECT_THROW(is_stedge_transitive_fast(h.graph, *h.group), HypothesisError);
}

TEST(Stars, FastMatchesDirectOnFamilies) {
  std::vector<ConstructedInstance> corpus{odd_graph(3), odd_graph(4), johnson_incidence(7, 3),
                                          johnson_incidence(5, 3), hamming_clique_incidence(3, 3),
                                          gf3_translate_graph(4), pg_incidence(2), hermitian_gq()};
  for (auto& inst : corpus) {
    PermGroup G = inst.group ? *inst.group : automorphism_group(inst.graph);
    bool d = is_star_transitive_direct(inst.graph, G).transitive;
    EXPECT_EQ(d, is_star_transitive_fast(inst.graph, G)) << inst.name;
    bool e = is_stedge_transitive_direct(inst.graph, G).transitive;
    EXPECT_EQ(e, is_stedge_transitive_by_image(inst.graph, G)) << inst.name;
    EXPECT_EQ(e, is_stedge_transitive_fast(inst.graph, G)) << inst.name;
  }
  auto j = johnson_incidence(7, 3);
  EXPECT_TRUE(is_star_transitive_fast(j.graph, *j.group));
  auto eq = johnson_incidence(5, 3);
  EXPECT_FALSE(is_star_transitive_fast(eq.graph, *eq.group));
  auto t = gf3_translate_graph(4);
  EXPECT_TRUE(is_star_transitive_fast(t.graph, *t.group));
  auto o4 = odd_graph(4);
  EXPECT_TRUE(is_stedge_transitive_fast(o4.graph, *o4.group));
}

TEST(Arcs, KnownTransitivity) {
  auto pet = odd_graph(3).graph;
  auto a = local_s_arc_transitivity(pet, automorphism_group(pet));
  EXPECT_EQ(a.s_transitive, 3u);
  auto hw = heawood();
  EXPECT_EQ(local_s_arc_transitivity(hw, automorphism_group(hw)).s_transitive, 4u);
  auto gq = hermitian_gq().graph;
  auto b = local_s_arc_transitivity(gq, automorphism_group(gq));
  EXPECT_FALSE(b.s_transitive);
  EXPECT_GE(b.max_local_s, 4u);
  auto c8 = local_s_arc_transitivity(cycle(8).graph, automorphism_group(cycle(8).graph));
  EXPECT_TRUE(c8.cycle);
  EXPECT_TRUE(c8.reached_cap);
  EXPECT_EQ(c8.s_transitive, 9u);
  // K_4: 2-arc-transitive, not 3 (a 3-arc may close a triangle or not)
  auto k4 = complete(4).graph;
  EXPECT_EQ(local_s_arc_transitivity(k4, PermGroup::symmetric(4)).s_transitive, 2u);
}

TEST(Arcs, AgreesWithArcOrbitCount) {
  // orbit counting on explicit s-arcs for the Petersen graph
  auto pet = odd_graph(3).graph;
  auto aut = automorphism_group(pet);
  auto elements = aut.elements();
  for (std::size_t s = 1; s <= 4; ++s) {
    auto arcs = enumerate_s_arcs(pet, s);
    std::set<SArc> orbit;
    for (const auto& g : elements) {
      SArc im;
      for (Vertex x : arcs.front()) im.push_back(g[x]);
      orbit.insert(im);
    }
    EXPECT_EQ(orbit.size() == arcs.size(), s <= 3) << s;
  }
}

TEST(Tower, PetersenAndQuadrangle) {
  auto pet = odd_graph(3).graph;
  auto t = stabiliser_tower(pet, automorphism_group(pet), 0, pet.neighbours(0).front());
  EXPECT_EQ(t.gv, 12);
  EXPECT_EQ(t.gvw, 4);
  EXPECT_EQ(t.gv1, 2);
  EXPECT_EQ(t.gv2, 1);
  EXPECT_EQ(t.gv3, 1);

  auto gq = hermitian_gq().graph;
  auto aut = automorphism_group(gq);
  Vertex line = 45;
  auto tq = stabiliser_tower(gq, aut, line, gq.neighbours(line).front());
  EXPECT_EQ(tq.gv, 1920);
  EXPECT_EQ(tq.gv1, 16);
  EXPECT_EQ(tq.gvw1, 8);
  EXPECT_TRUE(tq.gvw1_moves_sphere2_v);
  EXPECT_TRUE(tq.gvw1_moves_sphere2_w);
}

TEST(Tower, MatchesBruteForceOnPetersen) {
  auto pet = odd_graph(3).graph;
  auto aut = automorphism_group(pet);
  auto elements = aut.elements();
  Vertex v = 0, w = pet.neighbours(0).front();
  auto fixes = [&](const Permutation& g, const std::vector<Vertex>& pts) {
    return std::all_of(pts.begin(), pts.end(), [&](Vertex x) { return g[x] == x; });
  };
  auto b1 = ball(pet, v, 1), b2 = ball(pet, v, 2), bw = ball(pet, w, 1);
  std::vector<Vertex> both = b1;
  both.insert(both.end(), bw.begin(), bw.end());
  std::size_t c1 = 0, c2 = 0, cvw = 0;
  for (const auto& g : elements) {
    c1 += fixes(g, b1);
    c2 += fixes(g, b2);
    cvw += fixes(g, both);
  }
  auto t = stabiliser_tower(pet, aut, v, w);
  EXPECT_EQ(t.gv1, c1);
  EXPECT_EQ(t.gv2, c2);
  EXPECT_EQ(t.gvw1, cvw);
}

TEST(Classify, Families) {
  auto o4 = odd_graph(4);
  auto r = analyze(o4.graph, o4.group, "S_7");
  EXPECT_EQ(r.classification.label, "vertex-transitive:1");
  EXPECT_EQ(r.orbits.front().stabiliser_order, 144);
  EXPECT_TRUE(r.findings.empty());

  auto p3 = analyze(pg_incidence(3).graph);
  EXPECT_EQ(p3.classification.label, "vertex-transitive:3");
  EXPECT_EQ(p3.orbits.front().stabiliser_order, 432);
  EXPECT_EQ(p3.arcs.s_transitive, 4u);

  auto j = johnson_incidence(7, 3);
  auto rj = analyze(j.graph, j.group, "S_7");
  EXPECT_EQ(rj.classification.label, "bipartite:2");
  EXPECT_TRUE(rj.findings.empty());

  auto h = hamming_clique_incidence(3, 4);
  auto rh = analyze(h.graph, h.group, "S_4 wr S_3");
  EXPECT_EQ(rh.classification.label, "bipartite:3");
  EXPECT_TRUE(rh.findings.empty());

  auto rq = analyze(hermitian_gq().graph);
  EXPECT_EQ(rq.classification.label, "bipartite:1");
  EXPECT_TRUE(rq.findings.empty());
}

TEST(Classify, SmallValency) {
  auto c8 = analyze(cycle(8).graph);
  EXPECT_TRUE(c8.star.value);
  EXPECT_TRUE(c8.stedge.value);
  EXPECT_EQ(c8.classification.label, "small-valency:cycle");
  auto p4 = analyze(path(4).graph);
  EXPECT_TRUE(p4.stedge.value);
  EXPECT_FALSE(p4.star.value);
  EXPECT_EQ(p4.classification.label, "not-applicable");
  auto s = analyze(subdivide_1(complete(4).graph));
  EXPECT_TRUE(s.star.value);
  EXPECT_TRUE(s.stedge.value);
  EXPECT_EQ(s.classification.label, "small-valency:subdivision");
  auto star = analyze(complete_bipartite(1, 4).graph);
  EXPECT_EQ(star.classification.label, "small-valency:star");
  auto k24 = analyze(complete_bipartite(2, 4).graph);
  EXPECT_EQ(k24.classification.label, "small-valency:dipole-subdivision");
}

TEST(Classify, ContradictionIsReported) {
  // feed fabricated facts: a vertex-transitive cubic graph with both properties and s = 2
  auto pet = odd_graph(3).graph;
  auto aut = automorphism_group(pet);
  SymmetryReport fake = analyze(pet);
  fake.arcs.s_transitive = 2;
  auto c = classify_instance(pet, aut, fake);
  EXPECT_EQ(c.label, "contradiction");
  ASSERT_TRUE(c.contradiction);
}

TEST(Report, JsonSchema) {
  auto r = analyze(odd_graph(3).graph);
  auto j = nlohmann::json::parse(report_json(r));
  EXPECT_EQ(j["schema"], 1);
  EXPECT_EQ(j["group_used"], "full Aut");
  EXPECT_EQ(j["group_order"], "120");
  EXPECT_EQ(j["star_transitive"]["value"], true);
  EXPECT_EQ(j["stedge_transitive"]["direct"], true);
  EXPECT_EQ(j["s_transitive"], 3);
  EXPECT_EQ(j["theorem_case"], "vertex-transitive:1");
  EXPECT_EQ(j["towers"][0]["G_v^[1]"], "2");
  EXPECT_EQ(report_json(r), report_json(analyze(odd_graph(3).graph)));
  EXPECT_NE(report_text(r).find("star-transitive: yes"), std::string::npos);
}

TEST(Report, RejectsNonAutomorphismGenerator) {
  auto c5 = cycle(5).graph;
  PermGroup bad(5, {Permutation({1, 0, 2, 3, 4})});
  EXPECT_THROW(analyze(c5, bad), std::invalid_argument);
}
