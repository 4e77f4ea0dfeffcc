#include "stargraph/suites.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "stargraph/autgroup.hpp"
#include "stargraph/cosetgraph.hpp"
#include "stargraph/families.hpp"
#include "stargraph/localsym.hpp"

namespace stargraph {

bool SuiteResult::all_pass() const {
  return std::all_of(items.begin(), items.end(), [](const SuiteItem& i) { return i.pass; });
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"small-valency", "vertex-transitive", "vertex-intransitive", "coset",
                                              "all"};
  return names;
}

namespace {

const char* kPublished = "published";
const char* kElementary = "elementary";
const char* kComputed = "computed";

std::string show(bool b) { return b ? "yes" : "no"; }
std::string show(std::size_t n) { return std::to_string(n); }
std::string show(const Order& n) { return n.str(); }
std::string show(const std::string& s) { return s; }
std::string show(const char* s) { return s; }

class Recorder {
 public:
  explicit Recorder(SuiteResult& r) : r_(r) {}

  template <class T, class U>
  void eq(const std::string& inst, const std::string& what, const char* source, const T& observed, const U& expected) {
    bool pass = observed == expected;
    r_.items.push_back({inst, what + " = " + show(expected), source, show(observed), pass});
  }
  void holds(const std::string& inst, const std::string& what, const char* source, const std::string& observed,
             bool pass) {
    r_.items.push_back({inst, what, source, observed, pass});
  }
  /// Runs `body`, turning an exception into a failed item so the rest of the suite still runs.
  template <class F>
  void guarded(const std::string& inst, F&& body) {
    try {
      body();
    } catch (const std::exception& e) {
      r_.items.push_back({inst, "construction and analysis succeed", kElementary, e.what(), false});
    }
  }

 private:
  SuiteResult& r_;
};

void both_properties(Recorder& rec, const std::string& inst, const SymmetryReport& r, bool star, bool stedge,
                     const char* source) {
  rec.eq(inst, "star-transitive", source, r.star.value, star);
  rec.eq(inst, "st(edge)-transitive", source, r.stedge.value, stedge);
  if (!r.findings.empty()) rec.holds(inst, "no contradictions", kPublished, r.findings.front(), false);
}

void small_valency(SuiteResult& out, const Caps& caps) {
  Recorder rec(out);
  auto yes_yes = [&](const std::string& name, const Graph& g, const std::string& label) {
    rec.guarded(name, [&] {
      auto r = analyze(g, std::nullopt, "", caps);
      both_properties(rec, name, r, true, true, kPublished);
      rec.eq(name, "case", kPublished, r.classification.label, label);
    });
  };
  for (std::size_t n = 1; n <= 5; ++n)
    yes_yes("K_{1," + std::to_string(n) + "}", complete_bipartite(1, n).graph, "small-valency:star");
  for (std::size_t n = 3; n <= 12; ++n) yes_yes("C_" + std::to_string(n), cycle(n).graph, "small-valency:cycle");
  std::vector<std::pair<std::string, Graph>> sigmas{{"K_4", complete(4).graph},
                                                    {"K_5", complete(5).graph},
                                                    {"Petersen", odd_graph(3).graph},
                                                    {"K_{3,3}", complete_bipartite(3, 3).graph}};
  for (const auto& [name, sigma] : sigmas) yes_yes("S(" + name + ")", subdivide_1(sigma), "small-valency:subdivision");

  auto edge_only = [&](const std::string& name, const Graph& g) {
    rec.guarded(name, [&] {
      auto r = analyze(g, std::nullopt, "", caps);
      both_properties(rec, name, r, false, true, kPublished);
    });
  };
  edge_only("P_4", path(4).graph);
  for (std::size_t n = 3; n <= 5; ++n) edge_only("T_" + std::to_string(n), spider(n).graph);
  edge_only("S2(K_4)", subdivide_2(complete(4).graph));
  for (std::size_t n : {4, 5}) {
    std::string name = "K_" + std::to_string(n);
    rec.guarded(name, [&] {
      auto r = analyze(complete(n).graph, std::nullopt, "", caps);
      rec.eq(name, "st(edge)-transitive", kPublished, r.stedge.value, false);
    });
  }
}

void vertex_transitive(SuiteResult& out, const Caps& caps) {
  Recorder rec(out);
  rec.guarded("Petersen", [&] {
    const std::string name = "Petersen";
    auto g = odd_graph(3).graph;
    auto aut = automorphism_group(g);
    auto r = analyze(g, std::nullopt, "", caps);
    rec.eq(name, "star-transitive (direct)", kPublished, r.star.direct.value_or(false), true);
    rec.eq(name, "star-transitive (fast)", kPublished, r.star.fast.value_or(false), true);
    rec.eq(name, "st(edge)-transitive (direct)", kPublished, r.stedge.direct.value_or(false), true);
    rec.eq(name, "st(edge)-transitive (fast)", kPublished, r.stedge.fast.value_or(false), true);
    rec.eq(name, "|Aut| (exhaustive count)", kComputed, r.group_order, Order(count_automorphisms_brute(g)));
    rec.eq(name, "|Aut|", kComputed, r.group_order, Order(120));
    rec.eq(name, "|G_v|", kPublished, r.orbits.front().stabiliser_order, Order(12));
    auto e = g.edges().front();
    std::vector<Point> ends{e.first, e.second};
    rec.eq(name, "|G_{v,w}| (edge stabiliser)", kPublished, aut.setwise_stabiliser(ends).order(), Order(8));
    rec.eq(name, "s", kPublished, r.arcs.s_transitive.value_or(0), std::size_t{3});
    rec.eq(name, "case", kPublished, r.classification.label, "vertex-transitive:1");
  });
  rec.guarded("Heawood", [&] {
    const std::string name = "Heawood";
    auto r = analyze(pg_incidence(2).graph, std::nullopt, "", caps);
    rec.eq(name, "|Aut|", kComputed, r.group_order, Order(336));
    rec.eq(name, "|G_v|", kComputed, r.orbits.front().stabiliser_order, Order(24));
    rec.eq(name, "s", kPublished, r.arcs.s_transitive.value_or(0), std::size_t{4});
    both_properties(rec, name, r, true, true, kPublished);
    rec.eq(name, "case", kPublished, r.classification.label, "vertex-transitive:2");
  });
  rec.guarded("O_4 under S_7", [&] {
    const std::string name = "O_4 under S_7";
    auto o4 = odd_graph(4, caps);
    auto r = analyze(o4.graph, o4.group, o4.group_name, caps);
    rec.eq(name, "girth", kPublished, r.girth.value_or(0), std::size_t{6});
    rec.eq(name, "|G_v|", kPublished, r.orbits.front().stabiliser_order, Order(144));
    both_properties(rec, name, r, true, true, kPublished);
    rec.eq(name, "case", kPublished, r.classification.label, "vertex-transitive:1");
  });
  rec.guarded("PG(2,3)", [&] {
    const std::string name = "PG(2,3)";
    auto r = analyze(pg_incidence(3).graph, std::nullopt, "", caps);
    rec.eq(name, "vertex-transitive", kPublished, r.vertex_transitive, true);
    rec.eq(name, "|G_v|", kComputed, r.orbits.front().stabiliser_order, Order(432));
    rec.eq(name, "s", kPublished, r.arcs.s_transitive.value_or(0), std::size_t{4});
    both_properties(rec, name, r, true, true, kPublished);
    rec.eq(name, "case", kPublished, r.classification.label, "vertex-transitive:3");
  });
}

std::string bivalency(const Graph& g) {
  auto b = biregular_bipartition(g);
  if (!b) return "none";
  return "{" + std::to_string(std::min(b->valency0, b->valency1)) + "," +
         std::to_string(std::max(b->valency0, b->valency1)) + "}";
}

void vertex_intransitive(SuiteResult& out, const Caps& caps) {
  Recorder rec(out);
  rec.guarded("GQ(2,4)", [&] {
    const std::string name = "GQ(2,4)";
    auto g = hermitian_gq().graph;
    auto aut = automorphism_group(g, caps.aut_vertices);
    auto r = analyze(g, aut, "full Aut", caps);
    rec.eq(name, "bivalency", kPublished, bivalency(g), "{3,5}");
    Vertex line = 45;  // lines follow the 45 points
    auto t = stabiliser_tower(g, aut, line, g.neighbours(line).front());
    rec.eq(name, "|G_v| (v a line)", kComputed, t.gv, Order(1920));
    rec.eq(name, "|G_v^[1]|", kPublished, t.gv1, Order(16));
    rec.eq(name, "|G_vw^[1]|", kPublished, t.gvw1, Order(8));
    rec.holds(name, "locally s-arc-transitive with s >= 4", kPublished, show(r.arcs.max_local_s),
              r.arcs.max_local_s >= 4);
    both_properties(rec, name, r, true, true, kPublished);
    rec.eq(name, "case", kPublished, r.classification.label, "bipartite:1");
  });
  rec.guarded("J(7,3) incidence under S_7", [&] {
    const std::string name = "J(7,3) incidence under S_7";
    auto j = johnson_incidence(7, 3, caps);
    auto r = analyze(j.graph, j.group, j.group_name, caps);
    both_properties(rec, name, r, true, true, kPublished);
    rec.eq(name, "case", kPublished, r.classification.label, "bipartite:2");
    // vertex 0 is a 3-subset (valency r = 3), its neighbours are 2-subsets (valency l = 5)
    auto t = stabiliser_tower(j.graph, *j.group, 0, j.graph.neighbours(0).front());
    rec.eq(name, "|G_v| = r!(l-1)!", kPublished, t.gv, factorial(3) * factorial(4));
    rec.eq(name, "|G_w| = l!(r-1)!", kPublished, t.gw, factorial(5) * factorial(2));
  });
  rec.guarded("H(3,4) clique incidence under S_4 wr S_3", [&] {
    const std::string name = "H(3,4) clique incidence under S_4 wr S_3";
    auto h = hamming_clique_incidence(3, 4, caps);
    auto r = analyze(h.graph, h.group, h.group_name, caps);
    both_properties(rec, name, r, true, true, kPublished);
    rec.eq(name, "case", kPublished, r.classification.label, "bipartite:3");
    Vertex clique = 64;
    auto t = stabiliser_tower(h.graph, *h.group, clique, h.graph.neighbours(clique).front());
    rec.eq(name, "|G_v| (v a clique) = |S_4 x (S_3 wr S_2)|", kComputed, t.gv, Order(1728));
    rec.eq(name, "|G_w| (w a tuple) = |S_3 wr S_3|", kPublished, t.gw, Order(1296));
    rec.eq(name, "|G_w^[2]|", kPublished, t.gw2, Order(1));
  });
  rec.guarded("GF(3) translate graph, n = 4", [&] {
    const std::string name = "GF(3) translate graph, n = 4";
    auto tg = gf3_translate_graph(4, caps);
    auto r = analyze(tg.graph, tg.group, tg.group_name, caps);
    rec.eq(name, "bivalency", kPublished, bivalency(tg.graph), "{3,4}");
    both_properties(rec, name, r, true, true, kPublished);
    rec.eq(name, "case", kComputed, r.classification.label, "bipartite:2");
  });
}

void coset(SuiteResult& out, const Caps& caps) {
  Recorder rec(out);
  rec.guarded("Cos(S_4, Sym{0,1,2}, (2 3))", [&] {
    const std::string name = "Cos(S_4, Sym{0,1,2}, (2 3))";
    PermGroup H(4, {Permutation({1, 0, 2, 3}), Permutation({1, 2, 0, 3})});
    auto cg = sabidussi(PermGroup::symmetric(4), H, Permutation({0, 1, 3, 2}), caps.max_coset_index);
    rec.eq(name, "isomorphic to K_4", kComputed, are_isomorphic(cg.graph, complete(4).graph).has_value(), true);
  });
  rec.guarded("Cos(S_3, <(0 1)>, <(1 2)>)", [&] {
    const std::string name = "Cos(S_3, <(0 1)>, <(1 2)>)";
    auto cg = bipartite_coset(PermGroup::symmetric(3), PermGroup(3, {Permutation({1, 0, 2})}),
                              PermGroup(3, {Permutation({0, 2, 1})}), caps.max_coset_index);
    rec.eq(name, "isomorphic to C_6", kComputed, are_isomorphic(cg.graph, cycle(6).graph).has_value(), true);
  });
  rec.guarded("S_9 example, r = 4", [&] {
    const std::string name = "S_9 example, r = 4";
    auto s = s_squared_example(4, caps);
    auto r = analyze(s.graph, s.group, s.group_name, caps);
    rec.eq(name, "vertices", kComputed, r.vertices, std::size_t{2520});
    rec.eq(name, "connected", kPublished, r.connected, true);
    auto val = regular_valency(s.graph);
    rec.eq(name, "valency", kComputed, val ? show(*val) : std::string("irregular"), "4");
    rec.eq(name, "star-transitive under S_9", kPublished, r.star.value, true);
    rec.eq(name, "st(edge)-transitive under S_9", kPublished, r.stedge.value, true);
    rec.eq(name, "s", kComputed, r.arcs.s_transitive.value_or(0), std::size_t{3});
    rec.eq(name, "|G_v|", kPublished, r.orbits.front().stabiliser_order, Order(144));
  });
}

}  // namespace

SuiteResult run_suite(const std::string& name, const Caps& caps) {
  SuiteResult r{name, {}};
  if (name == "small-valency") {
    small_valency(r, caps);
  } else if (name == "vertex-transitive") {
    vertex_transitive(r, caps);
  } else if (name == "vertex-intransitive") {
    vertex_intransitive(r, caps);
  } else if (name == "coset") {
    coset(r, caps);
  } else if (name == "all") {
    small_valency(r, caps);
    vertex_transitive(r, caps);
    vertex_intransitive(r, caps);
    coset(r, caps);
  } else {
    throw std::invalid_argument("unknown suite '" + name + "'");
  }
  return r;
}

std::string format_suite(const SuiteResult& r) {
  std::ostringstream os;
  std::size_t passed = 0;
  for (const auto& i : r.items) {
    passed += i.pass;
    os << (i.pass ? "PASS" : "FAIL") << "  " << i.instance << ": " << i.expectation << "  (" << i.source
       << ")  observed " << i.observed << "\n";
  }
  os << r.name << ": " << passed << "/" << r.items.size() << " passed\n";
  return os.str();
}

}  // namespace stargraph
