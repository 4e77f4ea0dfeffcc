#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "stargraph/caps.hpp"
#include "stargraph/graph.hpp"
#include "stargraph/permgroup.hpp"

namespace stargraph {

/// st(v): the vertex and its incident edges, each edge as (v, neighbour).
struct OpenStar {
  Vertex centre;
  std::vector<Edge> edges;
};
OpenStar open_star(const Graph& g, Vertex v);

/// st({u,v}): both endpoints and every edge meeting either, {u,v} first. Edges
/// are normalised with the smaller endpoint first.
struct EdgeStar {
  Vertex u, v;
  std::vector<Edge> edges;
};
EdgeStar edge_star(const Graph& g, Edge e);

/// A star isomorphism st(v1) -> st(v2) given by where each neighbour of v1 goes.
struct StarIso {
  Vertex v1, v2;
  std::vector<std::pair<Vertex, Vertex>> map;
};

/// An edge-star isomorphism. With `swapped`, u1 goes to v2 and v1 to u2. The two
/// neighbour maps are independent, so a common neighbour of u1 and v1 may be
/// sent to two different places.
struct EdgeStarIso {
  Edge e1, e2;
  bool swapped = false;
  std::vector<std::pair<Vertex, Vertex>> at_u;  // Gamma(u1) \ {v1}
  std::vector<std::pair<Vertex, Vertex>> at_v;  // Gamma(v1) \ {u1}
};

std::string to_string(const StarIso& s);
std::string to_string(const EdgeStarIso& s);

struct StarCheck {
  bool transitive = false;
  std::optional<StarIso> counterexample;
};
struct EdgeStarCheck {
  bool transitive = false;
  std::optional<EdgeStarIso> counterexample;
};

/// Vertex orbit representatives (smallest vertex of each orbit), ascending.
std::vector<Vertex> vertex_orbit_reps(const PermGroup& group);
/// Orbits of the group on edges, as indices into g.edges(); each orbit sorted, ordered by first element.
std::vector<std::vector<std::size_t>> edge_orbits(const Graph& g, const PermGroup& group);

/// Every star isomorphism extends to an element of `group`. Enumerates neighbour
/// bijections, skipping those already generated by realised ones.
/// Throws CapacityError above caps.direct_valency, std::invalid_argument if the group
/// does not act on g by automorphisms.
StarCheck is_star_transitive_direct(const Graph& g, const PermGroup& group, const Caps& caps = {});
/// Full symmetric local action at every vertex, and one orbit per valency.
bool is_star_transitive_fast(const Graph& g, const PermGroup& group);

/// Every edge-star isomorphism extends to an element of `group`.
EdgeStarCheck is_stedge_transitive_direct(const Graph& g, const PermGroup& group, const Caps& caps = {});
/// Edge-transitivity per valency pattern plus independent full symmetric groups
/// on both sides of a representative edge. Needs minimum valency >= 3 and girth >= 4;
/// throws HypothesisError otherwise.
bool is_stedge_transitive_fast(const Graph& g, const PermGroup& group);
/// Same answer as the direct check, from the order of the image of each
/// representative edge stabiliser on its edge-star. No hypotheses, no cap.
bool is_stedge_transitive_by_image(const Graph& g, const PermGroup& group);

struct ArcTransitivity {
  std::size_t max_local_s = 0;
  std::optional<std::size_t> s_transitive;   // set when the group is vertex-transitive
  std::vector<std::pair<Vertex, std::size_t>> per_rep;
  bool reached_cap = false;
  bool cycle = false;    // every vertex has valency 2
  bool vacuous = false;  // some arcs could not be extended (valency-1 vertices)
};
/// For each vertex orbit representative v, the largest s <= max_s with G_v
/// transitive on the s-arcs starting at v.
ArcTransitivity local_s_arc_transitivity(const Graph& g, const PermGroup& group, std::size_t max_s = 9);

struct StabiliserTower {
  Vertex v = 0, w = 0;
  Order gv, gw, gvw;
  Order gv1, gv2, gv3;  // pointwise stabilisers of the balls of radius 1..3 about v
  Order gw1, gw2, gw3;
  Order gvw1;           // G_v^[1] cap G_w^[1]
  bool gvw1_moves_sphere2_v = false;
  bool gvw1_moves_sphere2_w = false;
};
StabiliserTower stabiliser_tower(const Graph& g, const PermGroup& group, Vertex v, Vertex w);

struct Classification {
  std::string label = "not-applicable";
  std::string detail;
  std::optional<std::string> contradiction;
};

struct VertexOrbitInfo {
  Vertex rep = 0;
  std::size_t size = 0;
  std::size_t valency = 0;
  Order stabiliser_order;
  LocalActionReport local;
  std::size_t local_s = 0;
};

struct CheckOutcome {
  bool value = false;
  std::optional<bool> direct;
  std::optional<bool> fast;
  std::optional<bool> by_image;
  std::string counterexample;
};

struct SymmetryReport {
  std::string group_used;
  Order group_order;
  std::size_t vertices = 0, edges = 0;
  bool connected = false;
  std::optional<std::size_t> girth;
  std::map<std::size_t, std::size_t> valencies;
  std::size_t vertex_orbit_count = 0, edge_orbit_count = 0;
  bool vertex_transitive = false;
  CheckOutcome star, stedge;
  ArcTransitivity arcs;
  std::vector<VertexOrbitInfo> orbits;
  std::vector<StabiliserTower> towers;  // one per edge orbit
  Classification classification;
  std::vector<std::string> findings;  // contradictions between computed facts and the theorems

  bool falsified() const { return !findings.empty(); }
};

/// Matches a connected graph with both properties against the known shapes:
/// small valency, vertex-transitive, or bipartite vertex-intransitive.
Classification classify_instance(const Graph& g, const PermGroup& group, const SymmetryReport& facts);

/// Runs every check. Without a group the full automorphism group is used.
SymmetryReport analyze(const Graph& g, const std::optional<PermGroup>& group = std::nullopt,
                       const std::string& group_name = "", const Caps& caps = {});

std::string report_json(const SymmetryReport& r);
std::string report_text(const SymmetryReport& r);

}  // namespace stargraph
