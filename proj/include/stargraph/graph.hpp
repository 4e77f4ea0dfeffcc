#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "stargraph/errors.hpp"
#include "stargraph/permutation.hpp"

namespace stargraph {

using Vertex = Point;
using Edge = std::pair<Vertex, Vertex>;

/// Finite simple undirected graph on vertices 0..n-1 with sorted adjacency lists.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n) : adj_(n) {}

  /// Throws std::invalid_argument on loops, repeated edges or endpoints >= n.
  static Graph from_edges(std::size_t n, std::span<const Edge> edges);

  std::size_t vertex_count() const { return adj_.size(); }
  std::size_t edge_count() const { return edges_; }
  const std::vector<Vertex>& neighbours(Vertex v) const { return adj_[v]; }
  std::size_t valency(Vertex v) const { return adj_[v].size(); }
  bool adjacent(Vertex u, Vertex v) const;

  /// Edges as (min, max), sorted.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::vector<Vertex>> adj_;
  std::size_t edges_ = 0;
};

/// True when p preserves adjacency (and therefore non-adjacency) of g.
bool is_automorphism(const Graph& g, const Permutation& p);

/// Length of a shortest cycle; nullopt for forests.
std::optional<std::size_t> girth(const Graph& g);

/// valency -> number of vertices with that valency
std::map<std::size_t, std::size_t> valency_profile(const Graph& g);
std::size_t min_valency(const Graph& g);
std::size_t max_valency(const Graph& g);
/// The common valency, if every vertex has the same one.
std::optional<std::size_t> regular_valency(const Graph& g);

struct Bipartition {
  std::vector<Vertex> side0;  // contains vertex 0
  std::vector<Vertex> side1;
};
std::optional<Bipartition> bipartition(const Graph& g);

struct Biregular {
  Bipartition parts;
  std::size_t valency0 = 0;  // valency on side0
  std::size_t valency1 = 0;
};
/// Bipartite with constant valency on each side (the two may be equal).
std::optional<Biregular> biregular_bipartition(const Graph& g);

bool is_connected(const Graph& g);

/// Vertices at distance exactly i from v, sorted.
std::vector<Vertex> sphere(const Graph& g, Vertex v, std::size_t i);
/// Vertices at distance at most i from v, sorted.
std::vector<Vertex> ball(const Graph& g, Vertex v, std::size_t i);
/// BFS distances from v; unreachable vertices get SIZE_MAX.
std::vector<std::size_t> distances(const Graph& g, Vertex v);

using SArc = std::vector<Vertex>;
/// All s-arcs (non-backtracking walks v0..vs), in lexicographic order.
std::vector<SArc> enumerate_s_arcs(const Graph& g, std::size_t s);
std::vector<SArc> enumerate_s_arcs_from(const Graph& g, Vertex v, std::size_t s);
std::uint64_t count_s_arcs_from(const Graph& g, Vertex v, std::size_t s);
std::uint64_t count_s_arcs(const Graph& g, std::size_t s);

/// Each edge {u,v} (in edges() order) becomes u - x - v with x = n + edge index.
Graph subdivide_1(const Graph& g);
/// Each edge {u,v} becomes u - x - y - v with x = n + 2i adjacent to u and y = n + 2i + 1.
Graph subdivide_2(const Graph& g);

struct Smoothing {
  Graph sigma;
  std::vector<Vertex> sigma_to_g;   // sigma vertex -> vertex of g
  std::vector<Vertex> edge_vertex;  // sigma edge (in sigma.edges() order) -> its valency-2 vertex in g
};
/// Inverse of subdivide_1: succeeds only if the valency-2 vertices are independent,
/// every edge of g meets exactly one of them, and the resulting graph is simple
/// with minimum valency at least 3.
std::optional<Smoothing> smooth(const Graph& g);

Graph disjoint_union(const Graph& a, const Graph& b);
/// Image of g under p, i.e. edges {p(u), p(v)}.
Graph relabel(const Graph& g, const Permutation& p);

// Text format: `n <count>`, then `e <u> <v>` per edge; `#` starts a comment.
Graph parse_graph(std::istream& in);
Graph parse_graph(const std::string& text);
Graph read_graph_file(const std::string& path);
void write_graph(std::ostream& out, const Graph& g);
std::string serialize(const Graph& g);
void write_graph_file(const std::string& path, const Graph& g);

}  // namespace stargraph
