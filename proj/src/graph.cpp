#include "stargraph/graph.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

namespace stargraph {

namespace {

constexpr std::size_t kInf = std::numeric_limits<std::size_t>::max();

}  // namespace

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges) {
  Graph g(n);
  for (auto [u, v] : edges) {
    if (u >= n || v >= n)
      throw std::invalid_argument("edge {" + std::to_string(u) + "," + std::to_string(v) + "} outside vertex range");
    if (u == v) throw std::invalid_argument("loop at vertex " + std::to_string(u));
    g.adj_[u].push_back(v);
    g.adj_[v].push_back(u);
  }
  for (Vertex v = 0; v < n; ++v) {
    auto& a = g.adj_[v];
    std::sort(a.begin(), a.end());
    auto dup = std::adjacent_find(a.begin(), a.end());
    if (dup != a.end())
      throw std::invalid_argument("repeated edge {" + std::to_string(std::min(v, *dup)) + "," +
                                  std::to_string(std::max(v, *dup)) + "}");
  }
  g.edges_ = edges.size();
  return g;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  const auto& a = adj_[u];
  return std::binary_search(a.begin(), a.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edges_);
  for (Vertex u = 0; u < adj_.size(); ++u)
    for (Vertex v : adj_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

bool is_automorphism(const Graph& g, const Permutation& p) {
  if (p.degree() != g.vertex_count()) return false;
  for (Vertex u = 0; u < g.vertex_count(); ++u) {
    if (g.valency(u) != g.valency(p[u])) return false;
    for (Vertex v : g.neighbours(u))
      if (!g.adjacent(p[u], p[v])) return false;
  }
  return true;
}

std::optional<std::size_t> girth(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::size_t best = kInf;
  std::vector<std::size_t> dist(n, kInf);
  std::vector<Vertex> parent(n), queue;
  queue.reserve(n);
  for (Vertex r = 0; r < n; ++r) {
    queue.clear();
    queue.push_back(r);
    dist[r] = 0;
    parent[r] = r;
    for (std::size_t k = 0; k < queue.size(); ++k) {
      Vertex u = queue[k];
      if (best != kInf && 2 * dist[u] + 1 >= best) break;
      for (Vertex w : g.neighbours(u)) {
        if (dist[w] == kInf) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          queue.push_back(w);
        } else if (parent[u] != w) {
          best = std::min(best, dist[u] + dist[w] + 1);
        }
      }
    }
    for (Vertex v : queue) dist[v] = kInf;
  }
  if (best == kInf) return std::nullopt;
  return best;
}

std::map<std::size_t, std::size_t> valency_profile(const Graph& g) {
  std::map<std::size_t, std::size_t> out;
  for (Vertex v = 0; v < g.vertex_count(); ++v) ++out[g.valency(v)];
  return out;
}

std::size_t min_valency(const Graph& g) {
  std::size_t m = kInf;
  for (Vertex v = 0; v < g.vertex_count(); ++v) m = std::min(m, g.valency(v));
  return m == kInf ? 0 : m;
}

std::size_t max_valency(const Graph& g) {
  std::size_t m = 0;
  for (Vertex v = 0; v < g.vertex_count(); ++v) m = std::max(m, g.valency(v));
  return m;
}

std::optional<std::size_t> regular_valency(const Graph& g) {
  auto prof = valency_profile(g);
  if (prof.size() != 1) return std::nullopt;
  return prof.begin()->first;
}

std::optional<Bipartition> bipartition(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<int> side(n, -1);
  for (Vertex s = 0; s < n; ++s) {
    if (side[s] >= 0) continue;
    side[s] = 0;
    std::deque<Vertex> q{s};
    while (!q.empty()) {
      Vertex u = q.front();
      q.pop_front();
      for (Vertex w : g.neighbours(u)) {
        if (side[w] < 0) {
          side[w] = 1 - side[u];
          q.push_back(w);
        } else if (side[w] == side[u]) {
          return std::nullopt;
        }
      }
    }
  }
  Bipartition b;
  for (Vertex v = 0; v < n; ++v) (side[v] == 0 ? b.side0 : b.side1).push_back(v);
  return b;
}

std::optional<Biregular> biregular_bipartition(const Graph& g) {
  auto b = bipartition(g);
  if (!b || b->side0.empty() || b->side1.empty()) return std::nullopt;
  auto constant = [&](const std::vector<Vertex>& side) -> std::optional<std::size_t> {
    std::size_t k = g.valency(side.front());
    for (Vertex v : side)
      if (g.valency(v) != k) return std::nullopt;
    return k;
  };
  auto k0 = constant(b->side0), k1 = constant(b->side1);
  if (!k0 || !k1) return std::nullopt;
  return Biregular{std::move(*b), *k0, *k1};
}

std::vector<std::size_t> distances(const Graph& g, Vertex v) {
  std::vector<std::size_t> dist(g.vertex_count(), kInf);
  std::vector<Vertex> queue{v};
  dist[v] = 0;
  for (std::size_t k = 0; k < queue.size(); ++k)
    for (Vertex w : g.neighbours(queue[k]))
      if (dist[w] == kInf) {
        dist[w] = dist[queue[k]] + 1;
        queue.push_back(w);
      }
  return dist;
}

bool is_connected(const Graph& g) {
  if (g.vertex_count() == 0) return true;
  auto d = distances(g, 0);
  return std::none_of(d.begin(), d.end(), [](std::size_t x) { return x == kInf; });
}

namespace {

std::vector<Vertex> layers(const Graph& g, Vertex v, std::size_t i, bool whole_ball) {
  if (v >= g.vertex_count()) throw std::out_of_range("vertex out of range");
  std::vector<std::size_t> dist(g.vertex_count(), kInf);
  std::vector<Vertex> queue{v};
  dist[v] = 0;
  for (std::size_t k = 0; k < queue.size(); ++k) {
    Vertex u = queue[k];
    if (dist[u] == i) continue;
    for (Vertex w : g.neighbours(u))
      if (dist[w] == kInf) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
  }
  std::vector<Vertex> out;
  for (Vertex u : queue)
    if (whole_ball || dist[u] == i) out.push_back(u);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<Vertex> sphere(const Graph& g, Vertex v, std::size_t i) { return layers(g, v, i, false); }
std::vector<Vertex> ball(const Graph& g, Vertex v, std::size_t i) { return layers(g, v, i, true); }

std::vector<SArc> enumerate_s_arcs_from(const Graph& g, Vertex v, std::size_t s) {
  std::vector<SArc> out;
  SArc walk{v};
  // next[d] = index into neighbours(walk[d]) to try next
  std::vector<std::size_t> next{0};
  while (!walk.empty()) {
    std::size_t d = walk.size() - 1;
    if (d == s) {
      out.push_back(walk);
      walk.pop_back();
      next.pop_back();
      continue;
    }
    const auto& nb = g.neighbours(walk[d]);
    bool pushed = false;
    while (next[d] < nb.size()) {
      Vertex w = nb[next[d]++];
      if (d > 0 && w == walk[d - 1]) continue;
      walk.push_back(w);
      next.push_back(0);
      pushed = true;
      break;
    }
    if (!pushed) {
      walk.pop_back();
      next.pop_back();
    }
  }
  return out;
}

std::vector<SArc> enumerate_s_arcs(const Graph& g, std::size_t s) {
  std::vector<SArc> out;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    auto part = enumerate_s_arcs_from(g, v, s);
    out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  }
  return out;
}

std::uint64_t count_s_arcs_from(const Graph& g, Vertex v, std::size_t s) {
  if (s == 0) return 1;
  // ways[u][j]: non-backtracking walks of the current length leaving u, having arrived from neighbours(u)[j]
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<std::uint64_t>> ways(n);
  for (Vertex u = 0; u < n; ++u) ways[u].assign(g.valency(u), 1);
  for (std::size_t step = 1; step < s; ++step) {
    std::vector<std::vector<std::uint64_t>> next(n);
    for (Vertex u = 0; u < n; ++u) {
      const auto& nb = g.neighbours(u);
      next[u].assign(nb.size(), 0);
      std::uint64_t total = 0;
      std::vector<std::uint64_t> via(nb.size());
      for (std::size_t j = 0; j < nb.size(); ++j) {
        const auto& nbw = g.neighbours(nb[j]);
        auto back = static_cast<std::size_t>(std::lower_bound(nbw.begin(), nbw.end(), u) - nbw.begin());
        via[j] = ways[nb[j]][back];
        total += via[j];
      }
      for (std::size_t j = 0; j < nb.size(); ++j) next[u][j] = total - via[j];
    }
    ways = std::move(next);
  }
  std::uint64_t total = 0;
  for (Vertex w : g.neighbours(v)) {
    const auto& nbw = g.neighbours(w);
    auto back = static_cast<std::size_t>(std::lower_bound(nbw.begin(), nbw.end(), v) - nbw.begin());
    total += ways[w][back];
  }
  return total;
}

std::uint64_t count_s_arcs(const Graph& g, std::size_t s) {
  std::uint64_t t = 0;
  for (Vertex v = 0; v < g.vertex_count(); ++v) t += count_s_arcs_from(g, v, s);
  return t;
}

Graph subdivide_1(const Graph& g) {
  auto es = g.edges();
  const auto n = static_cast<Vertex>(g.vertex_count());
  std::vector<Edge> out;
  for (std::size_t i = 0; i < es.size(); ++i) {
    Vertex x = n + static_cast<Vertex>(i);
    out.emplace_back(es[i].first, x);
    out.emplace_back(x, es[i].second);
  }
  return Graph::from_edges(n + es.size(), out);
}

Graph subdivide_2(const Graph& g) {
  auto es = g.edges();
  const auto n = static_cast<Vertex>(g.vertex_count());
  std::vector<Edge> out;
  for (std::size_t i = 0; i < es.size(); ++i) {
    Vertex x = n + static_cast<Vertex>(2 * i), y = x + 1;
    out.emplace_back(es[i].first, x);
    out.emplace_back(x, y);
    out.emplace_back(y, es[i].second);
  }
  return Graph::from_edges(n + 2 * es.size(), out);
}

std::optional<Smoothing> smooth(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<char> two(n, 0);
  bool any = false;
  for (Vertex v = 0; v < n; ++v)
    if (g.valency(v) == 2) two[v] = any = 1;
  if (!any) return std::nullopt;

  std::vector<std::int64_t> index(n, -1);
  std::vector<Vertex> sigma_to_g;
  for (Vertex v = 0; v < n; ++v) {
    if (two[v]) continue;
    if (g.valency(v) < 3) return std::nullopt;
    index[v] = static_cast<std::int64_t>(sigma_to_g.size());
    sigma_to_g.push_back(v);
  }
  for (auto [u, v] : g.edges())
    if (two[u] == two[v]) return std::nullopt;

  std::map<Edge, Vertex> via;
  for (Vertex x = 0; x < n; ++x) {
    if (!two[x]) continue;
    auto a = static_cast<Vertex>(index[g.neighbours(x)[0]]);
    auto b = static_cast<Vertex>(index[g.neighbours(x)[1]]);
    if (!via.emplace(Edge{std::min(a, b), std::max(a, b)}, x).second) return std::nullopt;
  }
  std::vector<Edge> es;
  Smoothing out;
  for (auto& [e, x] : via) {
    es.push_back(e);
    out.edge_vertex.push_back(x);
  }
  out.sigma = Graph::from_edges(sigma_to_g.size(), es);
  out.sigma_to_g = std::move(sigma_to_g);
  return out;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  auto es = a.edges();
  const auto off = static_cast<Vertex>(a.vertex_count());
  for (auto [u, v] : b.edges()) es.emplace_back(u + off, v + off);
  return Graph::from_edges(a.vertex_count() + b.vertex_count(), es);
}

Graph relabel(const Graph& g, const Permutation& p) {
  if (p.degree() != g.vertex_count()) throw std::invalid_argument("relabelling of wrong degree");
  std::vector<Edge> es;
  for (auto [u, v] : g.edges()) es.emplace_back(p[u], p[v]);
  return Graph::from_edges(g.vertex_count(), es);
}

Graph parse_graph(std::istream& in) {
  std::optional<std::size_t> n;
  std::vector<Edge> es;
  std::map<Edge, std::size_t> seen;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag)) continue;
    auto number = [&](const char* what) {
      long long x;
      if (!(ls >> x)) throw FormatError(lineno, std::string("expected ") + what);
      if (x < 0) throw FormatError(lineno, std::string("negative ") + what);
      return static_cast<std::size_t>(x);
    };
    if (tag == "n") {
      if (n) throw FormatError(lineno, "vertex count given twice");
      n = number("vertex count");
    } else if (tag == "e") {
      if (!n) throw FormatError(lineno, "edge before vertex count");
      std::size_t u = number("endpoint"), v = number("endpoint");
      if (u >= *n || v >= *n) throw FormatError(lineno, "endpoint out of range");
      if (u == v) throw FormatError(lineno, "loop at vertex " + std::to_string(u));
      Edge e{static_cast<Vertex>(std::min(u, v)), static_cast<Vertex>(std::max(u, v))};
      if (auto [it, fresh] = seen.emplace(e, lineno); !fresh)
        throw FormatError(lineno, "duplicate edge (first on line " + std::to_string(it->second) + ")");
      es.push_back(e);
    } else {
      throw FormatError(lineno, "unknown record '" + tag + "'");
    }
    std::string extra;
    if (ls >> extra) throw FormatError(lineno, "trailing text '" + extra + "'");
  }
  if (!n) throw FormatError(0, "missing vertex count line");
  return Graph::from_edges(*n, es);
}

Graph parse_graph(const std::string& text) {
  std::istringstream in(text);
  return parse_graph(in);
}

Graph read_graph_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open " + path);
  return parse_graph(f);
}

void write_graph(std::ostream& out, const Graph& g) {
  out << "n " << g.vertex_count() << '\n';
  for (auto [u, v] : g.edges()) out << "e " << u << ' ' << v << '\n';
}

std::string serialize(const Graph& g) {
  std::ostringstream out;
  write_graph(out, g);
  return out.str();
}

void write_graph_file(const std::string& path, const Graph& g) {
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot write " + path);
  write_graph(f, g);
}

}  // namespace stargraph
