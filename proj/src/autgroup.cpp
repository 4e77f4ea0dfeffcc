#include "stargraph/autgroup.hpp"

#include <algorithm>
#include <numeric>

namespace stargraph {

Colouring refine(const Graph& g, Colouring c) {
  const std::size_t n = g.vertex_count();
  if (n == 0) return c;
  std::size_t classes = *std::max_element(c.begin(), c.end()) + 1;
  std::vector<std::uint32_t> flat;
  std::vector<std::size_t> start(n + 1);
  std::vector<Vertex> order(n);
  while (true) {
    flat.clear();
    for (Vertex v = 0; v < n; ++v) {
      start[v] = flat.size();
      flat.push_back(c[v]);
      std::size_t from = flat.size();
      for (Vertex w : g.neighbours(v)) flat.push_back(c[w]);
      std::sort(flat.begin() + static_cast<std::ptrdiff_t>(from), flat.end());
    }
    start[n] = flat.size();
    auto less = [&](Vertex a, Vertex b) {
      return std::lexicographical_compare(flat.begin() + start[a], flat.begin() + start[a + 1], flat.begin() + start[b],
                                          flat.begin() + start[b + 1]);
    };
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), less);
    Colouring next(n);
    std::uint32_t rank = 0;
    next[order[0]] = 0;
    for (std::size_t k = 1; k < n; ++k) {
      if (less(order[k - 1], order[k])) ++rank;
      next[order[k]] = rank;
    }
    c = std::move(next);
    if (rank + 1 == classes) return c;
    classes = rank + 1;
  }
}

Colouring individualise(const Colouring& c, Vertex v) {
  auto size = std::count(c.begin(), c.end(), c[v]);
  if (size <= 1) return c;
  Colouring out(c);
  for (Vertex u = 0; u < c.size(); ++u)
    if (u != v && c[u] >= c[v]) ++out[u];
  return out;
}

namespace {

std::vector<std::uint32_t> cell_sizes(const Colouring& c) {
  std::vector<std::uint32_t> s;
  for (auto x : c) {
    if (x >= s.size()) s.resize(x + 1, 0);
    ++s[x];
  }
  return s;
}

// Smallest non-singleton cell, ties to the lowest colour; empty when discrete.
std::vector<Vertex> target_cell(const Colouring& c, const std::vector<std::uint32_t>& sizes) {
  std::uint32_t best = 0, best_size = 0;
  for (std::uint32_t k = 0; k < sizes.size(); ++k)
    if (sizes[k] > 1 && (best_size == 0 || sizes[k] < best_size)) {
      best = k;
      best_size = sizes[k];
    }
  std::vector<Vertex> out;
  if (best_size == 0) return out;
  for (Vertex v = 0; v < c.size(); ++v)
    if (c[v] == best) out.push_back(v);
  return out;
}

struct PathNode {
  Colouring colours;
  std::vector<std::uint32_t> sizes;
  std::vector<Vertex> cell;
  Vertex chosen = 0;
};

// First path of the search tree of g0; later nodes in any tree are compared against it.
class FirstPath {
 public:
  explicit FirstPath(const Graph& g0) {
    Colouring c = refine(g0, Colouring(g0.vertex_count(), 0));
    while (true) {
      PathNode node;
      node.sizes = cell_sizes(c);
      node.cell = target_cell(c, node.sizes);
      node.colours = c;
      if (node.cell.empty()) {
        leaf_ = c;
        nodes_.push_back(std::move(node));
        break;
      }
      node.chosen = node.cell.front();
      c = refine(g0, individualise(c, node.chosen));
      nodes_.push_back(std::move(node));
    }
  }

  std::size_t depth() const { return nodes_.size() - 1; }
  const PathNode& node(std::size_t i) const { return nodes_[i]; }
  const Colouring& leaf() const { return leaf_; }

 private:
  std::vector<PathNode> nodes_;
  Colouring leaf_;
};

// Looks below `c` (in the tree of g) for a leaf matching the first path of g0 through an isomorphism g0 -> g.
class LeafSearch {
 public:
  LeafSearch(const Graph& g0, const Graph& g, const FirstPath& path) : g0_(g0), g_(g), path_(path) {}

  std::optional<Permutation> below(const Colouring& c, std::size_t depth, std::vector<Vertex>& seq) {
    auto sizes = cell_sizes(c);
    if (sizes != path_.node(depth).sizes) return std::nullopt;
    auto cell = target_cell(c, sizes);
    if (cell.empty()) return depth == path_.depth() ? leaf(c, seq) : std::nullopt;
    if (depth == path_.depth()) return std::nullopt;
    for (Vertex w : cell) {
      seq.push_back(w);
      auto r = below(refine(g_, individualise(c, w)), depth + 1, seq);
      seq.pop_back();
      if (r) return r;
    }
    return std::nullopt;
  }

 private:
  std::optional<Permutation> leaf(const Colouring& c, const std::vector<Vertex>& seq) {
    const std::size_t n = c.size();
    std::vector<Vertex> by_colour(n);
    for (Vertex v = 0; v < n; ++v) by_colour[c[v]] = v;
    std::vector<Point> img(n);
    const auto& leaf0 = path_.leaf();
    for (Vertex x = 0; x < n; ++x) img[x] = by_colour[leaf0[x]];
    for (std::size_t j = 0; j < seq.size(); ++j)
      if (img[path_.node(j).chosen] != seq[j]) return std::nullopt;
    for (auto [u, v] : g0_.edges())
      if (!g_.adjacent(img[u], img[v])) return std::nullopt;
    return Permutation::unchecked(std::move(img));
  }

  const Graph& g0_;
  const Graph& g_;
  const FirstPath& path_;
};

std::vector<Point> orbit_of(Point p, const std::vector<Permutation>& gens, std::size_t n) {
  std::vector<char> seen(n, 0);
  std::vector<Point> out{p};
  seen[p] = 1;
  for (std::size_t k = 0; k < out.size(); ++k)
    for (const auto& g : gens)
      if (!seen[g[out[k]]]) {
        seen[g[out[k]]] = 1;
        out.push_back(g[out[k]]);
      }
  return out;
}

void check_cap(const Graph& g, std::size_t cap) {
  if (g.vertex_count() > cap)
    throw CapacityError("graph has " + std::to_string(g.vertex_count()) + " vertices, above the limit of " +
                        std::to_string(cap));
}

}  // namespace

PermGroup automorphism_group(const Graph& g, std::size_t max_vertices) {
  check_cap(g, max_vertices);
  const std::size_t n = g.vertex_count();
  FirstPath path(g);
  LeafSearch search(g, g, path);
  std::vector<Permutation> gens;
  std::vector<Vertex> seq;
  for (std::size_t i = path.depth(); i-- > 0;) {
    const PathNode& node = path.node(i);
    seq.clear();
    for (std::size_t j = 0; j < i; ++j) seq.push_back(path.node(j).chosen);
    std::vector<Vertex> failed;
    for (Vertex w : node.cell) {
      if (w == node.chosen) continue;
      auto reached = orbit_of(node.chosen, gens, n);
      if (std::find(reached.begin(), reached.end(), w) != reached.end()) continue;
      bool dead = std::any_of(failed.begin(), failed.end(), [&](Vertex f) {
        auto o = orbit_of(f, gens, n);
        return std::find(o.begin(), o.end(), w) != o.end();
      });
      if (dead) continue;
      seq.push_back(w);
      auto found = search.below(refine(g, individualise(node.colours, w)), i + 1, seq);
      seq.pop_back();
      if (found) gens.push_back(std::move(*found));
      else failed.push_back(w);
    }
  }
  for (const auto& p : gens)
    if (!is_automorphism(g, p)) throw std::logic_error("search produced a non-automorphism");
  return PermGroup(n, std::move(gens));
}

namespace {

template <class Visit>
void backtrack_automorphisms(const Graph& g, Visit&& visit) {
  const std::size_t n = g.vertex_count();
  std::vector<Point> img(n);
  std::vector<char> used(n, 0);
  auto rec = [&](auto&& self, Vertex i) -> void {
    if (i == n) {
      visit(img);
      return;
    }
    for (Vertex t = 0; t < n; ++t) {
      if (used[t] || g.valency(t) != g.valency(i)) continue;
      bool ok = true;
      for (Vertex j = 0; j < i && ok; ++j) ok = g.adjacent(i, j) == g.adjacent(t, img[j]);
      if (!ok) continue;
      used[t] = 1;
      img[i] = t;
      self(self, i + 1);
      used[t] = 0;
    }
  };
  rec(rec, 0);
}

}  // namespace

PermGroup brute_automorphisms(const Graph& g) {
  if (g.vertex_count() > 10) throw CapacityError("brute-force automorphisms limited to 10 vertices");
  const std::size_t n = g.vertex_count();
  std::vector<Permutation> gens;
  PermGroup group = PermGroup::trivial(n);
  backtrack_automorphisms(g, [&](const std::vector<Point>& img) {
    auto p = Permutation::unchecked(img);
    if (group.contains(p)) return;
    gens.push_back(std::move(p));
    group = PermGroup(n, gens);
  });
  return group;
}

std::uint64_t count_automorphisms_brute(const Graph& g) {
  if (g.vertex_count() > 10) throw CapacityError("brute-force automorphisms limited to 10 vertices");
  std::uint64_t count = 0;
  backtrack_automorphisms(g, [&](const std::vector<Point>&) { ++count; });
  return count;
}

std::optional<Permutation> are_isomorphic(const Graph& g1, const Graph& g2, std::size_t max_vertices) {
  check_cap(g1, max_vertices);
  check_cap(g2, max_vertices);
  if (g1.vertex_count() != g2.vertex_count() || g1.edge_count() != g2.edge_count()) return std::nullopt;
  if (valency_profile(g1) != valency_profile(g2)) return std::nullopt;
  FirstPath path(g1);
  LeafSearch search(g1, g2, path);
  std::vector<Vertex> seq;
  return search.below(refine(g2, Colouring(g2.vertex_count(), 0)), 0, seq);
}

}  // namespace stargraph
