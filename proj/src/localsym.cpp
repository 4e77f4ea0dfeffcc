#include "stargraph/localsym.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include <json.hpp>

#include "stargraph/autgroup.hpp"
#include "stargraph/errors.hpp"
#include "stargraph/instance.hpp"

namespace stargraph {

OpenStar open_star(const Graph& g, Vertex v) {
  OpenStar s{v, {}};
  for (Vertex x : g.neighbours(v)) s.edges.emplace_back(v, x);
  return s;
}

namespace {

Edge norm(Vertex a, Vertex b) { return a < b ? Edge{a, b} : Edge{b, a}; }

std::vector<Vertex> others(const Graph& g, Vertex a, Vertex skip) {
  std::vector<Vertex> out;
  for (Vertex x : g.neighbours(a))
    if (x != skip) out.push_back(x);
  return out;
}

}  // namespace

EdgeStar edge_star(const Graph& g, Edge e) {
  auto [u, v] = e;
  if (!g.adjacent(u, v)) throw std::invalid_argument("not an edge");
  EdgeStar s{u, v, {norm(u, v)}};
  for (Vertex x : others(g, u, v)) s.edges.push_back(norm(u, x));
  for (Vertex y : others(g, v, u)) s.edges.push_back(norm(v, y));
  return s;
}

namespace {

std::string map_string(const std::vector<std::pair<Vertex, Vertex>>& m) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < m.size(); ++i) os << (i ? ", " : "") << m[i].first << "->" << m[i].second;
  os << '}';
  return os.str();
}

}  // namespace

std::string to_string(const StarIso& s) {
  return "star " + std::to_string(s.v1) + " -> " + std::to_string(s.v2) + " with " + map_string(s.map);
}

std::string to_string(const EdgeStarIso& s) {
  std::ostringstream os;
  os << "edge-star {" << s.e1.first << "," << s.e1.second << "} -> {" << s.e2.first << "," << s.e2.second << "}"
     << (s.swapped ? " swapping ends" : "") << " with " << map_string(s.at_u) << " and " << map_string(s.at_v);
  return os.str();
}

namespace {

void require_action(const Graph& g, const PermGroup& group) {
  if (group.degree() != g.vertex_count())
    throw std::invalid_argument("group degree " + std::to_string(group.degree()) + " differs from vertex count " +
                                std::to_string(g.vertex_count()));
  check_generators(g, group);
}

void require_direct_cap(const Graph& g, const Caps& caps) {
  if (g.vertex_count() && max_valency(g) > caps.direct_valency)
    throw CapacityError("valency " + std::to_string(max_valency(g)) + " above the direct-check limit of " +
                        std::to_string(caps.direct_valency));
}

std::vector<std::pair<Vertex, Vertex>> zip(const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) out.emplace_back(a[i], b[i]);
  return out;
}

std::vector<Point> iota_points(std::size_t k) {
  std::vector<Point> p(k);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

std::vector<Point> dedup_in_order(const std::vector<Point>& pts) {
  std::vector<Point> out;
  for (Point p : pts)
    if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(p);
  return out;
}

/// Realised local maps form a group; `add` grows it from one more realised map.
struct Realised {
  explicit Realised(std::size_t k) : group(PermGroup::trivial(k)) {}
  PermGroup group;
  void add(const Permutation& p) {
    auto gens = group.generators();
    gens.push_back(p);
    group = PermGroup(group.degree(), std::move(gens));
  }
};

class EdgeIndex {
 public:
  explicit EdgeIndex(const Graph& g) : n_(g.vertex_count()), edges_(g.edges()) {
    for (std::size_t i = 0; i < edges_.size(); ++i) index_.emplace(key(edges_[i].first, edges_[i].second), i);
  }
  std::size_t at(Vertex a, Vertex b) const { return index_.at(key(a, b)); }
  const std::vector<Edge>& edges() const { return edges_; }

 private:
  std::uint64_t key(Vertex a, Vertex b) const {
    auto [x, y] = norm(a, b);
    return static_cast<std::uint64_t>(x) * n_ + y;
  }
  std::size_t n_;
  std::vector<Edge> edges_;
  std::unordered_map<std::uint64_t, std::size_t> index_;
};

std::pair<std::size_t, std::size_t> pattern(const Graph& g, Edge e) {
  auto a = g.valency(e.first), b = g.valency(e.second);
  return {std::min(a, b), std::max(a, b)};
}

/// Two edge orbits with the same valency pattern give an edge-star isomorphism no element realises.
std::optional<EdgeStarIso> split_pattern(const Graph& g, const std::vector<Edge>& reps) {
  for (std::size_t i = 0; i < reps.size(); ++i)
    for (std::size_t j = i + 1; j < reps.size(); ++j) {
      if (pattern(g, reps[i]) != pattern(g, reps[j])) continue;
      auto [u1, v1] = reps[i];
      auto [u2, v2] = reps[j];
      bool swapped = g.valency(u1) != g.valency(u2);
      Vertex tu = swapped ? v2 : u2, tv = swapped ? u2 : v2;
      return EdgeStarIso{reps[i], reps[j], swapped, zip(others(g, u1, v1), others(g, tu, tv)),
                         zip(others(g, v1, u1), others(g, tv, tu))};
    }
  return std::nullopt;
}

std::vector<Edge> edge_orbit_reps(const Graph& g, const PermGroup& group) {
  auto edges = g.edges();
  std::vector<Edge> reps;
  for (const auto& o : edge_orbits(g, group)) reps.push_back(edges[o.front()]);
  return reps;
}

Order edge_star_automorphism_count(const Graph& g, Edge e) {
  std::size_t a = g.valency(e.first) - 1, b = g.valency(e.second) - 1;
  Order f = factorial(a) * factorial(b);
  return a == b ? f * 2 : f;
}

}  // namespace

std::vector<Vertex> vertex_orbit_reps(const PermGroup& group) {
  std::vector<Vertex> reps;
  for (const auto& o : group.orbits()) reps.push_back(o.front());
  std::sort(reps.begin(), reps.end());
  return reps;
}

std::vector<std::vector<std::size_t>> edge_orbits(const Graph& g, const PermGroup& group) {
  EdgeIndex idx(g);
  const auto& edges = idx.edges();
  std::vector<std::vector<std::size_t>> images;
  for (const auto& p : group.generators()) {
    std::vector<std::size_t> im(edges.size());
    for (std::size_t i = 0; i < edges.size(); ++i) im[i] = idx.at(p[edges[i].first], p[edges[i].second]);
    images.push_back(std::move(im));
  }
  std::vector<char> seen(edges.size(), 0);
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t s = 0; s < edges.size(); ++s) {
    if (seen[s]) continue;
    std::vector<std::size_t> orb{s};
    seen[s] = 1;
    for (std::size_t k = 0; k < orb.size(); ++k)
      for (const auto& im : images)
        if (!seen[im[orb[k]]]) {
          seen[im[orb[k]]] = 1;
          orb.push_back(im[orb[k]]);
        }
    std::sort(orb.begin(), orb.end());
    out.push_back(std::move(orb));
  }
  return out;
}

StarCheck is_star_transitive_direct(const Graph& g, const PermGroup& group, const Caps& caps) {
  require_action(g, group);
  require_direct_cap(g, caps);
  auto reps = vertex_orbit_reps(group);
  for (std::size_t i = 0; i < reps.size(); ++i)
    for (std::size_t j = i + 1; j < reps.size(); ++j)
      if (g.valency(reps[i]) == g.valency(reps[j]))
        return {false, StarIso{reps[i], reps[j], zip(g.neighbours(reps[i]), g.neighbours(reps[j]))}};

  // Within one orbit a star isomorphism v1 -> v2 reduces to one of st(v1) onto itself.
  for (Vertex v : reps) {
    const auto& nb = g.neighbours(v);
    const std::size_t k = nb.size();
    std::vector<Point> sources{v};
    sources.insert(sources.end(), nb.begin(), nb.end());
    PermGroup based = group.with_base_prefix(sources);
    Realised realised(k);
    const Order full = factorial(k);
    auto p = iota_points(k);
    do {
      if (realised.group.order() == full) break;
      Permutation phi(p);
      if (realised.group.contains(phi)) continue;
      std::vector<std::pair<Point, Point>> cons{{v, v}};
      for (std::size_t i = 0; i < k; ++i) cons.emplace_back(nb[i], nb[p[i]]);
      if (!based.transporter(cons)) {
        StarIso iso{v, v, {}};
        for (std::size_t i = 0; i < k; ++i) iso.map.emplace_back(nb[i], nb[p[i]]);
        return {false, iso};
      }
      realised.add(phi);
    } while (std::next_permutation(p.begin(), p.end()));
  }
  return {true, std::nullopt};
}

bool is_star_transitive_fast(const Graph& g, const PermGroup& group) {
  require_action(g, group);
  auto reps = vertex_orbit_reps(group);
  for (std::size_t i = 0; i < reps.size(); ++i)
    for (std::size_t j = i + 1; j < reps.size(); ++j)
      if (g.valency(reps[i]) == g.valency(reps[j])) return false;
  for (Vertex v : reps) {
    const auto& nb = g.neighbours(v);
    if (induced_action(group.point_stabiliser(v), nb).image.order() != factorial(nb.size())) return false;
  }
  return true;
}

EdgeStarCheck is_stedge_transitive_direct(const Graph& g, const PermGroup& group, const Caps& caps) {
  require_action(g, group);
  require_direct_cap(g, caps);
  auto reps = edge_orbit_reps(g, group);
  if (auto iso = split_pattern(g, reps)) return {false, iso};

  for (Edge e : reps) {
    auto [u, v] = e;
    const auto xs = others(g, u, v), ys = others(g, v, u);
    const std::size_t a = xs.size(), b = ys.size();
    const bool can_swap = a == b;
    std::vector<Point> sources{u, v};
    sources.insert(sources.end(), xs.begin(), xs.end());
    sources.insert(sources.end(), ys.begin(), ys.end());
    PermGroup based = group.with_base_prefix(dedup_in_order(sources));
    Realised realised(2 + a + b);  // u, v, then the edges at u, then the edges at v
    const Order full = edge_star_automorphism_count(g, e);

    // 0: done with this edge, 1: keep going, 2: failed
    std::optional<EdgeStarIso> failure;
    auto visit = [&](bool swap, const std::vector<Point>& pu, const std::vector<Point>& pv) {
      if (realised.group.order() == full) return 0;
      std::vector<Point> img(2 + a + b);
      img[0] = swap ? 1 : 0;
      img[1] = swap ? 0 : 1;
      for (std::size_t i = 0; i < a; ++i) img[2 + i] = static_cast<Point>(swap ? 2 + a + pu[i] : 2 + pu[i]);
      for (std::size_t j = 0; j < b; ++j) img[2 + a + j] = static_cast<Point>(swap ? 2 + pv[j] : 2 + a + pv[j]);
      Permutation phi(img);
      if (realised.group.contains(phi)) return 1;
      const auto& tx = swap ? ys : xs;
      const auto& ty = swap ? xs : ys;
      EdgeStarIso iso{e, e, swap, {}, {}};
      for (std::size_t i = 0; i < a; ++i) iso.at_u.emplace_back(xs[i], tx[pu[i]]);
      for (std::size_t j = 0; j < b; ++j) iso.at_v.emplace_back(ys[j], ty[pv[j]]);
      std::vector<std::pair<Point, Point>> cons{{u, swap ? v : u}, {v, swap ? u : v}};
      cons.insert(cons.end(), iso.at_u.begin(), iso.at_u.end());
      cons.insert(cons.end(), iso.at_v.begin(), iso.at_v.end());
      if (!based.transporter(cons)) {
        failure = iso;
        return 2;
      }
      realised.add(phi);
      return 1;
    };

    int state = 1;
    for (int swap = 0; swap < (can_swap ? 2 : 1) && state == 1; ++swap) {
      auto pu = iota_points(a);
      do {
        auto pv = iota_points(b);
        do {
          state = visit(swap, pu, pv);
        } while (state == 1 && std::next_permutation(pv.begin(), pv.end()));
      } while (state == 1 && std::next_permutation(pu.begin(), pu.end()));
    }
    if (state == 2) return {false, failure};
  }
  return {true, std::nullopt};
}

bool is_stedge_transitive_fast(const Graph& g, const PermGroup& group) {
  require_action(g, group);
  if (g.vertex_count() == 0 || min_valency(g) < 3) throw HypothesisError("minimum valency below 3");
  if (auto gi = girth(g); gi && *gi < 4) throw HypothesisError("girth 3");
  auto reps = edge_orbit_reps(g, group);
  if (split_pattern(g, reps)) return false;
  for (Edge e : reps) {
    auto [u, v] = e;
    auto xs = others(g, u, v), ys = others(g, v, u);
    std::vector<Point> ends{u, v};
    std::vector<Point> domain = xs;
    domain.insert(domain.end(), ys.begin(), ys.end());
    if (induced_action(group.setwise_stabiliser(ends), domain).image.order() != edge_star_automorphism_count(g, e))
      return false;
    PermGroup arc = group.pointwise_stabiliser(ends);
    if (induced_action(arc, xs).image.order() != factorial(xs.size())) return false;
    if (induced_action(arc, ys).image.order() != factorial(ys.size())) return false;
  }
  return true;
}

bool is_stedge_transitive_by_image(const Graph& g, const PermGroup& group) {
  require_action(g, group);
  auto reps = edge_orbit_reps(g, group);
  if (split_pattern(g, reps)) return false;
  for (Edge e : reps) {
    auto star = edge_star(g, e);
    std::map<Edge, Point> pos;
    // u and v take positions 0 and 1, the edges follow
    for (std::size_t i = 0; i < star.edges.size(); ++i) pos.emplace(star.edges[i], static_cast<Point>(2 + i));
    std::vector<Point> ends{e.first, e.second};
    std::vector<Permutation> gens;
    PermGroup stab = group.setwise_stabiliser(ends);
    for (const auto& s : stab.generators()) {
      std::vector<Point> img(2 + star.edges.size());
      img[0] = s[e.first] == e.first ? 0 : 1;
      img[1] = 1 - img[0];
      for (std::size_t i = 0; i < star.edges.size(); ++i)
        img[2 + i] = pos.at(norm(s[star.edges[i].first], s[star.edges[i].second]));
      gens.push_back(Permutation(img));
    }
    if (PermGroup(2 + star.edges.size(), gens).order() != edge_star_automorphism_count(g, e)) return false;
  }
  return true;
}

ArcTransitivity local_s_arc_transitivity(const Graph& g, const PermGroup& group, std::size_t max_s) {
  require_action(g, group);
  ArcTransitivity out;
  out.cycle = g.vertex_count() > 0 && regular_valency(g) == std::size_t{2};
  out.max_local_s = max_s;
  for (Vertex v : vertex_orbit_reps(group)) {
    PermGroup stab = group.point_stabiliser(v);
    std::vector<Vertex> arc{v};
    std::size_t s = 0;
    while (s < max_s) {
      Vertex last = arc.back();
      std::vector<Vertex> ext = arc.size() > 1 ? others(g, last, arc[arc.size() - 2]) : g.neighbours(last);
      if (ext.empty()) {
        out.vacuous = true;
        s = max_s;
        break;
      }
      if (stab.orbit(ext.front()).size() < ext.size()) break;
      ++s;
      arc.push_back(ext.front());
      stab = stab.point_stabiliser(ext.front());
    }
    out.per_rep.emplace_back(v, s);
    out.max_local_s = std::min(out.max_local_s, s);
  }
  if (g.vertex_count() == 0) out.max_local_s = 0;
  out.reached_cap = out.max_local_s == max_s;
  if (group.is_transitive()) out.s_transitive = out.max_local_s;
  return out;
}

StabiliserTower stabiliser_tower(const Graph& g, const PermGroup& group, Vertex v, Vertex w) {
  require_action(g, group);
  if (!g.adjacent(v, w)) throw std::invalid_argument("stabiliser tower needs an edge");
  StabiliserTower t;
  t.v = v;
  t.w = w;
  auto fix = [&](const std::vector<Vertex>& pts) { return group.pointwise_stabiliser(pts); };
  t.gv = group.point_stabiliser(v).order();
  t.gw = group.point_stabiliser(w).order();
  t.gvw = fix({v, w}).order();
  t.gv1 = fix(ball(g, v, 1)).order();
  t.gv2 = fix(ball(g, v, 2)).order();
  t.gv3 = fix(ball(g, v, 3)).order();
  t.gw1 = fix(ball(g, w, 1)).order();
  t.gw2 = fix(ball(g, w, 2)).order();
  t.gw3 = fix(ball(g, w, 3)).order();
  auto both = ball(g, v, 1);
  auto bw = ball(g, w, 1);
  both.insert(both.end(), bw.begin(), bw.end());
  PermGroup k = fix(both);
  t.gvw1 = k.order();
  auto moves = [&](const std::vector<Vertex>& pts) {
    for (const auto& p : k.generators())
      for (Vertex x : pts)
        if (p[x] != x) return true;
    return false;
  };
  t.gvw1_moves_sphere2_v = moves(sphere(g, v, 2));
  t.gvw1_moves_sphere2_w = moves(sphere(g, w, 2));
  return t;
}

namespace {

bool is_complete(const Graph& g) {
  std::size_t n = g.vertex_count();
  return g.edge_count() == n * (n - 1) / 2;
}

bool is_complete_bipartite(const Graph& g) {
  auto bp = bipartition(g);
  return bp && g.edge_count() == bp->side0.size() * bp->side1.size();
}

bool locally_fully_symmetric_arc_transitive(const Graph& sigma) {
  PermGroup aut = automorphism_group(sigma);
  if (!aut.is_transitive()) return false;
  const auto& nb = sigma.neighbours(0);
  return induced_action(aut.point_stabiliser(0), nb).image.order() == factorial(nb.size());
}

Classification small_valency(const Graph& g) {
  Classification c;
  const std::size_t n = g.vertex_count();
  if (g.edge_count() == n - 1 && max_valency(g) == n - 1) {
    c.label = "small-valency:star";
    c.detail = "K_{1," + std::to_string(n - 1) + "}";
    return c;
  }
  if (regular_valency(g) == std::size_t{2}) {
    c.label = "small-valency:cycle";
    c.detail = "C_" + std::to_string(n);
    return c;
  }
  if (auto bp = bipartition(g); bp && is_complete_bipartite(g) &&
                                std::min(bp->side0.size(), bp->side1.size()) == 2) {
    c.label = "small-valency:dipole-subdivision";
    c.detail = "K_{2," + std::to_string(n - 2) + "}, the subdivided " + std::to_string(n - 2) + "-fold dipole";
    return c;
  }
  if (auto sm = smooth(g)) {
    if (locally_fully_symmetric_arc_transitive(sm->sigma)) {
      c.label = "small-valency:subdivision";
      c.detail = "subdivision of a " + std::to_string(sm->sigma.vertex_count()) + "-vertex arc-transitive graph";
      return c;
    }
    c.label = "contradiction";
    c.contradiction = "smoothed graph is not arc-transitive and locally fully symmetric";
    return c;
  }
  c.label = "contradiction";
  c.contradiction = "minimum valency at most 2 but not a star, cycle or subdivision";
  return c;
}

Classification vertex_transitive(const Graph& g, const SymmetryReport& f) {
  Classification c;
  const std::size_t r = g.valency(0);
  const std::size_t s = f.arcs.s_transitive.value_or(0);
  const Order gv = f.orbits.front().stabiliser_order;
  c.detail = "valency " + std::to_string(r) + ", s = " + std::to_string(s) + ", |G_v| = " + gv.str();
  if (gv == factorial(r) * factorial(r - 1) && s == 3) {
    c.label = "vertex-transitive:1";
  } else if (r == 3 && (s == 4 || s == 5) && (gv == 24 || gv == 48)) {
    c.label = "vertex-transitive:2";
  } else if (r == 4 && (s == 4 || s == 7) && (gv == 432 || gv == 11664)) {
    c.label = "vertex-transitive:3";
  } else {
    c.label = "contradiction";
    c.contradiction = "vertex-transitive with both properties but matches no case: " + c.detail;
  }
  return c;
}

Classification bipartite_intransitive(const Graph& g, const PermGroup& group, const SymmetryReport& f) {
  Classification c;
  auto bi = biregular_bipartition(g);
  if (!bi || bi->valency0 == bi->valency1) {
    c.label = "contradiction";
    c.contradiction = "vertex-intransitive with both properties but not bipartite of two distinct valencies";
    return c;
  }
  if (f.arcs.max_local_s < 3) {
    c.label = "contradiction";
    c.contradiction = "vertex-intransitive with both properties but only locally " +
                      std::to_string(f.arcs.max_local_s) + "-arc-transitive";
    return c;
  }
  const StabiliserTower& t =
      f.towers.empty() ? stabiliser_tower(g, group, g.edges().front().first, g.edges().front().second)
                       : f.towers.front();
  const std::size_t rv = g.valency(t.v), rw = g.valency(t.w);
  c.detail = "bivalency {" + std::to_string(std::min(rv, rw)) + "," + std::to_string(std::max(rv, rw)) +
             "}, |G_vw^[1]| = " + t.gvw1.str();
  if (t.gvw1_moves_sphere2_v && t.gvw1_moves_sphere2_w) {
    c.label = "bipartite:1";
    if (std::min(rv, rw) != 3 || std::max(rv, rw) != 5)
      c.contradiction = "G_vw^[1] moves both second spheres but the bivalency is not {3,5}";
    return c;
  }
  if (t.gvw1 == 1) {
    c.label = "bipartite:2";
    if (t.gv != factorial(rv) * factorial(rw - 1) || t.gw != factorial(rw) * factorial(rv - 1))
      c.contradiction = "G_vw^[1] = 1 but |G_v| = " + t.gv.str() + ", |G_w| = " + t.gw.str();
    return c;
  }
  // v has valency r, w has valency l, after possibly exchanging them
  for (int flip = 0; flip < 2; ++flip) {
    const std::size_t r = flip ? rw : rv, l = flip ? rv : rw;
    const Order& w2 = flip ? t.gv2 : t.gw2;
    Order lo = 1, hi = 1;
    for (std::size_t i = 0; i + 1 < l; ++i) {
      lo *= factorial(r - 1) / 2;
      hi *= factorial(r - 1);
    }
    if (w2 == 1 && t.gvw1 % lo == 0 && hi % t.gvw1 == 0) {
      c.label = "bipartite:3";
      return c;
    }
  }
  c.label = "bipartite:4";
  if (std::min(rv, rw) > 5) c.contradiction = "no case fits and both valencies exceed 5";
  return c;
}

}  // namespace

Classification classify_instance(const Graph& g, const PermGroup& group, const SymmetryReport& f) {
  Classification c;
  if (g.vertex_count() == 0 || !f.connected) {
    c.detail = "disconnected";
    return c;
  }
  if (!(f.star.value && f.stedge.value)) {
    c.detail = "not both star-transitive and st(edge)-transitive";
    return c;
  }
  if (g.vertex_count() == 1) {
    c.detail = "single vertex";
    return c;
  }
  if (min_valency(g) <= 2) return small_valency(g);
  if (f.vertex_transitive) return vertex_transitive(g, f);
  return bipartite_intransitive(g, group, f);
}

SymmetryReport analyze(const Graph& g, const std::optional<PermGroup>& supplied, const std::string& group_name,
                       const Caps& caps) {
  if (g.vertex_count() > caps.max_vertices)
    throw CapacityError(std::to_string(g.vertex_count()) + " vertices above the limit of " +
                        std::to_string(caps.max_vertices));
  const PermGroup G = supplied ? *supplied : automorphism_group(g, caps.aut_vertices);
  require_action(g, G);

  SymmetryReport r;
  r.group_used = supplied ? (group_name.empty() ? "supplied" : group_name) : "full Aut";
  r.group_order = G.order();
  r.vertices = g.vertex_count();
  r.edges = g.edge_count();
  r.connected = g.vertex_count() > 0 && is_connected(g);
  r.girth = girth(g);
  r.valencies = valency_profile(g);
  r.vertex_transitive = g.vertex_count() > 0 && G.is_transitive();
  auto eorbits = edge_orbits(g, G);
  r.vertex_orbit_count = G.orbits().size();
  r.edge_orbit_count = eorbits.size();

  r.arcs = local_s_arc_transitivity(g, G, caps.max_s);
  for (const auto& o : G.orbits()) {
    VertexOrbitInfo info;
    info.rep = o.front();
    info.size = o.size();
    info.valency = g.valency(info.rep);
    PermGroup stab = G.point_stabiliser(info.rep);
    info.stabiliser_order = stab.order();
    auto ia = induced_action(stab, g.neighbours(info.rep));
    info.local = identify(ia.image, info.valency, ia.kernel_order);
    for (auto [v, s] : r.arcs.per_rep)
      if (v == info.rep) info.local_s = s;
    r.orbits.push_back(info);
  }
  std::sort(r.orbits.begin(), r.orbits.end(), [](const auto& a, const auto& b) { return a.rep < b.rep; });

  const bool within_cap = g.vertex_count() == 0 || max_valency(g) <= caps.direct_valency;
  r.star.fast = is_star_transitive_fast(g, G);
  if (within_cap) {
    auto d = is_star_transitive_direct(g, G, caps);
    r.star.direct = d.transitive;
    if (d.counterexample) r.star.counterexample = to_string(*d.counterexample);
  }
  r.star.value = r.star.direct.value_or(*r.star.fast);
  if (r.star.direct && *r.star.direct != *r.star.fast)
    r.findings.push_back("direct and fast star checks disagree");

  r.stedge.by_image = is_stedge_transitive_by_image(g, G);
  if (within_cap) {
    auto d = is_stedge_transitive_direct(g, G, caps);
    r.stedge.direct = d.transitive;
    if (d.counterexample) r.stedge.counterexample = to_string(*d.counterexample);
  }
  try {
    r.stedge.fast = is_stedge_transitive_fast(g, G);
  } catch (const HypothesisError&) {
  }
  r.stedge.value = r.stedge.direct.value_or(*r.stedge.by_image);
  for (auto other : {r.stedge.fast, r.stedge.by_image})
    if (other && *other != r.stedge.value) r.findings.push_back("st(edge) checks disagree");

  auto edges = g.edges();
  for (const auto& o : eorbits) r.towers.push_back(stabiliser_tower(g, G, edges[o.front()].first, edges[o.front()].second));

  const std::size_t minval = g.vertex_count() ? min_valency(g) : 0;
  if (minval >= 3 && r.stedge.value && !r.star.value)
    r.findings.push_back("st(edge)-transitive with minimum valency >= 3 but not star-transitive");
  if (r.star.value)
    for (const auto& o : r.orbits)
      if (o.local.order != factorial(o.valency)) r.findings.push_back("star-transitive but a local action is not symmetric");
  if (minval >= 3 && r.star.value && r.stedge.value && r.arcs.max_local_s < 3)
    r.findings.push_back("both properties at minimum valency >= 3 but not locally 3-arc-transitive");
  if (r.vertex_transitive && regular_valency(g) == std::size_t{3} && r.connected) {
    std::size_t s = r.arcs.s_transitive.value_or(0);
    if (r.star.value != (s >= 2)) r.findings.push_back("cubic vertex-transitive: star-transitivity differs from s >= 2");
    if ((r.star.value && r.stedge.value) != (s >= 3))
      r.findings.push_back("cubic vertex-transitive: both properties differ from s >= 3");
  }
  if (!supplied && r.connected && r.girth) {
    if (*r.girth == 3 && r.star.value && !is_complete(g)) r.findings.push_back("girth 3, star-transitive, not complete");
    if (*r.girth == 3 && r.stedge.value && g.vertex_count() != 3) r.findings.push_back("girth 3, st(edge)-transitive, not K_3");
    if (*r.girth == 4 && r.stedge.value && !is_complete_bipartite(g))
      r.findings.push_back("girth 4, st(edge)-transitive, not complete bipartite");
  }

  r.classification = classify_instance(g, G, r);
  if (r.classification.contradiction) r.findings.push_back(*r.classification.contradiction);
  return r;
}

namespace {

using Json = nlohmann::ordered_json;

Json opt(const std::optional<bool>& b) { return b ? Json(*b) : Json(nullptr); }

}  // namespace

std::string report_json(const SymmetryReport& r) {
  Json j;
  j["schema"] = 1;
  j["group_used"] = r.group_used;
  j["group_order"] = r.group_order.str();
  j["vertices"] = r.vertices;
  j["edges"] = r.edges;
  j["connected"] = r.connected;
  j["girth"] = r.girth ? Json(*r.girth) : Json(nullptr);
  Json val = Json::object();
  for (auto [k, n] : r.valencies) val[std::to_string(k)] = n;
  j["valencies"] = val;
  j["vertex_orbits"] = r.vertex_orbit_count;
  j["edge_orbits"] = r.edge_orbit_count;
  j["vertex_transitive"] = r.vertex_transitive;
  j["star_transitive"] = {{"value", r.star.value},
                          {"direct", opt(r.star.direct)},
                          {"fast", opt(r.star.fast)},
                          {"counterexample", r.star.counterexample}};
  j["stedge_transitive"] = {{"value", r.stedge.value},
                            {"direct", opt(r.stedge.direct)},
                            {"fast", opt(r.stedge.fast)},
                            {"by_image", opt(r.stedge.by_image)},
                            {"counterexample", r.stedge.counterexample}};
  j["max_local_s"] = r.arcs.max_local_s;
  j["s_transitive"] = r.arcs.s_transitive ? Json(*r.arcs.s_transitive) : Json(nullptr);
  j["s_cap_reached"] = r.arcs.reached_cap;
  j["cycle"] = r.arcs.cycle;
  Json orbits = Json::array();
  for (const auto& o : r.orbits)
    orbits.push_back({{"rep", o.rep},
                      {"size", o.size},
                      {"valency", o.valency},
                      {"stabiliser_order", o.stabiliser_order.str()},
                      {"local_action",
                       {{"order", o.local.order.str()},
                        {"kind", to_string(o.local.kind)},
                        {"transitive", o.local.transitive},
                        {"kernel_order", o.local.kernel_order.str()}}},
                      {"local_s", o.local_s}});
  j["orbits"] = orbits;
  Json towers = Json::array();
  for (const auto& t : r.towers)
    towers.push_back({{"v", t.v},
                      {"w", t.w},
                      {"G_v", t.gv.str()},
                      {"G_w", t.gw.str()},
                      {"G_vw", t.gvw.str()},
                      {"G_v^[1]", t.gv1.str()},
                      {"G_v^[2]", t.gv2.str()},
                      {"G_v^[3]", t.gv3.str()},
                      {"G_w^[1]", t.gw1.str()},
                      {"G_w^[2]", t.gw2.str()},
                      {"G_w^[3]", t.gw3.str()},
                      {"G_vw^[1]", t.gvw1.str()},
                      {"G_vw^[1]_moves_sphere2_v", t.gvw1_moves_sphere2_v},
                      {"G_vw^[1]_moves_sphere2_w", t.gvw1_moves_sphere2_w}});
  j["towers"] = towers;
  j["theorem_case"] = r.classification.label;
  j["classification_detail"] = r.classification.detail;
  j["findings"] = r.findings;
  return j.dump(2);
}

std::string report_text(const SymmetryReport& r) {
  std::ostringstream os;
  auto yn = [](bool b) { return b ? "yes" : "no"; };
  auto tri = [&](const std::optional<bool>& b) { return b ? std::string(yn(*b)) : std::string("-"); };
  os << "group: " << r.group_used << ", order " << r.group_order << "\n";
  os << "vertices " << r.vertices << ", edges " << r.edges << ", connected " << yn(r.connected) << ", girth "
     << (r.girth ? std::to_string(*r.girth) : std::string("none")) << "\n";
  os << "valencies:";
  for (auto [k, n] : r.valencies) os << " " << k << "x" << n;
  os << "\nvertex orbits " << r.vertex_orbit_count << ", edge orbits " << r.edge_orbit_count << "\n";
  os << "star-transitive: " << yn(r.star.value) << " (direct " << tri(r.star.direct) << ", fast " << tri(r.star.fast)
     << ")\n";
  if (!r.star.counterexample.empty()) os << "  not realised: " << r.star.counterexample << "\n";
  os << "st(edge)-transitive: " << yn(r.stedge.value) << " (direct " << tri(r.stedge.direct) << ", fast "
     << tri(r.stedge.fast) << ", image " << tri(r.stedge.by_image) << ")\n";
  if (!r.stedge.counterexample.empty()) os << "  not realised: " << r.stedge.counterexample << "\n";
  os << "locally s-arc-transitive up to s = " << r.arcs.max_local_s << (r.arcs.reached_cap ? " (cap)" : "")
     << (r.arcs.cycle ? " (cycle)" : "") << "\n";
  if (r.arcs.s_transitive) os << "s-transitive: s = " << *r.arcs.s_transitive << "\n";
  for (const auto& o : r.orbits)
    os << "orbit of " << o.rep << ": size " << o.size << ", valency " << o.valency << ", |G_v| = " << o.stabiliser_order
       << ", local action order " << o.local.order << " (" << to_string(o.local.kind) << "), local s " << o.local_s
       << "\n";
  for (const auto& t : r.towers)
    os << "edge {" << t.v << "," << t.w << "}: |G_v| " << t.gv << ", |G_w| " << t.gw << ", |G_vw| " << t.gvw
       << ", |G_v^[1..3]| " << t.gv1 << "/" << t.gv2 << "/" << t.gv3 << ", |G_w^[1..3]| " << t.gw1 << "/" << t.gw2
       << "/" << t.gw3 << ", |G_vw^[1]| " << t.gvw1 << "\n";
  os << "case: " << r.classification.label;
  if (!r.classification.detail.empty()) os << " (" << r.classification.detail << ")";
  os << "\n";
  for (const auto& f : r.findings) os << "FINDING: " << f << "\n";
  return os.str();
}

}  // namespace stargraph
