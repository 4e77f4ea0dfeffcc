#include "stargraph/cosetgraph.hpp"

#include <algorithm>
#include <numeric>

#include "stargraph/errors.hpp"

namespace stargraph {

std::size_t CosetTable::coset_of(const Permutation& x) const {
  auto it = index_of_key.find(subgroup.coset_minimum(x));
  if (it == index_of_key.end()) throw std::logic_error("element outside the parent group");
  return it->second;
}

std::vector<std::size_t> CosetTable::orbit(std::size_t i, const PermGroup& group) const {
  std::vector<char> seen(index(), 0);
  std::vector<std::size_t> out{i};
  seen[i] = 1;
  for (std::size_t k = 0; k < out.size(); ++k)
    for (const auto& h : group.generators()) {
      auto j = coset_of(compose(reps[out[k]], h));
      if (!seen[j]) {
        seen[j] = 1;
        out.push_back(j);
      }
    }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

std::vector<Point> iota_points(std::size_t n) {
  std::vector<Point> v(n);
  std::iota(v.begin(), v.end(), 0);
  return v;
}

void require_subgroup(const PermGroup& G, const PermGroup& H, const char* name) {
  if (H.degree() != G.degree()) throw CosetError(std::string(name) + " has a different degree from G");
  for (const auto& h : H.generators())
    if (!G.contains(h)) throw CosetError(std::string(name) + " is not a subgroup of G");
}

PermGroup join(const PermGroup& a, const std::vector<Permutation>& extra) {
  auto gens = a.generators();
  gens.insert(gens.end(), extra.begin(), extra.end());
  return PermGroup(a.degree(), gens);
}

}  // namespace

CosetTable coset_action(const PermGroup& G, const PermGroup& H, std::size_t max_index) {
  require_subgroup(G, H, "H");
  Order idx = G.order() / H.order();
  if (idx > max_index)
    throw CapacityError("coset index " + idx.str() + " above the limit of " + std::to_string(max_index));

  auto hint = iota_points(G.degree());
  CosetTable t{PermGroup(G.degree(), H.generators(), hint), {}, {}, {}, {}, {}};
  const auto& gens = G.generators();
  Permutation id(G.degree());
  t.reps.push_back(id);
  t.tree_parent.push_back(0);
  t.tree_generator.push_back(0);
  t.index_of_key.emplace(t.subgroup.coset_minimum(id), 0);

  std::vector<std::vector<Point>> act(gens.size());
  for (std::size_t i = 0; i < t.reps.size(); ++i) {
    for (std::size_t s = 0; s < gens.size(); ++s) {
      Permutation y = compose(t.reps[i], gens[s]);
      auto [it, fresh] = t.index_of_key.emplace(t.subgroup.coset_minimum(y), t.reps.size());
      if (fresh) {
        t.reps.push_back(std::move(y));
        t.tree_parent.push_back(i);
        t.tree_generator.push_back(s);
      }
      act[s].push_back(static_cast<Point>(it->second));
    }
  }
  for (auto& a : act) t.action.push_back(Permutation::unchecked(std::move(a)));
  return t;
}

ConstructedInstance sabidussi(const PermGroup& G, const PermGroup& H, const Permutation& g, std::size_t max_index) {
  require_subgroup(G, H, "H");
  if (!G.contains(g)) throw CosetError("g is not an element of G");
  if (!H.contains(compose(g, g))) throw CosetError("g^2 is not in H");
  Permutation gi = g.inverse();
  bool normalises = std::all_of(H.generators().begin(), H.generators().end(),
                                [&](const Permutation& h) { return H.contains(compose(compose(gi, h), g)); });
  if (normalises) throw CosetError("g normalises H");
  if (join(H, {g}).order() != G.order()) throw CosetError("<H, g> is a proper subgroup of G");

  CosetTable t = coset_action(G, H, max_index);
  const std::size_t n = t.index();
  std::vector<std::vector<std::size_t>> nbrs(n);
  nbrs[0] = t.orbit(t.coset_of(g), H);
  for (std::size_t i = 1; i < n; ++i) {
    const auto& a = t.action[t.tree_generator[i]];
    for (std::size_t j : nbrs[t.tree_parent[i]]) nbrs[i].push_back(a[static_cast<Point>(j)]);
  }
  std::vector<Edge> es;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j : nbrs[i])
      if (i < j) es.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));

  ConstructedInstance out;
  out.name = "Cos(G,H,g)";
  out.graph = Graph::from_edges(n, es);
  for (std::size_t i = 0; i < n; ++i)
    if (out.graph.valency(static_cast<Vertex>(i)) != nbrs[i].size())
      throw std::logic_error("coset adjacency is not symmetric");
  out.group = PermGroup(n, t.action);
  out.group_name = "G on right cosets of H";
  check_generators(out.graph, *out.group);
  if (!is_connected(out.graph)) throw std::logic_error("coset graph is disconnected despite <H, g> = G");
  return out;
}

ConstructedInstance bipartite_coset(const PermGroup& G, const PermGroup& L, const PermGroup& R, std::size_t max_index) {
  require_subgroup(G, L, "L");
  require_subgroup(G, R, "R");
  if (join(L, R.generators()).order() != G.order()) throw CosetError("<L, R> is a proper subgroup of G");

  CosetTable tl = coset_action(G, L, max_index);
  CosetTable tr = coset_action(G, R, max_index);
  const std::size_t a = tl.index(), b = tr.index();
  std::vector<std::vector<std::size_t>> nbrs(a);
  nbrs[0] = tr.orbit(0, L);
  for (std::size_t i = 1; i < a; ++i) {
    const auto& act = tr.action[tl.tree_generator[i]];
    for (std::size_t j : nbrs[tl.tree_parent[i]]) nbrs[i].push_back(act[static_cast<Point>(j)]);
  }
  std::vector<Edge> es;
  for (std::size_t i = 0; i < a; ++i)
    for (std::size_t j : nbrs[i]) es.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(a + j));

  std::vector<Permutation> gens;
  for (std::size_t s = 0; s < G.generators().size(); ++s) {
    std::vector<Point> img(a + b);
    for (std::size_t i = 0; i < a; ++i) img[i] = tl.action[s][static_cast<Point>(i)];
    for (std::size_t j = 0; j < b; ++j) img[a + j] = static_cast<Point>(a + tr.action[s][static_cast<Point>(j)]);
    gens.push_back(Permutation::unchecked(std::move(img)));
  }
  ConstructedInstance out;
  out.name = "Cos(G,L,R)";
  out.graph = Graph::from_edges(a + b, es);
  out.group = PermGroup(a + b, std::move(gens));
  out.group_name = "G on right cosets of L and R";
  check_generators(out.graph, *out.group);
  return out;
}

}  // namespace stargraph
