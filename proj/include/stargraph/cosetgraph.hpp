#pragma once

#include <cstddef>
#include <map>
#include <stdexcept>
#include <vector>

#include "stargraph/instance.hpp"
#include "stargraph/permgroup.hpp"

namespace stargraph {

/// A violated precondition of a coset construction.
class CosetError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Right cosets Hx of a subgroup H in G, found breadth-first from H by right
/// multiplication with the generators of G.
struct CosetTable {
  PermGroup subgroup;                 // H, rebuilt with an increasing base
  std::vector<Permutation> reps;      // reps[0] is the identity
  std::vector<std::size_t> tree_parent;
  std::vector<std::size_t> tree_generator;  // reps[i] = reps[tree_parent[i]] * gens[tree_generator[i]]
  std::vector<Permutation> action;    // one per generator of G, on coset indices
  std::map<std::vector<Point>, std::size_t> index_of_key;

  std::size_t index() const { return reps.size(); }
  /// Index of the coset Hx.
  std::size_t coset_of(const Permutation& x) const;
  /// Cosets in the orbit of coset i under right multiplication by `group`.
  std::vector<std::size_t> orbit(std::size_t i, const PermGroup& group) const;
};

/// Throws CosetError if H is not a subgroup of G, CapacityError above `max_index`.
CosetTable coset_action(const PermGroup& G, const PermGroup& H, std::size_t max_index = 10000);

/// Cos(G, H, g): right cosets of H, with Hx ~ Hy iff x y^-1 lies in HgH.
/// Requires g in G, g^2 in H, g not normalising H, and <H, g> = G.
ConstructedInstance sabidussi(const PermGroup& G, const PermGroup& H, const Permutation& g,
                              std::size_t max_index = 10000);

/// Cos(G, L, R): cosets of L (vertices 0..|G:L|-1) and of R (the rest), with
/// Lx ~ Ry iff they intersect. Requires L, R <= G and <L, R> = G.
ConstructedInstance bipartite_coset(const PermGroup& G, const PermGroup& L, const PermGroup& R,
                                    std::size_t max_index = 10000);

}  // namespace stargraph
