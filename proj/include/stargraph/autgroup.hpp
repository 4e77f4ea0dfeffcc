#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "stargraph/graph.hpp"
#include "stargraph/permgroup.hpp"

namespace stargraph {

/// Vertex colouring; colours are dense ranks 0..k-1.
using Colouring = std::vector<std::uint32_t>;

/// Iterates (colour, sorted neighbour colours) to a fixed point. The result is
/// equitable and depends only on the isomorphism type of (g, c).
Colouring refine(const Graph& g, Colouring c);

/// Gives v a colour of its own, just below its old cell.
Colouring individualise(const Colouring& c, Vertex v);

/// Generators of Aut(g), found by individualisation-refinement search with
/// orbit pruning. Every generator is checked to be an automorphism.
/// Throws CapacityError above `max_vertices`.
PermGroup automorphism_group(const Graph& g, std::size_t max_vertices = 2000);

/// Aut(g) by exhaustive neighbour-preserving backtracking; n <= 10.
PermGroup brute_automorphisms(const Graph& g);
/// Number of automorphisms by the same backtracking, without building a group.
std::uint64_t count_automorphisms_brute(const Graph& g);

/// A bijection p with {p(u), p(v)} an edge of g2 exactly when {u, v} is an edge of g1.
std::optional<Permutation> are_isomorphic(const Graph& g1, const Graph& g2, std::size_t max_vertices = 2000);

}  // namespace stargraph
