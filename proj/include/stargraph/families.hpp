#pragma once

#include <cstddef>
#include <vector>

#include "stargraph/caps.hpp"
#include "stargraph/instance.hpp"

namespace stargraph {

// Plain graphs; no group is attached (analyses fall back to the full automorphism group).

/// C_n on 0..n-1, i ~ i+1.
ConstructedInstance cycle(std::size_t n);
/// K_n.
ConstructedInstance complete(std::size_t n);
/// K_{m,n}: 0..m-1 on one side, m..m+n-1 on the other.
ConstructedInstance complete_bipartite(std::size_t m, std::size_t n);
/// Spider T_n: centre 0, inner vertices 1..n, leg ends n+1..2n with i ~ n+i.
ConstructedInstance spider(std::size_t n);
/// Path on n vertices 0 - 1 - ... - n-1.
ConstructedInstance path(std::size_t n);

/// k-subsets of {0..n-1} in colex order, each as a sorted vector.
std::vector<std::vector<Point>> colex_subsets(std::size_t n, std::size_t k);

/// Odd graph of valency k: (k-1)-subsets of a (2k-1)-set, adjacent when disjoint. Group S_{2k-1}.
ConstructedInstance odd_graph(std::size_t k, const Caps& caps = {});

/// m-subsets (first) and (m-1)-subsets of an n-set, adjacent by inclusion. Group S_n.
/// Flags "equal-valency-exception" when m = n-m+1 and "doubled-odd-graph" when n = 2m+1.
ConstructedInstance johnson_incidence(std::size_t n, std::size_t m, const Caps& caps = {});

/// Tuples of {0..n-1}^k (tuple x at index sum x_i n^i), then the maximal cliques of
/// the Hamming graph H(k, n), adjacent by inclusion. Group S_n wr S_k.
ConstructedInstance hamming_clique_incidence(std::size_t k, std::size_t n, const Caps& caps = {});

/// Point-line incidence graph of PG(2, q), q in {2, 3}: points first, then lines.
ConstructedInstance pg_incidence(std::size_t q);

/// Generalised quadrangle of order (2, 4) from the Hermitian form sum x_i y_i^2
/// over GF(4): 45 isotropic points first, then 27 totally isotropic lines.
ConstructedInstance hermitian_gq();

/// Vectors of W = {x in GF(3)^n : sum x_i = 0} first, then the translates of
/// the n lines <v>^g, v = (1, ..., 1, 1-n). Group W : (S_n x <-1>). Needs n >= 4, 3 not dividing n.
ConstructedInstance gf3_translate_graph(std::size_t n, const Caps& caps = {});

/// Cos(S_n, H, g) with n = (r-1)^2, H = S_r x S_{r-1} acting on 2-subsets of an
/// r-set and of an (r-1)-set, and g the involution matching the 2-subsets of an
/// (r-1)-subset of the first set with those of the second.
ConstructedInstance s_squared_example(std::size_t r, const Caps& caps = {});

/// Extends a permutation of the first `points` vertices of an incidence-style
/// graph to the remaining vertices, each of which is identified by its
/// neighbourhood among the points. Throws if some image neighbourhood is missing.
Permutation extend_to_blocks(const Graph& g, std::size_t points, const Permutation& on_points);

}  // namespace stargraph
