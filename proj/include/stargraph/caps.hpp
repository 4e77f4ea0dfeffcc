#pragma once

#include <cstddef>

namespace stargraph {

/// Size limits shared by constructions and analyses.
struct Caps {
  std::size_t max_vertices = 5000;
  std::size_t max_group_degree = 5000;
  std::size_t max_coset_index = 10000;
  std::size_t direct_valency = 8;  // direct checks enumerate valency! bijections
  std::size_t max_s = 9;
  std::size_t aut_vertices = 2000;
};

}  // namespace stargraph
