#include "stargraph/instance.hpp"

#include <algorithm>

namespace stargraph {

bool ConstructedInstance::has_flag(const std::string& f) const {
  return std::find(flags.begin(), flags.end(), f) != flags.end();
}

void check_generators(const Graph& g, const PermGroup& group) {
  if (group.degree() != g.vertex_count())
    throw std::invalid_argument("group of degree " + std::to_string(group.degree()) + " on a graph with " +
                                std::to_string(g.vertex_count()) + " vertices");
  const auto& gens = group.generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    if (!is_automorphism(g, gens[i]))
      throw std::invalid_argument("generator " + std::to_string(i) + " " + gens[i].to_cycle_string() +
                                  " is not an automorphism");
}

}  // namespace stargraph
