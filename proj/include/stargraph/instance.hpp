#pragma once

#include <optional>
#include <string>
#include <vector>

#include "stargraph/graph.hpp"
#include "stargraph/permgroup.hpp"

namespace stargraph {

/// A graph together with the group it comes with, if any.
struct ConstructedInstance {
  std::string name;
  Graph graph;
  std::optional<PermGroup> group;
  std::string group_name;
  std::vector<std::string> labels;  // one per vertex, may be empty
  std::vector<std::string> flags;   // e.g. "doubled-odd-graph"

  bool has_flag(const std::string& f) const;
};

/// Throws std::invalid_argument naming the first generator that is not an automorphism.
void check_generators(const Graph& g, const PermGroup& group);

}  // namespace stargraph
