#pragma once

// Element-by-element group closure, used as an independent reference for the chain code.

#include <algorithm>
#include <set>
#include <vector>

#include "stargraph/permutation.hpp"

namespace stargraph::testing {

inline std::vector<Permutation> closure(std::size_t degree, const std::vector<Permutation>& gens) {
  std::set<Permutation> seen{Permutation(degree)};
  std::vector<Permutation> queue{Permutation(degree)};
  for (std::size_t k = 0; k < queue.size(); ++k)
    for (const auto& g : gens) {
      auto h = compose(queue[k], g);
      if (seen.insert(h).second) queue.push_back(h);
    }
  return {seen.begin(), seen.end()};
}

template <class Pred>
std::vector<Permutation> filter(const std::vector<Permutation>& elts, Pred pred) {
  std::vector<Permutation> out;
  std::copy_if(elts.begin(), elts.end(), std::back_inserter(out), pred);
  return out;
}

}  // namespace stargraph::testing
