#include "stargraph/permutation.hpp"

#include <numeric>
#include <ostream>
#include <sstream>

namespace stargraph {

Permutation::Permutation(std::size_t degree) : images_(degree) {
  std::iota(images_.begin(), images_.end(), Point{0});
}

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (Point p : images_) {
    if (p >= images_.size()) {
      throw PermutationError("image " + std::to_string(p) + " out of range for degree " +
                             std::to_string(images_.size()));
    }
    if (seen[p]) throw PermutationError("image " + std::to_string(p) + " repeated; not a bijection");
    seen[p] = true;
  }
}

Permutation Permutation::from_cycles(std::size_t degree,
                                     std::initializer_list<std::initializer_list<Point>> cycles) {
  std::vector<std::vector<Point>> cs;
  for (const auto& c : cycles) cs.emplace_back(c);
  return from_cycles(degree, cs);
}

Permutation Permutation::from_cycles(std::size_t degree, const std::vector<std::vector<Point>>& cycles) {
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  std::vector<bool> used(degree, false);
  for (const auto& cycle : cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      Point from = cycle[i];
      Point to = cycle[(i + 1) % cycle.size()];
      if (from >= degree || to >= degree) throw PermutationError("cycle point out of range");
      if (used[from]) throw PermutationError("cycles are not disjoint");
      used[from] = true;
      images[from] = to;
    }
  }
  return Permutation(std::move(images));
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

bool Permutation::is_even() const {
  std::vector<bool> seen(images_.size(), false);
  std::size_t transpositions = 0;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (Point j = static_cast<Point>(i); !seen[j]; j = images_[j]) {
      seen[j] = true;
      ++len;
    }
    transpositions += len - 1;
  }
  return transpositions % 2 == 0;
}

Permutation Permutation::inverse() const {
  std::vector<Point> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i]] = static_cast<Point>(i);
  return Permutation(std::move(inv), Unchecked{});
}

std::string Permutation::to_cycle_string() const {
  std::ostringstream os;
  std::vector<bool> seen(images_.size(), false);
  bool any = false;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i] || images_[i] == i) continue;
    any = true;
    os << '(';
    Point j = static_cast<Point>(i);
    bool first = true;
    while (!seen[j]) {
      seen[j] = true;
      if (!first) os << ' ';
      os << j;
      first = false;
      j = images_[j];
    }
    os << ')';
  }
  if (!any) os << "()";
  return os.str();
}

Permutation compose(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) {
    throw PermutationError("degree mismatch in compose: " + std::to_string(a.degree()) + " vs " +
                           std::to_string(b.degree()));
  }
  std::vector<Point> out(a.degree());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = b.images_[a.images_[i]];
  return Permutation(std::move(out), Permutation::Unchecked{});
}

std::ostream& operator<<(std::ostream& os, const Permutation& p) { return os << p.to_cycle_string(); }

}  // namespace stargraph
