#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace stargraph {

using Point = std::uint32_t;

class PermutationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A bijection on {0, ..., degree-1}, stored as its image list.
///
/// Permutations act on the right: compose(a, b) applies `a` first, then `b`.
class Permutation {
 public:
  Permutation() = default;

  /// Identity of the given degree.
  explicit Permutation(std::size_t degree);

  /// Throws PermutationError unless `images` is a bijection on its index set.
  explicit Permutation(std::vector<Point> images);

  static Permutation identity(std::size_t degree) { return Permutation(degree); }

  /// Skips the bijection check; for internal callers that already know `images` is valid.
  static Permutation unchecked(std::vector<Point> images) { return Permutation(std::move(images), Unchecked{}); }

  /// Builds a permutation from disjoint cycles, e.g. {{0, 1, 2}, {3, 4}}.
  static Permutation from_cycles(std::size_t degree,
                                 std::initializer_list<std::initializer_list<Point>> cycles);
  static Permutation from_cycles(std::size_t degree, const std::vector<std::vector<Point>>& cycles);

  std::size_t degree() const { return images_.size(); }
  Point operator[](Point p) const { return images_[p]; }
  Point operator()(Point p) const { return images_[p]; }
  const std::vector<Point>& images() const { return images_; }

  bool is_identity() const;
  bool is_even() const;
  bool fixes(Point p) const { return images_[p] == p; }
  Permutation inverse() const;

  /// Cycle notation, e.g. "(0 1 2)(3 4)"; the identity prints as "()".
  std::string to_cycle_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) { return a.images_ <=> b.images_; }

 private:
  struct Unchecked {};
  Permutation(std::vector<Point> images, Unchecked) : images_(std::move(images)) {}
  friend Permutation compose(const Permutation& a, const Permutation& b);

  std::vector<Point> images_;
};

/// The permutation i -> b(a(i)).
Permutation compose(const Permutation& a, const Permutation& b);

std::ostream& operator<<(std::ostream& os, const Permutation& p);

}  // namespace stargraph
