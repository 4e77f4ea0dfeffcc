#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <iosfwd>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "stargraph/errors.hpp"
#include "stargraph/permutation.hpp"

namespace stargraph {

using Order = boost::multiprecision::cpp_int;

Order factorial(std::size_t n);

namespace detail {
struct StabChain;
}

/// A permutation group given by generators, backed by a deterministic
/// Schreier-Sims stabiliser chain that is built once at construction.
///
/// Groups are immutable. Stabiliser subgroups that coincide with a tail of the
/// chain share it instead of rebuilding.
class PermGroup {
 public:
  /// Builds the chain. The base starts with the points of `base_hint` that
  /// the group moves, in the given order; further base points are the
  /// smallest points moved by generators that fix the base so far.
  PermGroup(std::size_t degree, std::vector<Permutation> generators, std::span<const Point> base_hint = {});

  static PermGroup trivial(std::size_t degree);
  /// Sym(degree) generated by (0 1) and (0 1 ... degree-1).
  static PermGroup symmetric(std::size_t degree);

  std::size_t degree() const { return degree_; }
  const std::vector<Permutation>& generators() const { return generators_; }
  std::vector<Point> base() const;
  /// Sizes of the fundamental orbits, one per base point.
  std::vector<std::size_t> orbit_sizes() const;

  Order order() const;
  bool is_trivial() const;
  bool contains(const Permutation& p) const;

  /// Sorted orbit of `point` under the generators.
  std::vector<Point> orbit(Point point) const;
  /// All orbits, each sorted, ordered by smallest element.
  std::vector<std::vector<Point>> orbits() const;
  bool is_transitive() const;

  PermGroup point_stabiliser(Point point) const;
  PermGroup pointwise_stabiliser(std::span<const Point> points) const;
  /// Backtrack over the chain restricted to images inside the set.
  PermGroup setwise_stabiliser(std::span<const Point> points) const;

  /// Same group with a chain whose base begins with `prefix` (points fixed by
  /// the whole group are skipped). Returns *this when already so based.
  PermGroup with_base_prefix(std::span<const Point> prefix) const;
  bool base_has_prefix(std::span<const Point> prefix) const;

  /// Some g with g(from) = to for every pair, or nullopt when none exists.
  /// Rebuilds the chain with the sources as base prefix unless it already
  /// has that prefix, then walks transversals level by level.
  std::optional<Permutation> transporter(std::span<const std::pair<Point, Point>> constraints) const;

  /// Images of the lexicographically least element of the right coset
  /// (this group) * x. Needs a chain whose base is increasing, as produced by
  /// the base hint 0, 1, ..., degree-1; throws std::logic_error otherwise.
  std::vector<Point> coset_minimum(const Permutation& x) const;

  /// Every element; throws std::length_error above `limit`.
  std::vector<Permutation> elements(std::size_t limit = 1'000'000) const;

 private:
  PermGroup(std::size_t degree, std::shared_ptr<const detail::StabChain> chain, std::size_t top);

  std::size_t degree_ = 0;
  std::vector<Permutation> generators_;
  std::shared_ptr<const detail::StabChain> chain_;
  std::size_t top_ = 0;
};

// Free-function forms of the group operations.

Permutation identity_of(const PermGroup& g);
inline std::vector<Point> orbit(const PermGroup& g, Point p) { return g.orbit(p); }
PermGroup build_chain(std::size_t degree, std::vector<Permutation> generators,
                      std::span<const Point> base_hint = {});
inline Order order(const PermGroup& g) { return g.order(); }
bool contains(const PermGroup& g, const Permutation& p);

struct InducedAction {
  PermGroup image;
  Order kernel_order;
};

/// Action of `group` on `domain`, relabelled so domain[i] becomes point i.
/// Throws std::invalid_argument when some generator does not map the domain
/// onto itself.
InducedAction induced_action(const PermGroup& group, std::span<const Point> domain);

enum class ActionKind { symmetric, alternating, other };
std::string to_string(ActionKind kind);

struct LocalActionReport {
  std::size_t degree = 0;
  Order order = 1;
  ActionKind kind = ActionKind::other;
  bool transitive = false;
  Order kernel_order = 1;
};

/// Classifies a group acting on {0..degree-1} as symmetric, alternating or other.
LocalActionReport identify(const PermGroup& group, std::size_t degree, const Order& kernel_order = 1);

/// Generator file: `d <degree>` then `p <img0> ... <img_{d-1}>` per generator.
/// `#` starts a comment; blank lines are ignored.
struct GeneratorSet {
  std::size_t degree = 0;
  std::vector<Permutation> generators;
};

GeneratorSet read_generators(std::istream& in);
GeneratorSet read_generators_file(const std::string& path);
void write_generators(std::ostream& out, std::size_t degree, std::span<const Permutation> generators);

}  // namespace stargraph
