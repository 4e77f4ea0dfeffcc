#include "stargraph/permgroup.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace stargraph {

namespace detail {

struct Level {
  Point base = 0;
  std::vector<Permutation> gens;
  std::vector<Point> orbit;
  std::vector<std::int32_t> position;  // index into orbit, -1 if absent
  std::vector<Permutation> transversal;  // transversal[k] maps base to orbit[k]
  std::vector<Permutation> inverse;
};

struct StabChain {
  std::size_t degree = 0;
  std::vector<Level> levels;
};

}  // namespace detail

namespace {

using detail::Level;
using detail::StabChain;

constexpr Point kNone = static_cast<Point>(-1);

Point smallest_moved(const Permutation& p) {
  for (Point i = 0; i < p.degree(); ++i)
    if (p[i] != i) return i;
  return kNone;
}

class Builder {
 public:
  explicit Builder(std::size_t degree) : n_(degree) {}

  std::shared_ptr<StabChain> build(const std::vector<Permutation>& generators, std::span<const Point> hint) {
    std::vector<Permutation> gens;
    for (const auto& g : generators)
      if (!g.is_identity()) gens.push_back(g);

    std::vector<Point> base;
    for (Point p : hint) {
      if (p >= n_) throw std::out_of_range("base point " + std::to_string(p) + " outside degree");
      if (std::find(base.begin(), base.end(), p) != base.end()) continue;
      if (std::any_of(gens.begin(), gens.end(), [&](const Permutation& g) { return !g.fixes(p); }))
        base.push_back(p);
    }
    for (const auto& g : gens) {
      bool fixes_all = std::all_of(base.begin(), base.end(), [&](Point b) { return g.fixes(b); });
      if (fixes_all) base.push_back(smallest_moved(g));
    }
    for (Point b : base) add_level(b);
    for (const auto& g : gens) {
      for (std::size_t l = 0; l < levels_.size(); ++l) {
        add_generator(l, g);
        if (!g.fixes(levels_[l].base)) break;
      }
    }
    run();

    auto chain = std::make_shared<StabChain>();
    chain->degree = n_;
    chain->levels = std::move(levels_);
    return chain;
  }

 private:
  void add_level(Point b) {
    Level L;
    L.base = b;
    L.position.assign(n_, -1);
    L.position[b] = 0;
    L.orbit.push_back(b);
    L.transversal.emplace_back(n_);
    L.inverse.emplace_back(n_);
    levels_.push_back(std::move(L));
    checked_.emplace_back();
  }

  void try_add(Level& L, std::size_t k, const Permutation& x) {
    Point g = x[L.orbit[k]];
    if (L.position[g] >= 0) return;
    L.position[g] = static_cast<std::int32_t>(L.orbit.size());
    L.orbit.push_back(g);
    Permutation u = compose(L.transversal[k], x);
    L.inverse.push_back(u.inverse());
    L.transversal.push_back(std::move(u));
  }

  void add_generator(std::size_t l, const Permutation& g) {
    Level& L = levels_[l];
    L.gens.push_back(g);
    checked_[l].push_back(0);
    std::size_t start = L.orbit.size();
    for (std::size_t k = 0; k < start; ++k) try_add(L, k, g);
    for (std::size_t k = start; k < L.orbit.size(); ++k)
      for (std::size_t gi = 0; gi < L.gens.size(); ++gi) try_add(L, k, L.gens[gi]);
  }

  std::pair<Permutation, std::size_t> strip(Permutation h, std::size_t from) const {
    for (std::size_t l = from; l < levels_.size(); ++l) {
      const Level& L = levels_[l];
      auto pos = L.position[h[L.base]];
      if (pos < 0) return {std::move(h), l};
      h = compose(h, L.inverse[pos]);
    }
    return {std::move(h), levels_.size()};
  }

  void run() {
    if (levels_.empty()) return;
    std::size_t i = levels_.size() - 1;
    while (true) {
      bool extended = false;
      for (std::size_t gi = 0; gi < levels_[i].gens.size() && !extended; ++gi) {
        while (checked_[i][gi] < levels_[i].orbit.size()) {
          const Level& L = levels_[i];
          std::size_t k = checked_[i][gi]++;
          const Permutation& x = L.gens[gi];
          Point img = x[L.orbit[k]];
          Permutation h = compose(compose(L.transversal[k], x), L.inverse[L.position[img]]);
          if (h.is_identity()) continue;
          auto [res, j] = strip(std::move(h), i + 1);
          if (j == levels_.size()) {
            if (res.is_identity()) continue;
            add_level(smallest_moved(res));
          }
          for (std::size_t l = i + 1; l <= j; ++l) add_generator(l, res);
          i = j;
          extended = true;
          break;
        }
      }
      if (extended) continue;
      if (i == 0) break;
      --i;
    }
  }

  std::size_t n_;
  std::vector<Level> levels_;
  std::vector<std::vector<std::size_t>> checked_;
};

void check_point(Point p, std::size_t degree) {
  if (p >= degree) throw std::out_of_range("point " + std::to_string(p) + " outside degree " + std::to_string(degree));
}

}  // namespace

Order factorial(std::size_t n) {
  Order r = 1;
  for (std::size_t i = 2; i <= n; ++i) r *= i;
  return r;
}

PermGroup::PermGroup(std::size_t degree, std::vector<Permutation> generators, std::span<const Point> base_hint)
    : degree_(degree), generators_(std::move(generators)) {
  for (const auto& g : generators_)
    if (g.degree() != degree_)
      throw PermutationError("generator of degree " + std::to_string(g.degree()) + " in group of degree " +
                             std::to_string(degree_));
  chain_ = Builder(degree_).build(generators_, base_hint);
}

PermGroup::PermGroup(std::size_t degree, std::shared_ptr<const detail::StabChain> chain, std::size_t top)
    : degree_(degree), chain_(std::move(chain)), top_(top) {
  if (top_ < chain_->levels.size()) generators_ = chain_->levels[top_].gens;
}

PermGroup PermGroup::trivial(std::size_t degree) { return PermGroup(degree, {}); }

PermGroup PermGroup::symmetric(std::size_t degree) {
  std::vector<Permutation> gens;
  if (degree >= 2) {
    gens.push_back(Permutation::from_cycles(degree, {{0, 1}}));
    std::vector<Point> cyc(degree);
    for (std::size_t i = 0; i < degree; ++i) cyc[i] = static_cast<Point>(i);
    if (degree > 2) gens.push_back(Permutation::from_cycles(degree, std::vector<std::vector<Point>>{cyc}));
  }
  return PermGroup(degree, std::move(gens));
}

std::vector<Point> PermGroup::base() const {
  std::vector<Point> b;
  for (std::size_t l = top_; l < chain_->levels.size(); ++l) b.push_back(chain_->levels[l].base);
  return b;
}

std::vector<std::size_t> PermGroup::orbit_sizes() const {
  std::vector<std::size_t> s;
  for (std::size_t l = top_; l < chain_->levels.size(); ++l) s.push_back(chain_->levels[l].orbit.size());
  return s;
}

Order PermGroup::order() const {
  Order r = 1;
  for (std::size_t l = top_; l < chain_->levels.size(); ++l) r *= chain_->levels[l].orbit.size();
  return r;
}

bool PermGroup::is_trivial() const {
  for (std::size_t l = top_; l < chain_->levels.size(); ++l)
    if (chain_->levels[l].orbit.size() > 1) return false;
  return true;
}

bool PermGroup::contains(const Permutation& p) const {
  if (p.degree() != degree_) return false;
  Permutation h = p;
  for (std::size_t l = top_; l < chain_->levels.size(); ++l) {
    const Level& L = chain_->levels[l];
    auto pos = L.position[h[L.base]];
    if (pos < 0) return false;
    h = compose(h, L.inverse[pos]);
  }
  return h.is_identity();
}

std::vector<Point> PermGroup::orbit(Point point) const {
  check_point(point, degree_);
  std::vector<char> seen(degree_, 0);
  std::vector<Point> out{point};
  seen[point] = 1;
  for (std::size_t k = 0; k < out.size(); ++k)
    for (const auto& g : generators_) {
      Point q = g[out[k]];
      if (!seen[q]) {
        seen[q] = 1;
        out.push_back(q);
      }
    }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<Point>> PermGroup::orbits() const {
  std::vector<char> seen(degree_, 0);
  std::vector<std::vector<Point>> out;
  for (Point p = 0; p < degree_; ++p) {
    if (seen[p]) continue;
    auto o = orbit(p);
    for (Point q : o) seen[q] = 1;
    out.push_back(std::move(o));
  }
  return out;
}

bool PermGroup::is_transitive() const { return degree_ <= 1 || orbit(0).size() == degree_; }

bool PermGroup::base_has_prefix(std::span<const Point> prefix) const {
  const auto& levels = chain_->levels;
  std::size_t t = top_;
  for (Point p : prefix) {
    check_point(p, degree_);
    if (t < levels.size() && levels[t].base == p) {
      ++t;
      continue;
    }
    if (t < levels.size()) {
      const auto& gens = levels[t].gens;
      if (std::any_of(gens.begin(), gens.end(), [&](const Permutation& g) { return !g.fixes(p); })) return false;
    }
  }
  return true;
}

PermGroup PermGroup::with_base_prefix(std::span<const Point> prefix) const {
  if (base_has_prefix(prefix)) return *this;
  return PermGroup(degree_, generators_, prefix);
}

PermGroup PermGroup::point_stabiliser(Point point) const {
  Point pts[1] = {point};
  return pointwise_stabiliser(pts);
}

PermGroup PermGroup::pointwise_stabiliser(std::span<const Point> points) const {
  PermGroup g = with_base_prefix(points);
  std::vector<char> in(degree_, 0);
  for (Point p : points) in[p] = 1;
  std::size_t t = g.top_;
  const auto& levels = g.chain_->levels;
  while (t < levels.size() && in[levels[t].base]) ++t;
  return PermGroup(degree_, g.chain_, t);
}

std::optional<Permutation> PermGroup::transporter(std::span<const std::pair<Point, Point>> constraints) const {
  std::vector<Point> image(degree_, kNone), preimage(degree_, kNone);
  std::vector<std::pair<Point, Point>> cons;
  for (auto [s, t] : constraints) {
    check_point(s, degree_);
    check_point(t, degree_);
    if (image[s] == t) continue;
    if (image[s] != kNone || preimage[t] != kNone) return std::nullopt;
    image[s] = t;
    preimage[t] = s;
    cons.emplace_back(s, t);
  }
  std::vector<Point> sources;
  for (auto& c : cons) sources.push_back(c.first);
  PermGroup g = with_base_prefix(sources);
  const auto& levels = g.chain_->levels;

  Permutation acc(degree_), acc_inv(degree_);
  std::size_t t = g.top_;
  for (auto [s, tgt] : cons) {
    if (t < levels.size() && levels[t].base == s) {
      const Level& L = levels[t];
      auto pos = L.position[acc_inv[tgt]];
      if (pos < 0) return std::nullopt;
      acc = compose(L.transversal[pos], acc);
      acc_inv = compose(acc_inv, L.inverse[pos]);
      ++t;
    } else if (acc[s] != tgt) {
      return std::nullopt;
    }
  }
  for (auto [s, tgt] : cons)
    if (acc[s] != tgt) return std::nullopt;
  return acc;
}

PermGroup PermGroup::setwise_stabiliser(std::span<const Point> points) const {
  std::vector<Point> set(points.begin(), points.end());
  for (Point p : set) check_point(p, degree_);
  std::sort(set.begin(), set.end());
  set.erase(std::unique(set.begin(), set.end()), set.end());
  if (set.empty() || set.size() == degree_) return *this;

  std::vector<char> in(degree_, 0);
  for (Point p : set) in[p] = 1;
  PermGroup g = with_base_prefix(set);
  const auto& levels = g.chain_->levels;
  std::size_t m = g.top_;
  while (m < levels.size() && in[levels[m].base]) ++m;
  if (m == g.top_) return g;  // the group fixes every point of the set

  PermGroup pointwise(degree_, g.chain_, m);
  std::vector<Permutation> kgens = pointwise.generators();
  PermGroup K = pointwise;

  auto leaf = [&](const Permutation& acc) {
    for (Point p : set)
      if (!in[acc[p]]) return;
    if (K.contains(acc)) return;
    kgens.push_back(acc);
    K = PermGroup(degree_, kgens, set);
  };

  auto search = [&](auto&& self, std::size_t l, const Permutation& acc) -> void {
    if (l == m) {
      leaf(acc);
      return;
    }
    const Level& L = levels[l];
    for (std::size_t k = 0; k < L.orbit.size(); ++k) {
      if (!in[acc[L.orbit[k]]]) continue;
      self(self, l + 1, compose(L.transversal[k], acc));
    }
  };

  const Level& root = levels[g.top_];
  std::vector<Point> explored;
  for (std::size_t k = 0; k < root.orbit.size(); ++k) {
    Point img = root.orbit[k];
    if (!in[img]) continue;
    bool covered = false;
    for (Point e : explored) {
      auto o = K.orbit(e);
      if (std::binary_search(o.begin(), o.end(), img)) {
        covered = true;
        break;
      }
    }
    if (covered) continue;
    search(search, g.top_ + 1, root.transversal[k]);
    explored.push_back(img);
  }
  return K;
}

std::vector<Point> PermGroup::coset_minimum(const Permutation& x) const {
  const auto& levels = chain_->levels;
  for (std::size_t l = top_ + 1; l < levels.size(); ++l)
    if (levels[l].base <= levels[l - 1].base) throw std::logic_error("coset_minimum needs an increasing base");
  Permutation acc(degree_);
  for (std::size_t l = top_; l < levels.size(); ++l) {
    const Level& L = levels[l];
    std::size_t best = 0;
    Point best_img = kNone;
    for (std::size_t k = 0; k < L.orbit.size(); ++k) {
      Point img = x[acc[L.orbit[k]]];
      if (img < best_img) {
        best_img = img;
        best = k;
      }
    }
    acc = compose(L.transversal[best], acc);
  }
  return compose(acc, x).images();
}

std::vector<Permutation> PermGroup::elements(std::size_t limit) const {
  if (order() > limit) throw std::length_error("group too large to enumerate");
  std::vector<Permutation> cur{Permutation(degree_)};
  const auto& levels = chain_->levels;
  for (std::size_t l = levels.size(); l-- > top_;) {
    std::vector<Permutation> next;
    next.reserve(cur.size() * levels[l].orbit.size());
    for (const auto& e : cur)
      for (const auto& u : levels[l].transversal) next.push_back(compose(e, u));
    cur = std::move(next);
  }
  return cur;
}

Permutation identity_of(const PermGroup& g) { return Permutation(g.degree()); }

PermGroup build_chain(std::size_t degree, std::vector<Permutation> generators, std::span<const Point> base_hint) {
  return PermGroup(degree, std::move(generators), base_hint);
}

bool contains(const PermGroup& g, const Permutation& p) { return g.contains(p); }

InducedAction induced_action(const PermGroup& group, std::span<const Point> domain) {
  std::vector<std::int64_t> index(group.degree(), -1);
  for (std::size_t i = 0; i < domain.size(); ++i) {
    check_point(domain[i], group.degree());
    if (index[domain[i]] >= 0) throw std::invalid_argument("repeated point in domain");
    index[domain[i]] = static_cast<std::int64_t>(i);
  }
  std::vector<Permutation> gens;
  for (const auto& g : group.generators()) {
    std::vector<Point> img(domain.size());
    for (std::size_t i = 0; i < domain.size(); ++i) {
      auto j = index[g[domain[i]]];
      if (j < 0) throw std::invalid_argument("domain is not invariant under the group");
      img[i] = static_cast<Point>(j);
    }
    gens.push_back(Permutation::unchecked(std::move(img)));
  }
  PermGroup image(domain.size(), std::move(gens));
  Order kernel = group.order() / image.order();
  return {std::move(image), std::move(kernel)};
}

std::string to_string(ActionKind kind) {
  switch (kind) {
    case ActionKind::symmetric:
      return "symmetric";
    case ActionKind::alternating:
      return "alternating";
    default:
      return "other";
  }
}

LocalActionReport identify(const PermGroup& group, std::size_t degree, const Order& kernel_order) {
  if (group.degree() != degree) throw std::invalid_argument("degree mismatch in identify");
  LocalActionReport r;
  r.degree = degree;
  r.order = group.order();
  r.kernel_order = kernel_order;
  r.transitive = group.is_transitive();
  Order full = factorial(degree);
  if (r.order == full) {
    r.kind = ActionKind::symmetric;
  } else if (r.order * 2 == full) {
    const auto& gens = group.generators();
    bool even = std::all_of(gens.begin(), gens.end(), [](const Permutation& g) { return g.is_even(); });
    r.kind = even ? ActionKind::alternating : ActionKind::other;
  }
  return r;
}

GeneratorSet read_generators(std::istream& in) {
  GeneratorSet out;
  bool have_degree = false;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag)) continue;
    if (tag == "d") {
      if (have_degree) throw FormatError(lineno, "degree given twice");
      long long d;
      if (!(ls >> d) || d < 0) throw FormatError(lineno, "expected a non-negative degree");
      out.degree = static_cast<std::size_t>(d);
      have_degree = true;
    } else if (tag == "p") {
      if (!have_degree) throw FormatError(lineno, "generator before degree line");
      std::vector<Point> img;
      long long v;
      while (ls >> v) {
        if (v < 0 || static_cast<std::size_t>(v) >= out.degree) throw FormatError(lineno, "image out of range");
        img.push_back(static_cast<Point>(v));
      }
      if (!ls.eof()) throw FormatError(lineno, "non-numeric image");
      if (img.size() != out.degree)
        throw FormatError(lineno, "expected " + std::to_string(out.degree) + " images, got " + std::to_string(img.size()));
      try {
        out.generators.emplace_back(std::move(img));
      } catch (const PermutationError& e) {
        throw FormatError(lineno, e.what());
      }
    } else {
      throw FormatError(lineno, "unknown record '" + tag + "'");
    }
  }
  if (!have_degree) throw FormatError(0, "missing degree line");
  return out;
}

GeneratorSet read_generators_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open " + path);
  return read_generators(f);
}

void write_generators(std::ostream& out, std::size_t degree, std::span<const Permutation> generators) {
  out << "d " << degree << '\n';
  for (const auto& g : generators) {
    out << 'p';
    for (Point p : g.images()) out << ' ' << p;
    out << '\n';
  }
}

}  // namespace stargraph
