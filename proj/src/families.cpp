#include "stargraph/families.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "stargraph/cosetgraph.hpp"

namespace stargraph {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

void cap_vertices(std::size_t n, const Caps& caps, const std::string& name) {
  if (n > caps.max_vertices)
    throw CapacityError(name + " would have " + std::to_string(n) + " vertices, above the limit of " +
                        std::to_string(caps.max_vertices));
}

std::string set_label(const std::vector<Point>& s) {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < s.size(); ++i) out << (i ? "," : "") << s[i];
  out << '}';
  return out.str();
}

ConstructedInstance plain(std::string name, std::size_t n, const std::vector<Edge>& es) {
  ConstructedInstance out;
  out.name = std::move(name);
  out.graph = Graph::from_edges(n, es);
  return out;
}

std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

Permutation transposition(std::size_t n, Point a, Point b) { return Permutation::from_cycles(n, {{a, b}}); }

Permutation full_cycle(std::size_t n) {
  std::vector<Point> img(n);
  for (std::size_t i = 0; i < n; ++i) img[i] = static_cast<Point>((i + 1) % n);
  return Permutation(img);
}

// The natural generators (0 1) and (0 1 ... n-1) of S_n.
std::vector<Permutation> symmetric_generators(std::size_t n) {
  std::vector<Permutation> out;
  if (n >= 2) out.push_back(transposition(n, 0, 1));
  if (n >= 3) out.push_back(full_cycle(n));
  return out;
}

// Indexes a family of subsets; maps base-set permutations to permutations of the family.
class SubsetIndex {
 public:
  void add(const std::vector<Point>& s, std::size_t idx) { index_.emplace(s, idx); }

  std::size_t at(const std::vector<Point>& s) const { return index_.at(s); }

  std::vector<Point> image(const std::vector<Point>& s, const Permutation& p) const {
    std::vector<Point> t;
    for (Point x : s) t.push_back(p[x]);
    std::sort(t.begin(), t.end());
    return t;
  }

 private:
  std::map<std::vector<Point>, std::size_t> index_;
};

}  // namespace

std::vector<std::vector<Point>> colex_subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<Point>> out;
  if (k > n) return out;
  std::vector<Point> cur(k);
  std::iota(cur.begin(), cur.end(), 0);
  while (true) {
    out.push_back(cur);
    // colex successor: increase the first element that can move
    std::size_t i = 0;
    while (i < k && cur[i] + 1 == (i + 1 < k ? cur[i + 1] : static_cast<Point>(n))) ++i;
    if (i == k) break;
    ++cur[i];
    for (std::size_t j = 0; j < i; ++j) cur[j] = static_cast<Point>(j);
  }
  return out;
}

Permutation extend_to_blocks(const Graph& g, std::size_t points, const Permutation& on_points) {
  const std::size_t n = g.vertex_count();
  std::map<std::vector<Vertex>, Vertex> block_of;
  for (Vertex b = static_cast<Vertex>(points); b < n; ++b) block_of.emplace(g.neighbours(b), b);
  std::vector<Point> img(n);
  for (Vertex x = 0; x < points; ++x) img[x] = on_points[x];
  for (Vertex b = static_cast<Vertex>(points); b < n; ++b) {
    std::vector<Vertex> nb;
    for (Vertex x : g.neighbours(b)) nb.push_back(on_points[x]);
    std::sort(nb.begin(), nb.end());
    auto it = block_of.find(nb);
    if (it == block_of.end()) throw std::invalid_argument("point permutation does not preserve the blocks");
    img[b] = it->second;
  }
  return Permutation(img);
}

ConstructedInstance cycle(std::size_t n) {
  require(n >= 3, "cycle needs n >= 3");
  std::vector<Edge> es;
  for (Vertex i = 0; i < n; ++i) es.emplace_back(i, static_cast<Vertex>((i + 1) % n));
  return plain("C_" + std::to_string(n), n, es);
}

ConstructedInstance complete(std::size_t n) {
  require(n >= 1, "complete graph needs n >= 1");
  std::vector<Edge> es;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j) es.emplace_back(i, j);
  return plain("K_" + std::to_string(n), n, es);
}

ConstructedInstance complete_bipartite(std::size_t m, std::size_t n) {
  require(m >= 1 && n >= 1, "complete bipartite graph needs m, n >= 1");
  std::vector<Edge> es;
  for (Vertex i = 0; i < m; ++i)
    for (Vertex j = 0; j < n; ++j) es.emplace_back(i, static_cast<Vertex>(m + j));
  return plain("K_{" + std::to_string(m) + "," + std::to_string(n) + "}", m + n, es);
}

ConstructedInstance spider(std::size_t n) {
  require(n >= 3, "spider needs n >= 3");
  std::vector<Edge> es;
  for (Vertex i = 1; i <= n; ++i) {
    es.emplace_back(0, i);
    es.emplace_back(i, static_cast<Vertex>(n + i));
  }
  return plain("T_" + std::to_string(n), 2 * n + 1, es);
}

ConstructedInstance path(std::size_t n) {
  require(n >= 1, "path needs n >= 1");
  std::vector<Edge> es;
  for (Vertex i = 0; i + 1 < n; ++i) es.emplace_back(i, i + 1);
  return plain("P_" + std::to_string(n), n, es);
}

ConstructedInstance odd_graph(std::size_t k, const Caps& caps) {
  require(k >= 3, "odd graph needs valency k >= 3");
  const std::size_t base = 2 * k - 1;
  cap_vertices(binomial(base, k - 1), caps, "odd graph");
  auto subsets = colex_subsets(base, k - 1);
  SubsetIndex idx;
  for (std::size_t i = 0; i < subsets.size(); ++i) idx.add(subsets[i], i);

  std::vector<Edge> es;
  for (Vertex i = 0; i < subsets.size(); ++i)
    for (Vertex j = i + 1; j < subsets.size(); ++j) {
      std::vector<Point> both;
      std::set_intersection(subsets[i].begin(), subsets[i].end(), subsets[j].begin(), subsets[j].end(),
                            std::back_inserter(both));
      if (both.empty()) es.emplace_back(i, j);
    }
  std::vector<Permutation> gens;
  for (const auto& p : symmetric_generators(base)) {
    std::vector<Point> img;
    for (auto& s : subsets) img.push_back(static_cast<Point>(idx.at(idx.image(s, p))));
    gens.emplace_back(img);
  }
  ConstructedInstance out;
  out.name = "O_" + std::to_string(k);
  out.graph = Graph::from_edges(subsets.size(), es);
  out.group = PermGroup(subsets.size(), std::move(gens));
  out.group_name = "S_" + std::to_string(base);
  for (auto& s : subsets) out.labels.push_back(set_label(s));
  check_generators(out.graph, *out.group);
  return out;
}

ConstructedInstance johnson_incidence(std::size_t n, std::size_t m, const Caps& caps) {
  require(m >= 2 && m + 1 <= n, "johnson incidence graph needs 2 <= m <= n-1");
  cap_vertices(binomial(n, m) + binomial(n, m - 1), caps, "johnson incidence graph");
  auto big = colex_subsets(n, m), small = colex_subsets(n, m - 1);
  SubsetIndex idx;
  for (std::size_t i = 0; i < big.size(); ++i) idx.add(big[i], i);
  for (std::size_t i = 0; i < small.size(); ++i) idx.add(small[i], big.size() + i);

  std::vector<Edge> es;
  for (std::size_t i = 0; i < big.size(); ++i)
    for (std::size_t drop = 0; drop < m; ++drop) {
      auto s = big[i];
      s.erase(s.begin() + static_cast<std::ptrdiff_t>(drop));
      es.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(idx.at(s)));
    }
  std::vector<Permutation> gens;
  for (const auto& p : symmetric_generators(n)) {
    std::vector<Point> img;
    for (auto& s : big) img.push_back(static_cast<Point>(idx.at(idx.image(s, p))));
    for (auto& s : small) img.push_back(static_cast<Point>(idx.at(idx.image(s, p))));
    gens.emplace_back(img);
  }
  ConstructedInstance out;
  out.name = "Gamma_{" + std::to_string(m) + "," + std::to_string(n) + "}";
  out.graph = Graph::from_edges(big.size() + small.size(), es);
  out.group = PermGroup(out.graph.vertex_count(), std::move(gens));
  out.group_name = "S_" + std::to_string(n);
  for (auto& s : big) out.labels.push_back(set_label(s));
  for (auto& s : small) out.labels.push_back(set_label(s));
  if (m == n - m + 1) out.flags.push_back("equal-valency-exception");
  if (n == 2 * m + 1) out.flags.push_back("doubled-odd-graph");
  check_generators(out.graph, *out.group);
  return out;
}

ConstructedInstance hamming_clique_incidence(std::size_t k, std::size_t n, const Caps& caps) {
  require(k >= 2 && n >= 3, "hamming clique incidence graph needs k >= 2 and n >= 3");
  std::size_t tuples = 1;
  for (std::size_t i = 0; i < k; ++i) {
    tuples *= n;
    cap_vertices(tuples, caps, "hamming clique incidence graph");
  }
  const std::size_t per_coord = tuples / n;
  cap_vertices(tuples + k * per_coord, caps, "hamming clique incidence graph");

  auto digits = [&](std::size_t x) {
    std::vector<std::size_t> d(k);
    for (std::size_t i = 0; i < k; ++i, x /= n) d[i] = x % n;
    return d;
  };
  auto number = [&](const std::vector<std::size_t>& d) {
    std::size_t x = 0;
    for (std::size_t i = k; i-- > 0;) x = x * n + d[i];
    return x;
  };
  auto clique_of = [&](const std::vector<std::size_t>& d, std::size_t coord) {
    std::size_t rest = 0;
    for (std::size_t i = k; i-- > 0;)
      if (i != coord) rest = rest * n + d[i];
    return tuples + coord * per_coord + rest;
  };

  std::vector<Edge> es;
  for (std::size_t x = 0; x < tuples; ++x) {
    auto d = digits(x);
    for (std::size_t c = 0; c < k; ++c) es.emplace_back(static_cast<Vertex>(x), static_cast<Vertex>(clique_of(d, c)));
  }
  ConstructedInstance out;
  out.name = "H(" + std::to_string(k) + "," + std::to_string(n) + ") cliques";
  out.graph = Graph::from_edges(tuples + k * per_coord, es);

  auto on_tuples = [&](auto&& f) {
    std::vector<Point> img(tuples);
    for (std::size_t x = 0; x < tuples; ++x) img[x] = static_cast<Point>(number(f(digits(x))));
    return Permutation(img);
  };
  auto value_perm = [&](const Permutation& p) {
    return on_tuples([&](std::vector<std::size_t> d) {
      d[0] = p[static_cast<Point>(d[0])];
      return d;
    });
  };
  std::vector<Permutation> on_points{value_perm(transposition(n, 0, 1)), value_perm(full_cycle(n))};
  if (k >= 3)
    on_points.push_back(on_tuples([&](const std::vector<std::size_t>& d) {
      std::vector<std::size_t> e(k);
      for (std::size_t i = 0; i < k; ++i) e[(i + 1) % k] = d[i];
      return e;
    }));
  on_points.push_back(on_tuples([&](std::vector<std::size_t> d) {
    std::swap(d[0], d[1]);
    return d;
  }));
  std::vector<Permutation> gens;
  for (auto& p : on_points) gens.push_back(extend_to_blocks(out.graph, tuples, p));
  out.group = PermGroup(out.graph.vertex_count(), std::move(gens));
  out.group_name = "S_" + std::to_string(n) + " wr S_" + std::to_string(k);
  for (std::size_t x = 0; x < tuples; ++x) {
    std::string s = "(";
    auto d = digits(x);
    for (std::size_t i = 0; i < k; ++i) s += (i ? "," : "") + std::to_string(d[i]);
    out.labels.push_back(s + ")");
  }
  for (std::size_t c = 0; c < k; ++c)
    for (std::size_t r = 0; r < per_coord; ++r) out.labels.push_back("clique " + std::to_string(c) + ":" + std::to_string(r));
  check_generators(out.graph, *out.group);
  return out;
}

ConstructedInstance pg_incidence(std::size_t q) {
  require(q == 2 || q == 3, "projective plane only for q = 2 or 3");
  std::vector<std::array<std::size_t, 3>> pts;
  for (std::size_t a = 0; a < q; ++a)
    for (std::size_t b = 0; b < q; ++b)
      for (std::size_t c = 0; c < q; ++c) {
        std::array<std::size_t, 3> v{a, b, c};
        auto first = std::find_if(v.begin(), v.end(), [](std::size_t x) { return x != 0; });
        if (first != v.end() && *first == 1) pts.push_back(v);
      }
  const std::size_t np = pts.size();
  std::vector<Edge> es;
  for (std::size_t l = 0; l < np; ++l)
    for (std::size_t p = 0; p < np; ++p) {
      std::size_t dot = 0;
      for (int i = 0; i < 3; ++i) dot += pts[l][i] * pts[p][i];
      if (dot % q == 0) es.emplace_back(static_cast<Vertex>(p), static_cast<Vertex>(np + l));
    }
  ConstructedInstance out;
  out.name = "PG(2," + std::to_string(q) + ")";
  out.graph = Graph::from_edges(2 * np, es);
  auto label = [](const std::array<std::size_t, 3>& v) {
    return "(" + std::to_string(v[0]) + "," + std::to_string(v[1]) + "," + std::to_string(v[2]) + ")";
  };
  for (auto& v : pts) out.labels.push_back("point " + label(v));
  for (auto& v : pts) out.labels.push_back("line " + label(v) + "^perp");
  return out;
}

namespace {

// GF(4) as {0, 1, w, w^2} = {0, 1, 2, 3}; addition is xor.
constexpr std::array<std::array<std::uint8_t, 4>, 4> kMul4{{{0, 0, 0, 0}, {0, 1, 2, 3}, {0, 2, 3, 1}, {0, 3, 1, 2}}};

std::uint8_t mul4(std::uint8_t a, std::uint8_t b) { return kMul4[a][b]; }

using Vec4 = std::array<std::uint8_t, 4>;

std::uint8_t herm(const Vec4& x, const Vec4& y) {
  std::uint8_t s = 0;
  for (int i = 0; i < 4; ++i) s ^= mul4(x[i], mul4(y[i], y[i]));
  return s;
}

Vec4 normalise4(Vec4 v) {
  auto first = std::find_if(v.begin(), v.end(), [](std::uint8_t x) { return x != 0; });
  if (first == v.end()) return v;
  std::uint8_t inv = *first == 1 ? 1 : (*first == 2 ? 3 : 2);
  for (auto& x : v) x = mul4(x, inv);
  return v;
}

}  // namespace

ConstructedInstance hermitian_gq() {
  std::vector<Vec4> pts;
  for (int code = 1; code < 256; ++code) {
    Vec4 v{static_cast<std::uint8_t>(code & 3), static_cast<std::uint8_t>((code >> 2) & 3),
           static_cast<std::uint8_t>((code >> 4) & 3), static_cast<std::uint8_t>((code >> 6) & 3)};
    if (normalise4(v) != v) continue;
    if (herm(v, v) == 0) pts.push_back(v);
  }
  std::map<Vec4, std::size_t> index;
  for (std::size_t i = 0; i < pts.size(); ++i) index[pts[i]] = i;

  std::set<std::vector<Point>> lines;
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      if (herm(pts[i], pts[j]) != 0) continue;
      std::set<Point> on;
      for (std::uint8_t a = 0; a < 4; ++a)
        for (std::uint8_t b = 0; b < 4; ++b) {
          if (a == 0 && b == 0) continue;
          Vec4 v;
          for (int c = 0; c < 4; ++c) v[c] = mul4(a, pts[i][c]) ^ mul4(b, pts[j][c]);
          on.insert(static_cast<Point>(index.at(normalise4(v))));
        }
      lines.emplace(on.begin(), on.end());
    }
  std::vector<Edge> es;
  std::size_t l = pts.size();
  for (const auto& line : lines) {
    for (Point p : line) es.emplace_back(p, static_cast<Vertex>(l));
    ++l;
  }
  ConstructedInstance out;
  out.name = "GQ(2,4)";
  out.graph = Graph::from_edges(l, es);
  const char* sym[] = {"0", "1", "w", "w2"};
  for (auto& v : pts)
    out.labels.push_back(std::string("point (") + sym[v[0]] + "," + sym[v[1]] + "," + sym[v[2]] + "," + sym[v[3]] + ")");
  for (std::size_t i = 0; i < lines.size(); ++i) out.labels.push_back("line " + std::to_string(i));
  return out;
}

ConstructedInstance gf3_translate_graph(std::size_t n, const Caps& caps) {
  require(n >= 4, "gf3 translate graph needs n >= 4");
  require(n % 3 != 0, "gf3 translate graph needs n coprime to 3");
  std::size_t wsize = 1;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    wsize *= 3;
    cap_vertices(wsize, caps, "gf3 translate graph");
  }
  cap_vertices(wsize + wsize * n / 3, caps, "gf3 translate graph");

  using Vec = std::vector<std::size_t>;
  auto vec_of = [&](std::size_t x) {
    Vec v(n);
    std::size_t sum = 0;
    for (std::size_t i = 0; i + 1 < n; ++i, x /= 3) {
      v[i] = x % 3;
      sum += v[i];
    }
    v[n - 1] = (3 - sum % 3) % 3;
    return v;
  };
  auto index_of = [&](const Vec& v) {
    std::size_t x = 0;
    for (std::size_t i = n - 1; i-- > 0;) x = x * 3 + v[i];
    return x;
  };
  auto add = [&](Vec a, const Vec& b, std::size_t times) {
    for (std::size_t i = 0; i < n; ++i) a[i] = (a[i] + times * b[i]) % 3;
    return a;
  };

  std::vector<Vec> dirs;
  for (std::size_t j = 0; j < n; ++j) {
    Vec v(n, 1);
    v[j] = (1 + 3 * n - n) % 3;
    dirs.push_back(v);
  }
  std::vector<std::vector<Point>> lines;
  std::set<std::vector<Point>> seen;
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t x = 0; x < wsize; ++x) {
      auto w = vec_of(x);
      std::vector<Point> line;
      for (std::size_t t = 0; t < 3; ++t) line.push_back(static_cast<Point>(index_of(add(w, dirs[j], t))));
      std::sort(line.begin(), line.end());
      if (seen.insert(line).second) lines.push_back(line);
    }
  std::vector<Edge> es;
  for (std::size_t l = 0; l < lines.size(); ++l)
    for (Point p : lines[l]) es.emplace_back(p, static_cast<Vertex>(wsize + l));

  ConstructedInstance out;
  out.name = "GF(3) translate graph n=" + std::to_string(n);
  out.graph = Graph::from_edges(wsize + lines.size(), es);

  auto on_w = [&](auto&& f) {
    std::vector<Point> img(wsize);
    for (std::size_t x = 0; x < wsize; ++x) img[x] = static_cast<Point>(index_of(f(vec_of(x))));
    return Permutation(img);
  };
  std::vector<Permutation> on_points;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    Vec t(n, 0);
    t[i] = 1;
    t[n - 1] = 2;
    on_points.push_back(on_w([&](const Vec& v) { return add(v, t, 1); }));
  }
  for (const auto& p : symmetric_generators(n))
    on_points.push_back(on_w([&](const Vec& v) {
      Vec u(n);
      for (std::size_t i = 0; i < n; ++i) u[p[static_cast<Point>(i)]] = v[i];
      return u;
    }));
  on_points.push_back(on_w([&](const Vec& v) {
    Vec u(n);
    for (std::size_t i = 0; i < n; ++i) u[i] = (3 - v[i]) % 3;
    return u;
  }));
  std::vector<Permutation> gens;
  for (auto& p : on_points) gens.push_back(extend_to_blocks(out.graph, wsize, p));
  out.group = PermGroup(out.graph.vertex_count(), std::move(gens));
  out.group_name = "W:(S_" + std::to_string(n) + " x Z)";
  for (std::size_t x = 0; x < wsize; ++x) {
    auto v = vec_of(x);
    std::string s = "(";
    for (std::size_t i = 0; i < n; ++i) s += (i ? "," : "") + std::to_string(v[i]);
    out.labels.push_back(s + ")");
  }
  for (std::size_t l = 0; l < lines.size(); ++l) out.labels.push_back("line " + set_label(lines[l]));
  check_generators(out.graph, *out.group);
  return out;
}

ConstructedInstance s_squared_example(std::size_t r, const Caps& caps) {
  require(r >= 4, "s_squared_example needs r >= 4");
  const std::size_t n = (r - 1) * (r - 1);
  if (n > caps.max_group_degree) throw CapacityError("group degree above the limit");
  Order index = factorial(n) / (factorial(r) * factorial(r - 1));
  if (index > caps.max_coset_index)
    throw CapacityError("coset index " + index.str() + " above the limit of " + std::to_string(caps.max_coset_index));

  auto omega1 = colex_subsets(r, 2), omega2 = colex_subsets(r - 1, 2);
  const std::size_t off = omega1.size();
  SubsetIndex i1, i2;
  for (std::size_t i = 0; i < omega1.size(); ++i) i1.add(omega1[i], i);
  for (std::size_t i = 0; i < omega2.size(); ++i) i2.add(omega2[i], i);

  auto on_omega = [&](const Permutation* pa, const Permutation* pb) {
    std::vector<Point> img(n);
    for (std::size_t i = 0; i < omega1.size(); ++i)
      img[i] = static_cast<Point>(pa ? i1.at(i1.image(omega1[i], *pa)) : i);
    for (std::size_t i = 0; i < omega2.size(); ++i)
      img[off + i] = static_cast<Point>(off + (pb ? i2.at(i2.image(omega2[i], *pb)) : i));
    return Permutation(img);
  };
  std::vector<Permutation> hgens;
  for (const auto& p : symmetric_generators(r)) hgens.push_back(on_omega(&p, nullptr));
  for (const auto& p : symmetric_generators(r - 1)) hgens.push_back(on_omega(nullptr, &p));
  PermGroup H(n, hgens);

  // 2-subsets of {0..r-2} inside the first set come first in colex order, matching omega2 position by position
  std::vector<Point> gimg(n);
  std::iota(gimg.begin(), gimg.end(), 0);
  for (std::size_t i = 0; i < omega2.size(); ++i) std::swap(gimg[i], gimg[off + i]);
  Permutation g(gimg);

  auto out = sabidussi(PermGroup::symmetric(n), H, g, caps.max_coset_index);
  out.name = "S_" + std::to_string(n) + " example r=" + std::to_string(r);
  out.group_name = "S_" + std::to_string(n);
  return out;
}

}  // namespace stargraph
