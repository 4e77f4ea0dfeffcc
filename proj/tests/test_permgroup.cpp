#include <gtest/gtest.h>

#include <random>
#include <set>
#include <sstream>

#include "brute_group.hpp"
#include "stargraph/permgroup.hpp"

using namespace stargraph;
using stargraph::testing::closure;
using stargraph::testing::filter;

namespace {

Permutation random_perm(std::size_t n, std::mt19937& rng) {
  std::vector<Point> img(n);
  for (std::size_t i = 0; i < n; ++i) img[i] = static_cast<Point>(i);
  std::shuffle(img.begin(), img.end(), rng);
  return Permutation(img);
}

// Random small groups: a few random permutations, sometimes with extra fixed points or a block structure.
std::vector<Permutation> random_gens(std::size_t n, std::mt19937& rng) {
  std::uniform_int_distribution<int> count(1, 3), kind(0, 2);
  std::vector<Permutation> gens;
  int c = count(rng);
  for (int i = 0; i < c; ++i) {
    switch (kind(rng)) {
      case 0:
        gens.push_back(random_perm(n, rng));
        break;
      case 1: {  // acts only on the first half
        std::size_t h = n / 2;
        auto p = random_perm(h, rng);
        std::vector<Point> img(n);
        for (std::size_t j = 0; j < n; ++j) img[j] = j < h ? p[j] : static_cast<Point>(j);
        gens.emplace_back(img);
        break;
      }
      default: {  // a transposition
        std::uniform_int_distribution<Point> pt(0, static_cast<Point>(n - 1));
        Point a = pt(rng), b = pt(rng);
        if (a != b) gens.push_back(Permutation::from_cycles(n, {{a, b}}));
        else gens.emplace_back(n);
      }
    }
  }
  return gens;
}

Permutation cyc(std::size_t n, std::vector<std::vector<Point>> cycles) { return Permutation::from_cycles(n, cycles); }

}  // namespace

TEST(Permutation, ComposeAppliesLeftFirst) {
  auto a = Permutation::from_cycles(3, {{0, 1}});
  auto b = Permutation::from_cycles(3, {{1, 2}});
  auto ab = compose(a, b);
  EXPECT_EQ(ab.images(), (std::vector<Point>{2, 0, 1}));
  EXPECT_EQ(ab.to_cycle_string(), "(0 2 1)");
  EXPECT_EQ(Permutation(4).to_cycle_string(), "()");
}

TEST(Permutation, InverseAndParity) {
  auto p = Permutation::from_cycles(6, {{0, 3, 5}, {1, 2}});
  EXPECT_TRUE(compose(p, p.inverse()).is_identity());
  EXPECT_TRUE(compose(p.inverse(), p).is_identity());
  EXPECT_FALSE(p.is_even());
  EXPECT_TRUE(Permutation::from_cycles(6, {{0, 3, 5}}).is_even());
  EXPECT_TRUE(Permutation(6).is_even());
}

TEST(Permutation, RejectsNonBijections) {
  EXPECT_THROW(Permutation(std::vector<Point>{0, 0, 1}), PermutationError);
  EXPECT_THROW(Permutation(std::vector<Point>{0, 3, 1}), PermutationError);
  EXPECT_THROW(Permutation::from_cycles(3, {{0, 1}, {1, 2}}), PermutationError);
  EXPECT_THROW(compose(Permutation(3), Permutation(4)), PermutationError);
}

TEST(PermGroup, SymmetricOrders) {
  for (std::size_t n = 0; n <= 12; ++n) EXPECT_EQ(PermGroup::symmetric(n).order(), factorial(n)) << n;
  EXPECT_EQ(PermGroup::symmetric(30).order(), factorial(30));
}

TEST(PermGroup, MathieuOrders) {
  // generators on 1..11 shifted down by one
  auto c11 = cyc(12, {{0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10}});
  auto x = cyc(12, {{2, 6, 10, 7}, {3, 9, 4, 5}});
  auto y = cyc(12, {{0, 11}, {1, 10}, {2, 5}, {3, 7}, {4, 8}, {6, 9}});
  PermGroup m11(12, {c11, x});
  PermGroup m12(12, {c11, x, y});
  EXPECT_EQ(m11.order(), 7920);
  EXPECT_EQ(m12.order(), 95040);
  EXPECT_EQ(m12.point_stabiliser(11).order(), 7920);
  EXPECT_EQ(m12.pointwise_stabiliser(std::vector<Point>{0, 1, 2, 3, 4}).order(), 1);
}

TEST(PermGroup, WreathProduct) {
  // S3 wr S3 on 9 points
  std::vector<Permutation> gens{cyc(9, {{0, 1}}), cyc(9, {{0, 1, 2}}), cyc(9, {{0, 3}, {1, 4}, {2, 5}}),
                                cyc(9, {{0, 3, 6}, {1, 4, 7}, {2, 5, 8}})};
  PermGroup g(9, gens);
  EXPECT_EQ(g.order(), 1296);
  EXPECT_TRUE(g.is_transitive());
  EXPECT_TRUE(g.contains(cyc(9, {{6, 8}})));
  EXPECT_FALSE(g.contains(cyc(9, {{2, 3}})));
}

TEST(PermGroup, RandomAgainstClosure) {
  std::mt19937 rng(12345);
  for (int trial = 0; trial < 120; ++trial) {
    std::size_t n = 3 + trial % 5;
    auto gens = random_gens(n, rng);
    PermGroup g(n, gens);
    auto elts = closure(n, gens);
    ASSERT_EQ(g.order(), elts.size()) << "trial " << trial;

    auto listed = g.elements();
    EXPECT_EQ(std::set<Permutation>(listed.begin(), listed.end()), std::set<Permutation>(elts.begin(), elts.end()));

    for (int k = 0; k < 20; ++k) {
      auto p = random_perm(n, rng);
      bool inside = std::binary_search(elts.begin(), elts.end(), p);
      EXPECT_EQ(g.contains(p), inside);
    }

    for (Point v = 0; v < n; ++v) {
      std::set<Point> orb;
      for (auto& e : elts) orb.insert(e[v]);
      EXPECT_EQ(g.orbit(v), std::vector<Point>(orb.begin(), orb.end()));
      auto stab = g.point_stabiliser(v);
      EXPECT_EQ(stab.order(), filter(elts, [&](const Permutation& e) { return e.fixes(v); }).size());
      for (auto& s : stab.generators()) EXPECT_TRUE(s.fixes(v));
    }

    std::vector<Point> pts{0, static_cast<Point>(n - 1)};
    auto pw = g.pointwise_stabiliser(pts);
    EXPECT_EQ(pw.order(), filter(elts, [&](const Permutation& e) { return e.fixes(0) && e.fixes(n - 1); }).size());

    std::vector<Point> set{1, 2};
    if (n > 4) set.push_back(4);
    auto sw = g.setwise_stabiliser(set);
    auto brute_sw = filter(elts, [&](const Permutation& e) {
      for (Point p : set)
        if (std::find(set.begin(), set.end(), e[p]) == set.end()) return false;
      return true;
    });
    EXPECT_EQ(sw.order(), brute_sw.size()) << "trial " << trial;
    for (auto& s : sw.generators()) EXPECT_TRUE(std::binary_search(brute_sw.begin(), brute_sw.end(), s));

    std::uniform_int_distribution<Point> pt(0, static_cast<Point>(n - 1));
    for (int k = 0; k < 10; ++k) {
      std::vector<std::pair<Point, Point>> cons{{pt(rng), pt(rng)}, {pt(rng), pt(rng)}};
      auto t = g.transporter(cons);
      bool exists = std::any_of(elts.begin(), elts.end(), [&](const Permutation& e) {
        return std::all_of(cons.begin(), cons.end(), [&](auto c) { return e[c.first] == c.second; });
      });
      EXPECT_EQ(t.has_value(), exists);
      if (t) {
        EXPECT_TRUE(g.contains(*t));
        for (auto c : cons) EXPECT_EQ((*t)[c.first], c.second);
      }
    }
  }
}

TEST(PermGroup, BaseHintIsHonoured) {
  auto g = PermGroup::symmetric(6);
  std::vector<Point> prefix{4, 2, 5};
  auto h = g.with_base_prefix(prefix);
  auto b = h.base();
  ASSERT_GE(b.size(), 3u);
  EXPECT_EQ(std::vector<Point>(b.begin(), b.begin() + 3), prefix);
  EXPECT_TRUE(h.base_has_prefix(prefix));
  EXPECT_EQ(h.order(), 720);
  EXPECT_EQ(h.pointwise_stabiliser(prefix).order(), 6);
}

TEST(PermGroup, TransporterInconsistentConstraints) {
  auto g = PermGroup::symmetric(5);
  std::vector<std::pair<Point, Point>> same_source{{0, 1}, {0, 2}};
  std::vector<std::pair<Point, Point>> same_target{{0, 1}, {2, 1}};
  std::vector<std::pair<Point, Point>> repeated{{0, 1}, {0, 1}, {3, 4}};
  EXPECT_FALSE(g.transporter(same_source));
  EXPECT_FALSE(g.transporter(same_target));
  ASSERT_TRUE(g.transporter(repeated));
}

TEST(PermGroup, InducedActionAndKernel) {
  // S3 x S3 on {0,1,2} and {3,4,5}
  PermGroup g(6, {cyc(6, {{0, 1}}), cyc(6, {{0, 1, 2}}), cyc(6, {{3, 4}}), cyc(6, {{3, 4, 5}})});
  std::vector<Point> dom{5, 3, 4};
  auto ia = induced_action(g, dom);
  EXPECT_EQ(ia.image.degree(), 3u);
  EXPECT_EQ(ia.image.order(), 6);
  EXPECT_EQ(ia.kernel_order, 6);
  std::vector<Point> bad{0, 3};
  EXPECT_THROW(induced_action(g, bad), std::invalid_argument);
}

TEST(PermGroup, Identify) {
  auto s5 = PermGroup::symmetric(5);
  PermGroup a5(5, {cyc(5, {{0, 1, 2}}), cyc(5, {{0, 1, 2, 3, 4}})});
  PermGroup c5(5, {cyc(5, {{0, 1, 2, 3, 4}})});
  PermGroup intrans(5, {cyc(5, {{0, 1}})});
  EXPECT_EQ(identify(s5, 5).kind, ActionKind::symmetric);
  EXPECT_EQ(identify(a5, 5).kind, ActionKind::alternating);
  EXPECT_EQ(a5.order(), 60);
  auto r = identify(c5, 5);
  EXPECT_EQ(r.kind, ActionKind::other);
  EXPECT_TRUE(r.transitive);
  EXPECT_FALSE(identify(intrans, 5).transitive);
  EXPECT_EQ(identify(PermGroup::trivial(1), 1).kind, ActionKind::symmetric);
}

TEST(GeneratorFile, RoundTrip) {
  std::vector<Permutation> gens{cyc(5, {{0, 1}}), cyc(5, {{0, 1, 2, 3, 4}})};
  std::ostringstream out;
  write_generators(out, 5, gens);
  std::istringstream in("# comment\n" + out.str() + "\n");
  auto gs = read_generators(in);
  EXPECT_EQ(gs.degree, 5u);
  EXPECT_EQ(gs.generators, gens);
}

TEST(GeneratorFile, ErrorsCarryLineNumbers) {
  auto line_of = [](const std::string& text) -> std::size_t {
    std::istringstream in(text);
    try {
      read_generators(in);
    } catch (const FormatError& e) {
      return e.line();
    }
    return 999;
  };
  EXPECT_EQ(line_of("d 3\np 0 1 2\np 0 0 1\n"), 3u);
  EXPECT_EQ(line_of("p 0 1 2\n"), 1u);
  EXPECT_EQ(line_of("d 3\n\np 0 1\n"), 3u);
  EXPECT_EQ(line_of("d 3\nq 1\n"), 2u);
  EXPECT_EQ(line_of("d 3\np 0 1 x\n"), 2u);
  EXPECT_EQ(line_of(""), 0u);
}
