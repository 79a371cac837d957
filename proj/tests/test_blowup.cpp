#include <gtest/gtest.h>

#include "bbflow/chains.hpp"
#include "oracles.hpp"

using namespace bbflow;
using bbflow::testing::error_code_of;

namespace {

ExponentSet points(std::vector<std::pair<int, int>> ps) {
  ExponentSet e;
  for (auto [a, b] : ps)
    e.points.push_back({a, b});
  return e;
}

std::vector<std::string> paths(const BlowupTree &t) {
  std::vector<std::string> out;
  for (const auto &n : t.nodes)
    out.push_back(n.path);
  return out;
}

// Pull the original generators through the charts of `path` without any
// stripping, then ask whether one monomial divides all the others.
bool principal_by_substitution(const ExponentSet &e, const std::string &path) {
  std::vector<Exponent> pts = e.points;
  for (char chart : path)
    for (auto &p : pts)
      p = chart == 'A' ? Exponent{p.a, p.a + p.b} : Exponent{p.a + p.b, p.b};
  return std::any_of(pts.begin(), pts.end(), [&](const Exponent &p) {
    return std::all_of(pts.begin(), pts.end(), [&](const Exponent &q) {
      return p.a <= q.a && p.b <= q.b;
    });
  });
}

// Least n such that every monomial of degree n is divisible by a point.
int guard_by_scan(const ExponentSet &e) {
  for (int n = 0;; ++n) {
    bool all = true;
    for (int a = 0; a <= n; ++a) {
      bool hit = false;
      for (const auto &p : e.points)
        hit |= p.a <= a && p.b <= n - a;
      all &= hit;
    }
    if (all)
      return n;
  }
}

} // namespace

TEST(MinimalGenerators, DropsMultiples) {
  EXPECT_EQ(minimal_generators({{2, 0}, {0, 1}, {3, 1}, {2, 0}, {1, 1}}),
            (std::vector<Exponent>{{0, 1}, {2, 0}}));
}

TEST(Guard, Examples) {
  EXPECT_EQ(guard_exponent(points({{1, 0}, {0, 1}})), 1);
  EXPECT_EQ(guard_exponent(points({{2, 0}, {0, 1}})), 2);
  EXPECT_EQ(guard_exponent(points({{3, 0}, {1, 1}, {0, 3}})), 3);
  EXPECT_EQ(guard_exponent(points({{0, 0}})), 0);
  EXPECT_EQ(error_code_of([] { guard_exponent(points({{1, 0}})); }),
            ErrorCode::NotCofinite);
  EXPECT_EQ(error_code_of([] { guard_exponent(points({})); }),
            ErrorCode::NotCofinite);
  EXPECT_EQ(error_code_of([] { guard_exponent(points({{-1, 0}, {0, 1}})); }),
            ErrorCode::InvalidInput);
}

TEST(Blowup, MaximalIdeal) {
  const auto t = chain_from_monomial_ideal(points({{1, 0}, {0, 1}}));
  EXPECT_EQ(t.guard_exponent, 1);
  EXPECT_EQ(t.depth, 1u);
  EXPECT_EQ(paths(t), (std::vector<std::string>{"", "A", "B"}));
  EXPECT_FALSE(t.nodes[0].principal);
  EXPECT_TRUE(t.nodes[1].principal);
  EXPECT_TRUE(t.nodes[2].principal);
  EXPECT_EQ(t.nodes[1].stripped, (Exponent{0, 1}));
  EXPECT_EQ(t.nodes[2].stripped, (Exponent{1, 0}));
  EXPECT_EQ(t.nodes[1].weights, (WeightPair{1, 0}));
  EXPECT_EQ(t.nodes[2].weights, (WeightPair{1, -1}));
}

TEST(Blowup, SquareOfYPlusPi) {
  const auto t = chain_from_monomial_ideal(points({{2, 0}, {0, 1}}));
  EXPECT_EQ(t.guard_exponent, 2);
  EXPECT_EQ(t.depth, 2u);
  EXPECT_EQ(paths(t), (std::vector<std::string>{"", "A", "B", "BA", "BB"}));
  EXPECT_TRUE(t.nodes[1].principal);
  EXPECT_EQ(t.nodes[1].generators, (std::vector<Exponent>{{0, 0}}));
  EXPECT_EQ(t.nodes[1].stripped, (Exponent{0, 1}));
  EXPECT_FALSE(t.nodes[2].principal);
  EXPECT_EQ(t.nodes[2].generators, (std::vector<Exponent>{{0, 1}, {1, 0}}));
  EXPECT_TRUE(t.nodes[3].principal);
  EXPECT_TRUE(t.nodes[4].principal);
  EXPECT_EQ(t.nodes[3].weights, (WeightPair{2, -1}));
  EXPECT_EQ(t.nodes[4].weights, (WeightPair{1, -2}));
}

TEST(Blowup, UnitIdealNeedsNothing) {
  const auto t = chain_from_monomial_ideal(points({{0, 0}, {3, 2}}));
  EXPECT_EQ(t.depth, 0u);
  ASSERT_EQ(t.nodes.size(), 1u);
  EXPECT_TRUE(t.nodes[0].principal);
}

TEST(Blowup, NotCofinite) {
  EXPECT_EQ(error_code_of([] { chain_from_monomial_ideal(points({{1, 0}})); }),
            ErrorCode::NotCofinite);
}

TEST(Blowup, RandomCofiniteSets) {
  std::mt19937 rng(43);
  std::uniform_int_distribution<int> entry(0, 6);
  for (int round = 0; round < 100; ++round) {
    ExponentSet e;
    e.points.push_back({1 + entry(rng) % 6, 0});
    e.points.push_back({0, 1 + entry(rng) % 6});
    const int extra = entry(rng);
    for (int i = 0; i < extra; ++i)
      e.points.push_back({entry(rng), entry(rng)});
    const auto t = chain_from_monomial_ideal(e);
    ASSERT_EQ(t.guard_exponent, guard_by_scan(e));
    ASSERT_LE(t.depth, static_cast<std::size_t>(t.guard_exponent));
    std::set<std::string> seen;
    for (const auto &n : t.nodes) {
      ASSERT_GT(n.weights.w, n.weights.v) << n.path;
      ASSERT_EQ(n.principal, principal_by_substitution(e, n.path)) << n.path;
      seen.insert(n.path);
      // Children exist exactly below non-principal nodes.
      ASSERT_EQ(!n.principal, std::count_if(t.nodes.begin(), t.nodes.end(),
                                            [&](const BlowupNode &m) {
                                              return m.path == n.path + "A" ||
                                                     m.path == n.path + "B";
                                            }) == 2);
    }
    ASSERT_EQ(seen.size(), t.nodes.size());
  }
}
