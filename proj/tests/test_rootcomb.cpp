#include "doctest.h"
#include "support.hpp"

#include "affgrass/error.hpp"

#include <set>

using namespace affgrass;
using namespace affgrass::test;

namespace {

std::set<Root> as_set(const std::vector<Root>& v) { return {v.begin(), v.end()}; }

Root root(int i, int j) { return {i - 1, j - 1}; }

std::set<Root> inversions(const BorelDatum& a, const BorelDatum& b) {
  // Roots positive for a and negative for b.
  ParabolicDatum pa = a.parabolic(), pb = b.parabolic();
  std::set<Root> out;
  const int n = static_cast<int>(a.perm.size());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && pa.precedes(i, j) && pb.precedes(j, i))
        out.insert({i, j});
  return out;
}

BorelDatum random_borel(Gen& g, int n) {
  BorelDatum b = BorelDatum::standard(n);
  for (int i = n - 1; i > 0; --i)
    std::swap(b.perm[i], b.perm[g.uniform(0, i)]);
  return b;
}

} // namespace

TEST_CASE("adjacent") {
  auto P = parabolic(4, {{1, 2}, {3, 4}}), P2 = parabolic(4, {{3, 4}, {1, 2}});
  auto sw = adjacent(P, P2);
  REQUIRE(sw);
  CHECK(sw->first == Block{0, 1});
  CHECK(sw->second == Block{2, 3});

  auto B1 = borel({1, 2, 3}).parabolic(), B2 = borel({2, 1, 3}).parabolic();
  auto sb = adjacent(B1, B2);
  REQUIRE(sb);
  CHECK(sb->first == Block{0});
  CHECK(sb->second == Block{1});
  CHECK_FALSE(adjacent(B1, borel({3, 2, 1}).parabolic()));
  CHECK_FALSE(adjacent(B1, B1));
  CHECK_THROWS_AS(adjacent(B1, parabolic(3, {{1, 2}, {3}})), LeviMismatch);
}

TEST_CASE("beta") {
  auto B1 = borel({1, 2, 3}).parabolic(), B2 = borel({2, 1, 3}).parabolic();
  CHECK(beta(B1, B2).components == std::vector<long>{1, -1, 0});
  auto P = parabolic(4, {{1, 2}, {3, 4}}), P2 = parabolic(4, {{3, 4}, {1, 2}});
  CHECK(beta(P, P2).components == std::vector<long>{1, -1});
  CHECK(beta(P2, P).components == std::vector<long>{-1, 1});
  CHECK_THROWS_AS(beta(B1, borel({3, 2, 1}).parabolic()), NotAdjacent);
}

TEST_CASE("m_alpha") {
  auto B1 = borel({1, 2, 3}).parabolic(), B2 = borel({2, 1, 3}).parabolic();
  CHECK(m_alpha(root(1, 2), B1, B2) == 1);
  auto P = parabolic(4, {{1, 2}, {3, 4}}), P2 = parabolic(4, {{3, 4}, {1, 2}});
  CHECK(m_alpha(root(1, 3), P, P2) == 1);
  CHECK(m_alpha(root(2, 4), P, P2) == 1);
  CHECK_THROWS_AS(m_alpha(root(3, 1), P, P2), RootNotInNNbar);
  CHECK_THROWS_AS(m_alpha(root(1, 2), P, P2), RootNotInNNbar);
}

TEST_CASE("roots_between") {
  auto B1 = borel({1, 2, 3}).parabolic(), B2 = borel({2, 1, 3}).parabolic();
  CHECK(as_set(roots_between(B1, B2)) == std::set<Root>{root(1, 2)});
  auto P = parabolic(4, {{1, 2}, {3, 4}}), P2 = parabolic(4, {{3, 4}, {1, 2}});
  CHECK(as_set(roots_between(P, P2)) ==
        std::set<Root>{root(1, 3), root(1, 4), root(2, 3), root(2, 4)});
  auto Q = parabolic(3, {{1}, {2, 3}}), Q2 = parabolic(3, {{2, 3}, {1}});
  CHECK(as_set(roots_between(Q, Q2)) == std::set<Root>{root(1, 2), root(1, 3)});
}

TEST_CASE("minimal_gallery") {
  auto B = borel({1, 2, 3});
  CHECK(minimal_gallery(B, B) == std::vector<BorelDatum>{B});
  auto g = minimal_gallery(B, borel({3, 2, 1}));
  CHECK(g.size() == 4);
  CHECK(as_set(crossing_roots(g)) == std::set<Root>{root(1, 2), root(1, 3), root(2, 3)});
  auto g2 = minimal_gallery(borel({1, 2}), borel({2, 1}));
  CHECK(g2 == std::vector<BorelDatum>{borel({1, 2}), borel({2, 1})});
  CHECK(crossing_roots(g2) == std::vector<Root>{root(1, 2)});
}

TEST_CASE("borel_lift") {
  CHECK(borel_lift(parabolic(3, {{1, 2}, {3}}), {{0, 1}, {2}}) == borel({1, 2, 3}));
  CHECK(borel_lift(parabolic(3, {{3}, {1, 2}}), {{1, 0}, {2}}) == borel({3, 2, 1}));
  CHECK(borel_lift(borel({2, 3, 1}).parabolic(), {{0}, {1}, {2}}) == borel({2, 3, 1}));
}

TEST_CASE("parabolic counts and adjacency graph") {
  for (int r = 1; r <= 4; ++r) {
    std::vector<Block> blocks;
    for (int i = 0; i < r; ++i)
      blocks.push_back({i});
    LeviDatum L(r, blocks);
    auto ps = parabolics(L);
    long fact = 1;
    for (int i = 2; i <= r; ++i)
      fact *= i;
    CHECK(static_cast<long>(ps.size()) == fact);
    CHECK(std::is_sorted(ps.begin(), ps.end()));
    auto pairs = adjacent_pairs(L);
    CHECK(static_cast<long>(pairs.size()) == fact * (r - 1));
    for (const auto& P : ps) {
      int degree = 0;
      for (const auto& Q : ps)
        degree += adjacent(P, Q).has_value();
      CHECK(degree == r - 1);
    }
    // Connected: breadth-first search from the first parabolic.
    std::set<ParabolicDatum> seen{ps.front()};
    std::vector<ParabolicDatum> frontier{ps.front()};
    while (!frontier.empty()) {
      auto P = frontier.back();
      frontier.pop_back();
      for (const auto& [A, Bp] : pairs)
        if (A == P && seen.insert(Bp).second)
          frontier.push_back(Bp);
    }
    CHECK(seen.size() == ps.size());
  }
}

TEST_CASE("beta is primitive in the kernel and every cross root maps to it") {
  auto L = levi(5, {{1, 3}, {2}, {4, 5}});
  for (const auto& [P, P2] : adjacent_pairs(L)) {
    CoweightM b = beta(P, P2);
    CHECK(b.total() == 0);
    int nonzero = 0;
    for (long c : b.components) {
      CHECK(std::abs(c) <= 1);
      nonzero += c != 0;
    }
    CHECK(nonzero == 2);
    for (int k = 0; k < L.rank(); ++k)
      CHECK(beta(P2, P).components[k] == -b.components[k]);
    auto roots = roots_between(P, P2);
    auto sw = adjacent(P, P2);
    CHECK(roots.size() == sw->first.size() * sw->second.size());
    for (const auto& a : roots) {
      CHECK(m_alpha(a, P, P2) == 1);
      std::vector<long> image(L.rank(), 0);
      image[L.block_of(a.first)] += 1;
      image[L.block_of(a.second)] -= 1;
      CHECK(image == b.components);
    }
  }
}

TEST_CASE("gallery length properties") {
  Gen g(21);
  for (int t = 0; t < 200; ++t) {
    int n = g.uniform(1, 5);
    BorelDatum a = random_borel(g, n), b = random_borel(g, n), c = random_borel(g, n);
    auto gab = minimal_gallery(a, b);
    CHECK(gab.front() == a);
    CHECK(gab.back() == b);
    for (std::size_t i = 1; i < gab.size(); ++i)
      CHECK(adjacent(gab[i - 1].parabolic(), gab[i].parabolic()).has_value());
    auto cross = crossing_roots(gab);
    CHECK(as_set(cross) == inversions(a, b));
    CHECK(as_set(cross).size() == cross.size());
    auto len = [](const auto& gal) { return gal.size() - 1; };
    CHECK(len(gab) == len(minimal_gallery(b, a)));
    CHECK(len(gab) <= len(minimal_gallery(a, c)) + len(minimal_gallery(c, b)));
  }
}

TEST_CASE("merge and restriction") {
  auto B = borel({3, 1, 4, 2});
  auto Q = merge_consecutive(B.parabolic(), 1);
  CHECK(Q == parabolic(4, {{3}, {1, 4}, {2}}));
  auto local = restrict_to_block(B.parabolic(), Block{0, 3});
  CHECK(local == borel({1, 2}).parabolic());
  auto local2 = restrict_to_block(B.parabolic(), Block{1, 2});
  CHECK(local2 == borel({2, 1}).parabolic());
  CHECK(to_string(Q) == "[[3],[1,4],[2]]");
  CHECK(pair_key(B.parabolic(), Q) == "[[3],[1],[4],[2]]|[[3],[1,4],[2]]");
}
