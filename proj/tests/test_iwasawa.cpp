#include "doctest.h"
#include "iwasawa_support.hpp"

#include "affgrass/error.hpp"

using namespace affgrass;
using namespace affgrass::test;

namespace {

MatrixF sl2_point(const FieldElem& t) {
  MatrixF g = MatrixF::identity(2);
  g(1, 0) = t;
  return g;
}

void check_factors(const MatrixF& g, const ParabolicDatum& P, const IwasawaFactors& f) {
  const int n = g.size();
  CHECK(f.n_part * f.m_part * f.k_part == g);
  CHECK(in_GL_O(f.k_part));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const int pi = P.position_of(i), pj = P.position_of(j);
      if (pi == pj) {
        CHECK(f.n_part(i, j) == FieldElem(i == j ? 1 : 0));
      } else {
        CHECK(f.m_part(i, j).is_zero());
        if (pi > pj)
          CHECK(f.n_part(i, j).is_zero());
      }
    }
}

std::vector<long> block_sums(const CoweightM& fine, const LeviDatum& coarse) {
  std::vector<long> out(coarse.rank(), 0);
  for (int k = 0; k < fine.levi.rank(); ++k)
    out[coarse.block_of(fine.levi.blocks()[k].front())] += fine.components[k];
  return out;
}

} // namespace

TEST_CASE("iwasawa factorization invariants") {
  Gen g(41);
  for (int t = 0; t < 80; ++t) {
    int n = g.uniform(1, 4);
    MatrixF rep = g.point_rep(n);
    ParabolicDatum P = random_parabolic(g, random_levi(g, n));
    check_factors(rep, P, iwasawa_factor(rep, P));
  }
  CHECK_THROWS_AS(iwasawa_factor(MatrixF(3), BorelDatum::standard(3).parabolic()),
                  SingularMatrix);
}

TEST_CASE("block-diagonal g factors trivially") {
  auto P = parabolic(3, {{3}, {1, 2}});
  MatrixF g = M({{"1", "1*eps^0/1*eps^2", "0"}, {"1*eps^1", "2", "0"}, {"0", "0", "1*eps^0/1*eps^1"}});
  IwasawaFactors f = iwasawa_factor(g, P);
  CHECK(f.n_part == MatrixF::identity(3));
  CHECK(f.m_part == g);
  CHECK(f.k_part == MatrixF::identity(3));
}

TEST_CASE("GL(2) Borel example") {
  auto B = BorelDatum::standard(2).parabolic();
  MatrixF g = sl2_point(eps(-2));
  IwasawaFactors f = iwasawa_factor(g, B);
  check_factors(g, B, f);
  // m_part lies in diag(t^{-1}, t) A(O) for t = eps^-2.
  CHECK(same_coset(f.m_part, diag({eps(2), eps(-2)})));
  CHECK(levi_nu(retract(g, B)).components == std::vector<long>{2, -2});

  IwasawaFactors f2 = iwasawa_factor(sl2_point(eps(2)), B);
  CHECK(in_GL_O(f2.m_part));
  CHECK(levi_nu(retract(sl2_point(eps(2)), B)).components == std::vector<long>{0, 0});
}

TEST_CASE("retract examples") {
  auto L = levi(3, {{1, 3}, {2}});
  MatrixF m = diag({eps(1), eps(-1), FieldElem(1)});
  m(2, 0) = eps(-3);
  LeviPoint y = levi_point(L, m);
  for (const auto& P : parabolics(L))
    CHECK(retract(canonicalize(m), P) == y);

  std::vector<int> mu{3, -1, 0, 2};
  LeviPoint t = levi_point(LeviDatum::torus(4), torus_element(mu));
  Gen g(42);
  for (int k = 0; k < 10; ++k) {
    BorelDatum B = random_borel(g, 4);
    CHECK(retract(torus_point(mu), B.parabolic()) == t);
  }
  for (const auto& P : parabolics(levi(4, {{1, 4}, {2}, {3}})))
    CHECK(retract(torus_point(mu), P) == levi_point(P.levi(), torus_element(mu)));
}

TEST_CASE("n_pair examples") {
  auto B = BorelDatum::standard(2);
  auto Bp = B.parabolic(), Bbar = B.opposite().parabolic();
  CHECK(n_pair(sl2_point(eps(-2)), Bp, Bbar) == 2);
  CHECK(n_pair(sl2_point(eps(3)), Bp, Bbar) == 0);
  CHECK(n_pair(sl2_point(eps(-5, 2)), Bp, Bbar) == 5);
  CHECK(n_pair(sl2_point(FieldElem()), Bp, Bbar) == 0);
  auto B3 = BorelDatum::standard(3).parabolic();
  CHECK_THROWS_AS(n_pair(MatrixF::identity(3), B3, borel({3, 2, 1}).parabolic()), NotAdjacent);
}

TEST_CASE("n_pair_from_nu self-checks") {
  auto B = BorelDatum::standard(2).parabolic(), Bbar = BorelDatum::standard(2).opposite().parabolic();
  auto A = LeviDatum::torus(2);
  CHECK(n_pair_from_nu({A, {2, -2}}, {A, {-2, 2}}, B, Bbar) == 4);
  CHECK_THROWS_AS(n_pair_from_nu({A, {1, 0}}, {A, {0, 0}}, B, Bbar), ProportionalityViolation);
  CHECK_THROWS_AS(n_pair_from_nu({A, {-1, 1}}, {A, {0, 0}}, B, Bbar), ProportionalityViolation);
}

TEST_CASE("retraction is well defined on cosets") {
  Gen g(43);
  for (int t = 0; t < 60; ++t) {
    int n = g.uniform(2, 4);
    MatrixF rep = g.point_rep(n), other = rep * g.gl_O(n);
    ParabolicDatum P = random_parabolic(g, random_levi(g, n));
    CHECK(retract(rep, P) == retract(other, P));
  }
}

TEST_CASE("transitivity and nu compatibility") {
  Gen g(44);
  for (int t = 0; t < 60; ++t) {
    int n = g.uniform(2, 4);
    MatrixF rep = g.point_rep(n);
    GrassPoint x = canonicalize(rep);
    ParabolicDatum P = random_parabolic(g, random_levi(g, n));
    if (P.levi().rank() < 2)
      continue;
    ParabolicDatum Q = merge_consecutive(P, g.uniform(0, P.levi().rank() - 2));
    if (g.coin() && Q.levi().rank() >= 2)
      Q = merge_consecutive(Q, g.uniform(0, Q.levi().rank() - 2));
    LeviPoint direct = retract(x, P);
    LeviPoint via = retract(retract(x, Q), P);
    CHECK(direct == via);
    CoweightM nuP = levi_nu(direct), nuQ = levi_nu(retract(x, Q));
    CHECK(block_sums(nuP, Q.levi()) == nuQ.components);
    CHECK(nuP.total() == nu_G(x));
  }
}

TEST_CASE("non-negativity of n(x,P,P') on random points") {
  Gen g(45);
  for (int t = 0; t < 40; ++t) {
    int n = g.uniform(2, 4);
    GrassPoint x = canonicalize(g.point_rep(n));
    LeviDatum L = random_levi(g, n);
    for (const auto& [P, P2] : adjacent_pairs(L)) {
      long v = n_pair(x, P, P2);
      CHECK(v >= 0);
    }
  }
}

TEST_CASE("gallery identity and gallery independence") {
  Gen g(46);
  for (int t = 0; t < 40; ++t) {
    int n = g.uniform(2, 4);
    MatrixF rep = g.point_rep(n);
    LeviDatum L = random_levi(g, n);
    if (L.rank() < 2)
      continue;
    auto pairs = adjacent_pairs(L);
    auto [P, P2] = pairs[g.uniform(0, static_cast<int>(pairs.size()) - 1)];
    auto within = random_block_orders(g, L);
    BorelDatum B = borel_lift(P, within), B2 = borel_lift(P2, within);
    long direct = n_pair(rep, P, P2);
    CHECK(gallery_sum(rep, minimal_gallery(B, B2)) == direct);
    for (int k = 0; k < 3; ++k)
      CHECK(gallery_sum(rep, random_gallery(g, B, B2)) == direct);
  }
}

TEST_CASE("rank-one reduction") {
  Gen g(47);
  for (int t = 0; t < 40; ++t) {
    int n = g.uniform(2, 4);
    GrassPoint x = canonicalize(g.point_rep(n));
    BorelDatum B = random_borel(g, n);
    int pos = g.uniform(0, n - 2);
    BorelDatum B2 = B;
    std::swap(B2.perm[pos], B2.perm[pos + 1]);
    ParabolicDatum Q = merge_consecutive(B.parabolic(), pos);
    LeviPoint y = retract(x, Q);
    Block pair{B.perm[pos], B.perm[pos + 1]};
    std::sort(pair.begin(), pair.end());
    const GrassPoint& yL = y.points[Q.levi().index_of(pair)];
    long inside = n_pair(yL, restrict_to_block(B.parabolic(), pair),
                         restrict_to_block(B2.parabolic(), pair));
    CHECK(n_pair(x, B.parabolic(), B2.parabolic()) == inside);
  }
}
