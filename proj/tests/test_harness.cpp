#include "doctest.h"
#include "iwasawa_support.hpp"

#include "affgrass/error.hpp"
#include "affgrass/harness.hpp"
#include "affgrass/puiseux.hpp"

using namespace affgrass;
using namespace affgrass::test;

namespace {

FiberDatum two_elliptic() {
  return FiberDatum(contiguous_levi({2, 2}),
                    block_diag({companion(monic({-eps(1), FieldElem(0)})),
                                companion(monic({-eps(1, 4), FieldElem(0)}))}));
}

FiberDatum split3() {
  return FiberDatum(LeviDatum::torus(3), diag({eps(1), eps(1, 2), eps(1, 4)}));
}

} // namespace

TEST_CASE("n_u_pair examples") {
  FiberDatum u2(LeviDatum::torus(2), diag({eps(2), -eps(2)}));
  auto B = BorelDatum::standard(2);
  CHECK(n_u_pair(u2, B.parabolic(), B.opposite().parabolic()) == 2);
  CHECK(n_u_pair(u2, B.opposite().parabolic(), B.parabolic()) == 2);

  FiberDatum u4 = two_elliptic();
  auto pairs = adjacent_pairs(u4.levi());
  REQUIRE(pairs.size() == 2);
  for (const auto& [P, P2] : pairs)
    CHECK(n_u_pair(u4, P, P2) == 2);

  FiberDatum u3 = split3();
  for (const auto& [P, P2] : adjacent_pairs(u3.levi()))
    CHECK(n_u_pair(u3, P, P2) == 1);
  CHECK_THROWS_AS(n_u_pair(u3, BorelDatum::standard(3).parabolic(), borel({3, 2, 1}).parabolic()),
                  NotAdjacent);
  CHECK_THROWS_AS(n_u_pair(u3, parabolic(3, {{1, 2}, {3}}), parabolic(3, {{3}, {1, 2}})),
                  LeviMismatch);
}

TEST_CASE("n_u_pair is symmetric and depends only on the swapped pair") {
  FiberDatum u(LeviDatum::torus(4),
               diag({eps(1), F("1 + 1*eps^2"), eps(3, 5), F("1 + 1*eps^2 + 1*eps^3")}));
  for (const auto& [P, P2] : adjacent_pairs(u.levi())) {
    long v = n_u_pair(u, P, P2);
    CHECK(v == n_u_pair(u, P2, P));
    auto sw = adjacent(P, P2);
    int i = sw->first[0], j = sw->second[0];
    CHECK(v == (u.u()(i, i) - u.u()(j, j)).val().value());
  }
}

TEST_CASE("n_u_pair gallery consistency for split u") {
  // A split u seen through a coarser Levi: crossing roots of a minimal
  // gallery between lifted Borels add up to the block resultant valuation.
  MatrixF d = diag({eps(1), F("1 + 1*eps^1"), eps(2, 3), F("1 + 1*eps^3")});
  Gen g(61);
  for (int t = 0; t < 20; ++t) {
    LeviDatum L = random_levi(g, 4);
    if (L.rank() < 2)
      continue;
    FiberDatum u(L, d);
    auto within = random_block_orders(g, L);
    for (const auto& [P, P2] : adjacent_pairs(L)) {
      BorelDatum B = borel_lift(P, within), B2 = borel_lift(P2, within);
      long sum = 0;
      for (const auto& [i, j] : crossing_roots(random_gallery(g, B, B2)))
        sum += (d(i, i) - d(j, j)).val().value();
      CHECK(sum == n_u_pair(u, P, P2));
    }
  }
}

TEST_CASE("certificate on the GL(2) example") {
  FiberDatum u(LeviDatum::torus(2), diag({eps(2), -eps(2)}));
  MatrixF g = MatrixF::identity(2);
  g(1, 0) = eps(-2);
  TheoremCertificate c = certify_point(canonicalize(g), u);
  CHECK(c.in_fiber);
  CHECK(c.regular);
  CHECK(c.retractions_regular);
  CHECK(c.part_a_ok);
  CHECK(c.part_b_ok);
  REQUIRE(c.nu_table.size() == 2);
  REQUIRE(c.n_x_table.size() == 2);
  CHECK(c.n_x_table[0].first == "[[1],[2]]|[[2],[1]]");
  CHECK(c.n_x_table[0].second == 2);
  CHECK(c.n_u_table[0].second == 2);
  g(1, 0) = eps(-3);
  CHECK_THROWS_AS(certify_point(canonicalize(g), u), NotInFiber);
}

TEST_CASE("verify_theorem on the GL(2) grid") {
  FiberDatum u(LeviDatum::torus(2), diag({eps(2), -eps(2)}));
  EnumWindow w;
  w.mu_box = {{-2, 2}, {-2, 2}};
  w.exp_range = {-3, 3};
  w.coeff_set = {Rational(0), Rational(1), Rational(-1), Rational(2), Rational(-2)};
  w.sample_count = 50;
  w.seed = 1;
  TheoremReport r = verify_theorem(u, w);
  CHECK(r.summary.violations == 0);
  CHECK(r.summary.regular > 0);
  CHECK(r.summary.non_regular > 0);
  CHECK(r.summary.points == r.certificates.size());
  for (const auto& c : r.certificates) {
    long nx = c.n_x_table[0].second, nu = c.n_u_table[0].second;
    CHECK(nx <= nu);
    CHECK(c.regular == (nx == nu));
  }
  TheoremReport again = verify_theorem(u, w, 2);
  REQUIRE(again.certificates.size() == r.certificates.size());
  for (std::size_t i = 0; i < r.certificates.size(); ++i)
    CHECK(again.certificates[i].point == r.certificates[i].point);
}

TEST_CASE("single block Levi has no adjacent pairs") {
  MatrixF um = companion(monic({-eps(1), FieldElem(0), FieldElem(0)}));
  FiberDatum u(LeviDatum::whole(3), um);
  EnumWindow w;
  w.mu_box = {{-1, 1}, {-1, 1}, {-1, 1}};
  w.exp_range = {-1, 0};
  w.coeff_set = {Rational(0), Rational(1)};
  TheoremReport r = verify_theorem(u, w);
  REQUIRE(!r.certificates.empty());
  for (const auto& c : r.certificates) {
    CHECK(c.n_x_table.empty());
    CHECK(c.nu_table.size() == 1);
    CHECK(c.regular == c.retractions_regular);
  }
}

TEST_CASE("torus points of a split u are non-regular") {
  FiberDatum u = split3();
  Gen g(62);
  for (int t = 0; t < 10; ++t) {
    std::vector<int> mu{g.uniform(-3, 3), g.uniform(-3, 3), g.uniform(-3, 3)};
    TheoremCertificate c = certify_point(torus_point(mu), u);
    for (const auto& [key, v] : c.n_x_table)
      CHECK(v == 0);
    for (const auto& [key, v] : c.n_u_table)
      CHECK(v == 1);
    CHECK_FALSE(c.regular);
    CHECK(c.part_b_ok);
  }
}

TEST_CASE("opposite Borel sum identity on regular points") {
  FiberDatum u = split3();
  EnumWindow w;
  w.mu_box = {{0, 2}, {0, 2}, {0, 2}};
  w.exp_range = {-1, 0};
  w.coeff_set = {Rational(0), Rational(1), Rational(-1), Rational(2), Rational(-2)};
  w.sample_count = 0;
  auto pts = generate_fiber_points(u, all_borels(3), w).points;
  const ParabolicDatum B = BorelDatum::standard(3).parabolic();
  const ParabolicDatum Bbar = BorelDatum::standard(3).opposite().parabolic();
  int regular = 0;
  for (const auto& x : pts) {
    if (!is_regular_point(x, u))
      continue;
    ++regular;
    CoweightM d = levi_nu(retract(x, B)) - levi_nu(retract(x, Bbar));
    std::vector<long> expected(3, 0);
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j) {
        long v = (u.u()(i, i) - u.u()(j, j)).val().value();
        expected[i] += v;
        expected[j] -= v;
      }
    CHECK(d.components == expected);
  }
  CHECK(regular > 0);
}

TEST_CASE("sl2_golden examples") {
  Sl2Report r = sl2_golden({eps(2), eps(2), F("1 + 1*eps^1")}, {eps(-2), eps(-1), eps(5)});
  REQUIRE(r.rows.size() == 9);
  CHECK(r.mismatches == 0);
  auto row = [&](int ci, int ti) { return r.rows[ci * 3 + ti]; };
  CHECK(row(0, 0).member);
  CHECK(row(0, 0).regular);
  CHECK(row(0, 0).n_x == 2);
  CHECK(row(0, 0).n_u == 2);
  CHECK(row(1, 1).member);
  CHECK_FALSE(row(1, 1).regular);
  CHECK(row(1, 1).n_x == 1);
  CHECK(row(2, 2).member);
  CHECK(row(2, 2).regular);
  CHECK(row(2, 2).n_x == 0);
  CHECK(row(2, 2).n_u == 0);
}

TEST_CASE("puiseux expansions") {
  auto roots = puiseux_roots(monic({-eps(1), FieldElem(0)}));
  REQUIRE(roots.size() == 2);
  for (const auto& r : roots) {
    REQUIRE(!r.terms.empty());
    CHECK(r.terms.front().first == 6); // eps^{1/2} in s = eps^{1/12}
    CHECK(std::abs(std::abs(r.terms.front().second) - 1.0L) < 1e-9L);
  }
  auto cube = puiseux_roots(monic({-eps(2), FieldElem(0), FieldElem(0)}));
  REQUIRE(cube.size() == 3);
  for (const auto& r : cube)
    CHECK(r.terms.front().first == 8);
  CHECK_THROWS_AS(puiseux_roots(monic({-eps(-1), FieldElem(0)})), InputError);
  CHECK_THROWS_AS(puiseux_roots(PolyF(std::vector<FieldElem>{FieldElem(1), FieldElem(2)})),
                  InputError);
}

TEST_CASE("puiseux oracle examples") {
  FiberDatum u4 = two_elliptic();
  for (const auto& [P, P2] : adjacent_pairs(u4.levi()))
    CHECK(puiseux_oracle_n_u(u4, P, P2) == Rational(2));
  FiberDatum u3 = split3();
  for (const auto& [P, P2] : adjacent_pairs(u3.levi()))
    CHECK(puiseux_oracle_n_u(u3, P, P2) == Rational(n_u_pair(u3, P, P2)));
  CHECK(puiseux_difference_valuation(PolyF::linear(eps(1)), PolyF::linear(eps(1, 2))) ==
        Rational(1));
  // Roots agreeing to order eps^3 are separated at the default depth.
  CHECK(puiseux_difference_valuation(PolyF::linear(eps(1)), PolyF::linear(eps(1) + eps(3))) ==
        Rational(3));
  PuiseuxOptions shallow;
  shallow.depth = 2;
  CHECK_THROWS_AS(puiseux_difference_valuation(PolyF::linear(eps(1)),
                                               PolyF::linear(eps(1) + eps(3)), shallow),
                  PrecisionExhausted);
}
