#include "affgrass/serialize.hpp"
#include "affgrass/springer.hpp"
#include "iwasawa_support.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace affgrass;
using namespace affgrass::test;

TEST_CASE("field elements round-trip through JSON") {
  Gen g(11);
  for (int k = 0; k < 200; ++k) {
    const FieldElem a = g.laurent(-4, 4, 3);
    const json j = to_json(a);
    CHECK(field_elem_from_json(json::parse(j.dump())) == a);
  }
  CHECK(field_elem_from_json(json(-3)) == FieldElem(-3));
  CHECK_THROWS_AS(field_elem_from_json(json(1.5)), InputError);
}

TEST_CASE("points, Levi points and data round-trip") {
  Gen g(12);
  for (int n = 1; n <= 4; ++n) {
    for (int k = 0; k < 20; ++k) {
      const GrassPoint x = canonicalize(g.point_rep(n, -2, 2, 2));
      CHECK(grass_point_from_json(json::parse(to_json(x).dump())) == x);

      const ParabolicDatum P = random_parabolic(g, random_levi(g, n));
      CHECK(parabolic_from_json(to_json(P), n) == P);
      CHECK(levi_from_json(to_json(P.levi()), n) == P.levi());
      const LeviPoint y = retract(x.rep(), P);
      CHECK(levi_point_from_json(json::parse(to_json(y).dump())) == y);

      const BorelDatum B = random_borel(g, n);
      CHECK(borel_from_json(to_json(B), n) == B);
    }
  }
}

TEST_CASE("a Levi point keeps its pairing of blocks and points") {
  const LeviPoint y{levi(3, {{3}, {1, 2}}),
                    {canonicalize(diag({eps(1), eps(0)})), canonicalize(diag({eps(2)}))}};
  const json j = {{"blocks", {{3}, {1, 2}}},
                  {"points", {to_json(canonicalize(diag({eps(2)}))),
                              to_json(canonicalize(diag({eps(1), eps(0)})))}}};
  const LeviPoint z = levi_point_from_json(j);
  CHECK(z.levi == y.levi);
  CHECK(z.points[z.levi.index_of({2})].rep() == canonicalize(diag({eps(2)})).rep());
}

TEST_CASE("windows parse shared and per-coordinate boxes") {
  const json shared = {{"mu_box", {-1, 2}}, {"exp_range", {-1, 1}},
                       {"coeff_set", {0, 1, "1/2"}}, {"seed", 5}};
  const EnumWindow w = window_from_json(shared, 3);
  REQUIRE(w.mu_box.size() == 3);
  CHECK(w.mu_box[2] == std::pair<int, int>(-1, 2));
  CHECK(w.coeff_set.size() == 3);
  CHECK(w.coeff_set[2] == Rational(1, 2));
  CHECK(w.sample_count == 0);
  const EnumWindow back = window_from_json(to_json(w), 3);
  CHECK(back.mu_box == w.mu_box);
  CHECK(back.coeff_set == w.coeff_set);
  CHECK(back.seed == 5);

  const json per = {{"mu_box", {{0, 1}, {0, 0}}}, {"exp_range", {0, 0}},
                    {"coeff_set", {0}}, {"seed", 1}, {"sample_count", 3}};
  CHECK(window_from_json(per, 2).mu_box[1] == std::pair<int, int>(0, 0));
  CHECK_THROWS_AS(window_from_json(per, 3), InputError);
  json no_seed = shared;
  no_seed.erase("seed");
  CHECK_THROWS_AS(window_from_json(no_seed, 3), InputError);
}

TEST_CASE("malformed input is rejected with a location") {
  const json bad_entry = json::parse(R"({"rep": [["1", "0"], ["0", "1 + *eps^2"]]})");
  try {
    grass_point_from_json(bad_entry);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.column() == 5);
    CHECK(std::string(e.what()).find("matrix entry [1][1]") != std::string::npos);
  }
  CHECK_THROWS_AS(grass_point_from_json(json::parse(R"({"rep": [["1", "0"]]})")), InputError);
  CHECK_THROWS_AS(grass_point_from_json(json::parse(R"({"n": 3, "rep": [["1"]]})")), InputError);
  CHECK_THROWS_AS(levi_from_json(json::parse("[[1], [3]]"), 2), InputError);
  CHECK_THROWS_AS(borel_from_json(json{1, 1}, 2), InputError);
  CHECK_THROWS_AS(fiber_datum_from_json(json::object()), InputError);
}
