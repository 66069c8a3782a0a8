#pragma once

#include "affgrass/grassmann.hpp"
#include "affgrass/rootcomb.hpp"
#include "affgrass/springer.hpp"

#include <string>
#include <utility>
#include <vector>

namespace affgrass {

// n(u,P,P2): valuation of the resultant of the characteristic polynomials of
// the two swapped blocks, i.e. the sum of val(alpha(u)) over all roots of
// T in n intersect nbar'. Symmetric in P, P2. Throws NotAdjacent, or
// CoprimalityViolation when the resultant vanishes.
long n_u_pair(const FiberDatum& u, const ParabolicDatum& P, const ParabolicDatum& P2);

struct TheoremCertificate {
  GrassPoint point;
  std::vector<std::pair<ParabolicDatum, CoweightM>> nu_table; // parabolics() order
  std::vector<std::pair<std::string, long>> n_x_table;        // adjacent_pairs() order
  std::vector<std::pair<std::string, long>> n_u_table;
  bool in_fiber = false;
  bool regular = false;
  bool retractions_regular = false;
  bool part_a_ok = false;
  bool part_b_ok = false;
};

// Fills every field for a point of X^u. Regularity of x and the right-hand
// side of the criterion are computed independently. Throws NotInFiber, or
// TheoremViolation when part (a) or (b) fails.
TheoremCertificate certify_point(const GrassPoint& x, const FiberDatum& u);

struct TheoremSummary {
  std::size_t candidates = 0;
  std::size_t points = 0;
  std::size_t regular = 0;
  std::size_t non_regular = 0;
  std::size_t violations = 0;
  double wall_ms = 0.0;
};

struct TheoremReport {
  std::vector<TheoremCertificate> certificates; // in canonical point order
  TheoremSummary summary;
};

TheoremReport verify_points(const FiberDatum& u, const std::vector<GrassPoint>& points,
                            int parallel = 1);

// Generates fiber points over the Iwasawa charts of all n! Borels and
// certifies each one.
TheoremReport verify_theorem(const FiberDatum& u, const EnumWindow& w, int parallel = 1);

struct Sl2Row {
  FieldElem c;
  FieldElem t;
  bool member = false;
  bool regular = false;
  long n_x = 0;
  long n_u = 0;
  bool expected_member = false;
  bool expected_regular = false;
  long expected_n_x = 0;
  long expected_n_u = 0;

  bool matches() const {
    return member == expected_member && regular == expected_regular &&
           n_x == expected_n_x && n_u == expected_n_u;
  }
};

struct Sl2Report {
  std::vector<Sl2Row> rows;
  std::size_t mismatches = 0;
};

// For u = diag(c, -c) and x = [[1,0],[t,1]] G(O), compares the pipeline
// with the closed forms: membership iff val(ct) >= 0, regularity iff
// val(ct) = 0 or (val c = 0 and val t >= 0), n(x,B,Bbar) = max(0, -val t),
// n(u,B,Bbar) = val c. Each c must be nonzero with val(c) >= 0.
Sl2Report sl2_golden(const std::vector<FieldElem>& c_vals, const std::vector<FieldElem>& t_vals);

} // namespace affgrass
