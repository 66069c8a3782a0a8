#pragma once

#include "affgrass/grassmann.hpp"
#include "affgrass/rootcomb.hpp"

namespace affgrass {

// g = n_part * m_part * k_part with n_part in N(F), m_part in M(F) and
// k_part in GL(n, O), for P = MN.
struct IwasawaFactors {
  MatrixF n_part;
  MatrixF m_part;
  MatrixF k_part;
};

// Column elimination in the coordinates listed by P.flattened(), working
// from the last block row upwards; pivots have least valuation with the
// lowest column index on ties. Row stripes already zero left of their
// diagonal block are kept, so g in P(F) gives k_part = 1. Throws
// SingularMatrix.
IwasawaFactors iwasawa_factor(const MatrixF& g, const ParabolicDatum& P);

// r_P on any representative g of a point; the result does not depend on the
// representative.
LeviPoint retract(const MatrixF& g, const ParabolicDatum& P);
inline LeviPoint retract(const GrassPoint& x, const ParabolicDatum& P) {
  return retract(x.rep(), P);
}

// r^L_{P_L} on a point y of X_L, where P's Levi refines y.levi; applied
// block by block of L.
LeviPoint retract(const LeviPoint& y, const ParabolicDatum& P);

// n(x,P,P2) from precomputed nu_M(x_P) and nu_M(x_P2). Throws NotAdjacent,
// or ProportionalityViolation if the difference is not a non-negative
// multiple of beta(P, P2).
long n_pair_from_nu(const CoweightM& nu_P, const CoweightM& nu_P2,
                    const ParabolicDatum& P, const ParabolicDatum& P2);

long n_pair(const MatrixF& g, const ParabolicDatum& P, const ParabolicDatum& P2);
inline long n_pair(const GrassPoint& x, const ParabolicDatum& P, const ParabolicDatum& P2) {
  return n_pair(x.rep(), P, P2);
}

} // namespace affgrass
