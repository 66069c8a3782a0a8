#pragma once

#include "affgrass/matrix.hpp"
#include "affgrass/rootcomb.hpp"

#include <span>
#include <vector>

namespace affgrass {

// A point g GL(n,O) of the affine Grassmannian, held in column Hermite
// normal form over O: lower triangular, diagonal entries eps^{d_i}, and
// each entry (i, j) below the diagonal a Laurent polynomial with exponents
// < d_i.
class GrassPoint {
public:
  GrassPoint() = default;

  int n() const { return rep_.size(); }
  const MatrixF& rep() const { return rep_; }
  // The exponents d_i on the diagonal.
  std::vector<int> diagonal_exponents() const;

  friend bool operator==(const GrassPoint& a, const GrassPoint& b) {
    return a.rep_ == b.rep_;
  }
  friend bool operator<(const GrassPoint& a, const GrassPoint& b);

  friend GrassPoint canonicalize(const MatrixF& g);

private:
  explicit GrassPoint(MatrixF rep) : rep_(std::move(rep)) {}
  MatrixF rep_;
};

// Throws SingularMatrix when det(g) = 0.
GrassPoint canonicalize(const MatrixF& g);

// True iff a^{-1} b lies in GL(n, O).
bool same_coset(const MatrixF& a, const MatrixF& b);
inline bool same_coset(const GrassPoint& x, const GrassPoint& y) {
  return same_coset(x.rep(), y.rep());
}

// Entries in O and determinant a unit.
bool in_GL_O(const MatrixF& k);

// val(det) of the representative.
long nu_G(const GrassPoint& x);

// Left translation g . x; throws SingularMatrix.
GrassPoint act(const MatrixF& g, const GrassPoint& x);

// diag(eps^{mu_1}, ..., eps^{mu_n}).
MatrixF torus_element(std::span<const int> mu);
inline GrassPoint torus_point(std::span<const int> mu) {
  return canonicalize(torus_element(mu));
}

// A point of X_M: one GrassPoint per block of levi, in levi.blocks() order,
// each indexed by the sorted elements of its block.
struct LeviPoint {
  LeviDatum levi;
  std::vector<GrassPoint> points;

  friend bool operator==(const LeviPoint&, const LeviPoint&) = default;
};

// Per-block val(det).
CoweightM levi_nu(const LeviPoint& xm);

// The block-diagonal representative in GL(n, F), i.e. X_M -> X.
MatrixF embed(const LeviPoint& xm);

// Canonical LeviPoint of a block-diagonal matrix.
LeviPoint levi_point(const LeviDatum& levi, const MatrixF& block_diagonal);

} // namespace affgrass
