#pragma once

#include "affgrass/grassmann.hpp"
#include "affgrass/iwasawa.hpp"
#include "affgrass/rootcomb.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace affgrass {

// An integral regular semisimple u in m(F), normalized to have entries in
// O, block diagonal for levi, with squarefree characteristic polynomial and
// pairwise coprime block characteristic polynomials.
class FiberDatum {
public:
  // Throws InvalidFiberDatum when the invariants fail.
  FiberDatum(LeviDatum levi, MatrixF u);

  int n() const { return u_.size(); }
  const LeviDatum& levi() const { return levi_; }
  const MatrixF& u() const { return u_; }
  // u restricted to the k-th block of levi.
  const MatrixF& block(int k) const { return blocks_[k]; }
  // Characteristic polynomial of block(k).
  const PolyF& block_charpoly(int k) const { return block_charpolys_[k]; }

private:
  LeviDatum levi_;
  MatrixF u_;
  std::vector<MatrixF> blocks_;
  std::vector<PolyF> block_charpolys_;
};

// Entries of u in O, u block diagonal for levi, charpoly squarefree and
// block charpolys pairwise coprime.
bool is_integral_rss(const MatrixF& u, const LeviDatum& levi);

// g^{-1} u g has all entries in O.
bool in_fiber(const MatrixF& g, const MatrixF& u);
inline bool in_fiber(const GrassPoint& x, const FiberDatum& u) {
  return in_fiber(x.rep(), u.u());
}

// Residue of g^{-1} u g; defined up to GL(n, Q)-conjugacy. Throws NotInFiber.
MatrixQ residue_class(const MatrixF& g, const MatrixF& u);
inline MatrixQ residue_class(const GrassPoint& x, const FiberDatum& u) {
  return residue_class(x.rep(), u.u());
}

// Cyclic matrix test: deg minpoly = n.
bool is_regular(const MatrixQ& m);

// Throws NotInFiber.
bool is_regular_point(const MatrixF& g, const MatrixF& u);
inline bool is_regular_point(const GrassPoint& x, const FiberDatum& u) {
  return is_regular_point(x.rep(), u.u());
}

// retract(x, P), checking that every block lands in the block fiber.
// Throws NotInFiber, LeviMismatch (P not in P(M)), FiberRetractViolation.
LeviPoint retract_fiber(const GrassPoint& x, const FiberDatum& u, const ParabolicDatum& P);

// Blockwise regularity of a point of X^u_M.
bool is_regular_levi_point(const LeviPoint& y, const FiberDatum& u);

// Finite sampling window for fiber exploration.
struct EnumWindow {
  std::vector<std::pair<int, int>> mu_box; // inclusive, one per coordinate
  std::pair<int, int> exp_range{0, 0};     // inclusive
  std::vector<Rational> coeff_set{Rational(0)};
  int sample_count = 0;
  std::uint64_t seed = 0;

  // Throws InputError when intervals are empty or 0 is missing.
  void validate(int n) const;
};

struct FiberSample {
  std::vector<GrassPoint> points; // sorted, distinct
  std::size_t candidates = 0;
};

// Candidates n(t) eps^mu G(O) in Iwasawa coordinates for B. The sweep sets
// each coordinate of n(t) above the diagonal (for B) to 0 or a monomial
// a eps^k, a in coeff_set, k in exp_range, over all mu in mu_box; then
// sample_count random candidates with random rational Laurent polynomial
// coordinates are added. Members of X^u are returned, deduplicated by
// canonical form. parallel = worker thread count.
FiberSample generate_fiber_points(const FiberDatum& u, const BorelDatum& B,
                                  const EnumWindow& w, int parallel = 1);

// The window swept in the Iwasawa coordinates of each Borel in turn. The
// sample_count random candidates are shared out, each drawing its chart
// from the same stream. Returns the union, with candidates summed.
FiberSample generate_fiber_points(const FiberDatum& u, const std::vector<BorelDatum>& borels,
                                  const EnumWindow& w, int parallel = 1);

// The n! Borels containing the diagonal torus, in lexicographic order.
std::vector<BorelDatum> all_borels(int n);

} // namespace affgrass
