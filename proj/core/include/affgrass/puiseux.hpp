#pragma once

#include "affgrass/polynomial.hpp"
#include "affgrass/rootcomb.hpp"
#include "affgrass/springer.hpp"

#include <complex>
#include <utility>
#include <vector>

namespace affgrass {

// Newton-Puiseux expansions of the roots of a monic polynomial over O, in
// the parameter s = eps^{1/ramification}. Exponents are exact integers in s;
// coefficients are complex long doubles.
struct PuiseuxOptions {
  int ramification = 12; // lcm(1..4): enough for blocks of size <= 4
  int depth = 12;        // expansions are kept up to eps^depth
  long double tolerance = 1e-9L;
};

struct PuiseuxRoot {
  std::vector<std::pair<int, std::complex<long double>>> terms; // increasing s-exponent
  int precision = 0; // root is known modulo s^precision
};

// Throws InputError if p is not monic with coefficients in O, and
// PrecisionExhausted if a Newton polygon slope needs more ramification.
std::vector<PuiseuxRoot> puiseux_roots(const PolyF& p, const PuiseuxOptions& opt = {});

// Sum over root pairs (r of p, r' of q) of the valuation of r - r', as an
// exact rational. Throws PrecisionExhausted when two expansions cannot be
// separated at the configured depth.
Rational puiseux_difference_valuation(const PolyF& p, const PolyF& q,
                                      const PuiseuxOptions& opt = {});

// Test oracle for n_u_pair built from root expansions instead of the
// resultant. Requires adjacent P, P2.
Rational puiseux_oracle_n_u(const FiberDatum& u, const ParabolicDatum& P,
                            const ParabolicDatum& P2, const PuiseuxOptions& opt = {});

} // namespace affgrass
