#pragma once

// Shared fixtures and random generators for the test suites.

#include "affgrass/field_elem.hpp"
#include "affgrass/grassmann.hpp"
#include "affgrass/matrix.hpp"
#include "affgrass/rootcomb.hpp"

#include <algorithm>
#include <initializer_list>
#include <numeric>
#include <random>
#include <string>
#include <vector>

namespace affgrass::test {

inline FieldElem F(const char* text) { return parse_field_elem(text); }
inline FieldElem eps(int k, long c = 1) { return FieldElem::eps_power(k, Rational(c)); }

inline MatrixF M(std::initializer_list<std::initializer_list<const char*>> rows) {
  MatrixF m(static_cast<int>(rows.size()));
  int i = 0;
  for (const auto& r : rows) {
    int j = 0;
    for (const char* e : r)
      m(i, j++) = F(e);
    ++i;
  }
  return m;
}

inline MatrixF diag(std::initializer_list<FieldElem> d) {
  std::vector<FieldElem> v(d);
  return MatrixF::diagonal(v);
}

// 1-based block lists, as in the JSON forms.
inline std::vector<Block> one_based(std::initializer_list<std::initializer_list<int>> blocks) {
  std::vector<Block> out;
  for (const auto& b : blocks) {
    Block blk;
    for (int i : b)
      blk.push_back(i - 1);
    out.push_back(std::move(blk));
  }
  return out;
}

inline ParabolicDatum parabolic(int n, std::initializer_list<std::initializer_list<int>> blocks) {
  return ParabolicDatum(n, one_based(blocks));
}

inline LeviDatum levi(int n, std::initializer_list<std::initializer_list<int>> blocks) {
  return LeviDatum(n, one_based(blocks));
}

inline BorelDatum borel(std::initializer_list<int> order) {
  BorelDatum b;
  for (int i : order)
    b.perm.push_back(i - 1);
  return b;
}

class Gen {
public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  int uniform(int lo, int hi) {
    return lo + static_cast<int>(rng_() % static_cast<std::uint64_t>(hi - lo + 1));
  }
  bool coin() { return uniform(0, 1) == 1; }

  Rational rational(int span = 3) {
    Rational q(uniform(-span, span), uniform(1, 3));
    q.canonicalize();
    return q;
  }
  Rational nonzero_rational(int span = 3) {
    Rational q;
    do
      q = rational(span);
    while (is_zero(q));
    return q;
  }

  EpsPoly poly(int max_degree) {
    std::vector<Rational> c;
    for (int k = 0; k <= max_degree; ++k)
      c.push_back(coin() ? rational() : Rational(0));
    return EpsPoly(std::move(c));
  }

  // Random element of O, sometimes with a non-polynomial unit denominator.
  FieldElem in_O() {
    FieldElem a(poly(2));
    if (uniform(0, 3) == 0)
      a /= FieldElem(EpsPoly(std::vector<Rational>{Rational(1), rational()}));
    return a;
  }

  FieldElem unit_of_O() {
    FieldElem a = in_O();
    while (!a.is_unit())
      a += FieldElem(nonzero_rational());
    return a;
  }

  // Laurent polynomial with exponents in [lo, hi], occasionally divided by
  // a unit of O.
  FieldElem laurent(int lo, int hi, int max_terms = 2) {
    FieldElem a;
    const int terms = uniform(1, max_terms);
    for (int k = 0; k < terms; ++k)
      a += FieldElem::eps_power(uniform(lo, hi), rational());
    if (uniform(0, 5) == 0)
      a /= unit_of_O();
    return a;
  }

  FieldElem any(int lo = -3, int hi = 3) {
    FieldElem a = laurent(lo, hi, 3);
    if (uniform(0, 3) == 0)
      a /= FieldElem(EpsPoly(std::vector<Rational>{nonzero_rational(), Rational(0), rational()}));
    return a;
  }

  // Element of GL(n, O): permutation, unit diagonal and a few elementary
  // column operations with entries in O.
  MatrixF gl_O(int n, int ops = 3) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    for (int i = n - 1; i > 0; --i)
      std::swap(perm[i], perm[uniform(0, i)]);
    MatrixF k(n);
    for (int i = 0; i < n; ++i)
      k(i, perm[i]) = unit_of_O();
    for (int s = 0; s < ops; ++s) {
      int i = uniform(0, n - 1), j = uniform(0, n - 1);
      if (i == j)
        continue;
      MatrixF e = MatrixF::identity(n);
      e(i, j) = in_O();
      k = k * e;
    }
    return k;
  }

  // Representative n(t) eps^mu with lower and upper unipotent parts.
  MatrixF point_rep(int n, int exp_lo = -3, int exp_hi = 3, int mu_span = 2) {
    MatrixF lower = MatrixF::identity(n), upper = MatrixF::identity(n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (i > j && coin())
          lower(i, j) = laurent(exp_lo, exp_hi);
        if (i < j && uniform(0, 2) == 0)
          upper(i, j) = laurent(exp_lo, exp_hi, 1);
      }
    std::vector<int> mu(n);
    for (auto& m : mu)
      m = uniform(-mu_span, mu_span);
    return upper * lower * torus_element(mu);
  }

  std::mt19937_64& engine() { return rng_; }

private:
  std::mt19937_64 rng_;
};

} // namespace affgrass::test

namespace affgrass::test {

// Block-diagonal matrix with the given square blocks along the diagonal, in
// order.
inline MatrixF block_diag(std::initializer_list<MatrixF> blocks) {
  int n = 0;
  for (const auto& b : blocks)
    n += b.size();
  MatrixF m(n);
  int off = 0;
  for (const auto& b : blocks) {
    for (int i = 0; i < b.size(); ++i)
      for (int j = 0; j < b.size(); ++j)
        m(off + i, off + j) = b(i, j);
    off += b.size();
  }
  return m;
}

// Contiguous blocks of the given sizes.
inline LeviDatum contiguous_levi(std::initializer_list<int> sizes) {
  std::vector<Block> blocks;
  int off = 0;
  for (int s : sizes) {
    Block b(s);
    std::iota(b.begin(), b.end(), off);
    blocks.push_back(b);
    off += s;
  }
  return LeviDatum(off, blocks);
}

// Monic polynomial in lambda from ascending lower coefficients, e.g.
// monic({a0, a1}) = lambda^2 + a1 lambda + a0.
inline PolyF monic(std::initializer_list<FieldElem> lower) {
  std::vector<FieldElem> c(lower);
  c.emplace_back(1);
  return PolyF(std::move(c));
}

} // namespace affgrass::test
