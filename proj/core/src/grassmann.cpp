#include "affgrass/grassmann.hpp"

namespace affgrass {

namespace {

// col_dst -= f * col_src
void column_axpy(MatrixF& g, int dst, int src, const FieldElem& f, int first_row = 0) {
  if (f.is_zero())
    return;
  for (int i = first_row; i < g.size(); ++i)
    if (!g(i, src).is_zero())
      g(i, dst) -= f * g(i, src);
}

} // namespace

std::vector<int> GrassPoint::diagonal_exponents() const {
  std::vector<int> d(n());
  for (int i = 0; i < n(); ++i)
    d[i] = static_cast<int>(rep_(i, i).val().value());
  return d;
}

bool operator<(const GrassPoint& a, const GrassPoint& b) {
  if (a.n() != b.n())
    return a.n() < b.n();
  const auto& x = a.rep_.entries();
  const auto& y = b.rep_.entries();
  for (std::size_t k = 0; k < x.size(); ++k) {
    int c = compare(x[k], y[k]);
    if (c != 0)
      return c < 0;
  }
  return false;
}

GrassPoint canonicalize(const MatrixF& input) {
  MatrixF g = input;
  const int n = g.size();
  // Lower-triangularize with right GL(n,O) column operations: in row r the
  // pivot is the entry of least valuation among columns r..n-1 (lowest
  // index on ties), and it clears the rest of the row.
  for (int r = 0; r < n; ++r) {
    int piv = -1;
    for (int c = r; c < n; ++c) {
      if (g(r, c).is_zero())
        continue;
      if (piv < 0 || g(r, c).val() < g(r, piv).val())
        piv = c;
    }
    if (piv < 0)
      throw SingularMatrix("canonicalize: matrix is singular");
    g.swap_columns(r, piv);
    const FieldElem inv = g(r, r).inverse();
    for (int c = r + 1; c < n; ++c)
      if (!g(r, c).is_zero())
        column_axpy(g, c, r, g(r, c) * inv, r);
  }
  // Scale columns by units so the diagonal is eps^{d_i}.
  std::vector<int> d(n);
  for (int r = 0; r < n; ++r) {
    d[r] = static_cast<int>(g(r, r).val().value());
    const FieldElem unit_inv = FieldElem::eps_power(d[r]) / g(r, r);
    if (!unit_inv.is_one())
      for (int i = r; i < n; ++i)
        if (!g(i, r).is_zero())
          g(i, r) *= unit_inv;
    g(r, r) = FieldElem::eps_power(d[r]);
  }
  // Reduce below-diagonal entries of row i modulo eps^{d_i} O using column
  // i. Column i is zero above row i, so earlier rows are untouched.
  for (int i = 1; i < n; ++i) {
    const FieldElem pivot_inv = FieldElem::eps_power(-d[i]);
    for (int j = 0; j < i; ++j) {
      const FieldElem& e = g(i, j);
      if (e.is_zero())
        continue;
      FieldElem kept = e.truncate_below(d[i]);
      if (kept == e)
        continue;
      FieldElem q = (e - kept) * pivot_inv;
      column_axpy(g, j, i, q, i);
      g(i, j) = kept;
    }
  }
  return GrassPoint(std::move(g));
}

bool in_GL_O(const MatrixF& k) {
  if (!entries_in_O(k))
    return false;
  return det(k).val() == Valuation(0);
}

bool same_coset(const MatrixF& a, const MatrixF& b) {
  if (a.size() != b.size())
    return false;
  return in_GL_O(inverse(a) * b);
}

long nu_G(const GrassPoint& x) {
  long s = 0;
  for (int v : x.diagonal_exponents())
    s += v;
  return s;
}

GrassPoint act(const MatrixF& g, const GrassPoint& x) { return canonicalize(g * x.rep()); }

MatrixF torus_element(std::span<const int> mu) {
  MatrixF m(static_cast<int>(mu.size()));
  for (std::size_t i = 0; i < mu.size(); ++i)
    m(static_cast<int>(i), static_cast<int>(i)) = FieldElem::eps_power(mu[i]);
  return m;
}

CoweightM levi_nu(const LeviPoint& xm) {
  CoweightM c{xm.levi, {}};
  for (const auto& p : xm.points)
    c.components.push_back(nu_G(p));
  return c;
}

MatrixF embed(const LeviPoint& xm) {
  MatrixF m(xm.levi.n());
  for (int k = 0; k < xm.levi.rank(); ++k) {
    const Block& b = xm.levi.blocks()[k];
    const MatrixF& r = xm.points[k].rep();
    for (std::size_t i = 0; i < b.size(); ++i)
      for (std::size_t j = 0; j < b.size(); ++j)
        m(b[i], b[j]) = r(static_cast<int>(i), static_cast<int>(j));
  }
  return m;
}

LeviPoint levi_point(const LeviDatum& levi, const MatrixF& block_diagonal) {
  LeviPoint xm{levi, {}};
  for (const Block& b : levi.blocks())
    xm.points.push_back(canonicalize(block_diagonal.submatrix(b)));
  return xm;
}

} // namespace affgrass
