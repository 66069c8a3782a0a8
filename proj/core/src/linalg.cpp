#include "affgrass/matrix.hpp"

#include <optional>
#include <sstream>

namespace affgrass {

namespace {

template <class K>
K sylvester_resultant(const Polynomial<K>& p, const Polynomial<K>& q) {
  if (p.is_zero() || q.is_zero())
    throw ZeroPolynomial("resultant of the zero polynomial");
  const int m = p.degree(), n = q.degree();
  if (m + n == 0)
    return K(1);
  Matrix<K> s(m + n);
  for (int r = 0; r < n; ++r)
    for (int k = 0; k <= m; ++k)
      s(r, r + k) = p.coeff(m - k);
  for (int r = 0; r < m; ++r)
    for (int k = 0; k <= n; ++k)
      s(n + r, r + k) = q.coeff(n - k);
  return det(std::move(s));
}

// Rank-revealing reduction of the columns in cols; returns a null vector
// whose last entry is 1 when the last column depends on the earlier ones.
std::optional<std::vector<Rational>>
dependency_on_last(const std::vector<std::vector<Rational>>& cols) {
  const int k = static_cast<int>(cols.size());
  const int rows = static_cast<int>(cols[0].size());
  // Augmented system: sum_{j<k-1} x_j col_j = -col_{k-1}.
  std::vector<std::vector<Rational>> a(rows, std::vector<Rational>(k));
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < k; ++j)
      a[i][j] = j + 1 < k ? cols[j][i] : Rational(-cols[j][i]);
  std::vector<int> pivot_col;
  int r = 0;
  for (int c = 0; c + 1 < k && r < rows; ++c) {
    int p = r;
    while (p < rows && is_zero(a[p][c]))
      ++p;
    if (p == rows)
      continue;
    std::swap(a[p], a[r]);
    Rational inv = 1 / a[r][c];
    for (int j = 0; j < k; ++j)
      a[r][j] *= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || is_zero(a[i][c]))
        continue;
      Rational f = a[i][c];
      for (int j = 0; j < k; ++j)
        a[i][j] -= f * a[r][j];
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (int i = r; i < rows; ++i)
    if (!is_zero(a[i][k - 1]))
      return std::nullopt;
  std::vector<Rational> x(k, Rational(0));
  x[k - 1] = 1;
  for (int i = 0; i < r; ++i)
    x[pivot_col[i]] = a[i][k - 1];
  return x;
}

} // namespace

FieldElem resultant(const PolyF& p, const PolyF& q) { return sylvester_resultant(p, q); }
Rational resultant(const PolyQ& p, const PolyQ& q) { return sylvester_resultant(p, q); }

PolyQ minpoly(const MatrixQ& m) {
  const int n = m.size();
  std::vector<std::vector<Rational>> cols;
  MatrixQ power = MatrixQ::identity(n);
  for (int k = 0; k <= n; ++k) {
    cols.push_back(power.entries());
    if (k > 0) {
      if (auto x = dependency_on_last(cols))
        return PolyQ(std::move(*x));
    }
    power = power * m;
  }
  // Cayley-Hamilton guarantees a dependency by k = n.
  throw InvariantViolation("minpoly: no dependency found");
}

std::vector<PolyQ> frobenius_form(const MatrixQ& m) {
  const int n = m.size();
  std::vector<PolyQ> a(static_cast<std::size_t>(n) * n);
  auto at = [&](int i, int j) -> PolyQ& { return a[static_cast<std::size_t>(i) * n + j]; };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      at(i, j) = PolyQ(Rational(-m(i, j)));
  for (int i = 0; i < n; ++i)
    at(i, i) += PolyQ::lambda_power(1);

  for (int t = 0; t < n; ++t) {
    for (;;) {
      int bi = -1, bj = -1;
      for (int i = t; i < n; ++i)
        for (int j = t; j < n; ++j)
          if (!at(i, j).is_zero() &&
              (bi < 0 || at(i, j).degree() < at(bi, bj).degree())) {
            bi = i;
            bj = j;
          }
      if (bi < 0)
        break;
      if (bi != t)
        for (int j = 0; j < n; ++j)
          std::swap(at(t, j), at(bi, j));
      if (bj != t)
        for (int i = 0; i < n; ++i)
          std::swap(at(i, t), at(i, bj));

      bool reduced_fully = true;
      for (int i = t + 1; i < n; ++i) {
        if (at(i, t).is_zero())
          continue;
        auto [q, r] = PolyQ::divmod(at(i, t), at(t, t));
        for (int j = t; j < n; ++j)
          at(i, j) -= q * at(t, j);
        reduced_fully = reduced_fully && r.is_zero();
      }
      for (int j = t + 1; j < n; ++j) {
        if (at(t, j).is_zero())
          continue;
        auto [q, r] = PolyQ::divmod(at(t, j), at(t, t));
        for (int i = t; i < n; ++i)
          at(i, j) -= q * at(i, t);
        reduced_fully = reduced_fully && r.is_zero();
      }
      if (!reduced_fully)
        continue;
      int bad = -1;
      for (int i = t + 1; i < n && bad < 0; ++i)
        for (int j = t + 1; j < n; ++j)
          if (!PolyQ::divmod(at(i, j), at(t, t)).second.is_zero()) {
            bad = i;
            break;
          }
      if (bad < 0)
        break;
      for (int j = t; j < n; ++j)
        at(t, j) += at(bad, j);
    }
  }
  std::vector<PolyQ> factors;
  for (int t = 0; t < n; ++t) {
    PolyQ d = at(t, t).monic();
    if (d.degree() >= 1)
      factors.push_back(std::move(d));
  }
  return factors;
}

MatrixQ residue(const MatrixF& m) {
  MatrixQ r(m.size());
  for (int i = 0; i < m.size(); ++i)
    for (int j = 0; j < m.size(); ++j)
      r(i, j) = m(i, j).residue();
  return r;
}

bool entries_in_O(const MatrixF& m) {
  for (const auto& e : m.entries())
    if (!e.in_O())
      return false;
  return true;
}

Valuation min_valuation(const MatrixF& m) {
  Valuation v = Valuation::infinity();
  for (const auto& e : m.entries())
    v = std::min(v, e.val());
  return v;
}

template <class K>
std::string to_text(const Polynomial<K>& p) {
  if (p.is_zero())
    return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = p.degree(); k >= 0; --k) {
    const K c = p.coeff(k);
    if (is_zero(c))
      continue;
    if (!first)
      os << " + ";
    first = false;
    os << "(" << c << ")";
    if (k > 0)
      os << "*lambda^" << k;
  }
  return os.str();
}

template std::string to_text(const PolyQ&);
template std::string to_text(const PolyF&);

} // namespace affgrass
