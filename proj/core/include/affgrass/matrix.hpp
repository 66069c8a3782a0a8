#pragma once

#include "affgrass/error.hpp"
#include "affgrass/field_elem.hpp"
#include "affgrass/polynomial.hpp"
#include "affgrass/rational.hpp"

#include <cassert>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

namespace affgrass {

// Dense square matrix over a field K, row-major.
template <class K>
class Matrix {
public:
  Matrix() = default;
  explicit Matrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * n, K(0)) {}
  Matrix(std::initializer_list<std::initializer_list<K>> rows)
      : n_(static_cast<int>(rows.size())) {
    a_.reserve(static_cast<std::size_t>(n_) * n_);
    for (const auto& r : rows) {
      assert(static_cast<int>(r.size()) == n_);
      a_.insert(a_.end(), r.begin(), r.end());
    }
  }

  static Matrix identity(int n) {
    Matrix m(n);
    for (int i = 0; i < n; ++i)
      m(i, i) = K(1);
    return m;
  }
  static Matrix diagonal(std::span<const K> d) {
    Matrix m(static_cast<int>(d.size()));
    for (int i = 0; i < m.n_; ++i)
      m(i, i) = d[i];
    return m;
  }

  int size() const { return n_; }
  K& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * n_ + j]; }
  const K& operator()(int i, int j) const {
    return a_[static_cast<std::size_t>(i) * n_ + j];
  }

  // Rows and columns restricted to idx, in the given order.
  Matrix submatrix(std::span<const int> idx) const {
    Matrix m(static_cast<int>(idx.size()));
    for (int i = 0; i < m.n_; ++i)
      for (int j = 0; j < m.n_; ++j)
        m(i, j) = (*this)(idx[i], idx[j]);
    return m;
  }

  void swap_columns(int a, int b) {
    if (a == b)
      return;
    for (int i = 0; i < n_; ++i)
      std::swap((*this)(i, a), (*this)(i, b));
  }
  void swap_rows(int a, int b) {
    if (a == b)
      return;
    for (int j = 0; j < n_; ++j)
      std::swap((*this)(a, j), (*this)(b, j));
  }

  friend Matrix operator*(const Matrix& x, const Matrix& y) {
    assert(x.n_ == y.n_);
    Matrix m(x.n_);
    for (int i = 0; i < x.n_; ++i)
      for (int k = 0; k < x.n_; ++k) {
        const K& xik = x(i, k);
        if (affgrass::is_zero(xik))
          continue;
        for (int j = 0; j < x.n_; ++j)
          if (!affgrass::is_zero(y(k, j)))
            m(i, j) += K(xik * y(k, j));
      }
    return m;
  }
  friend Matrix operator+(Matrix x, const Matrix& y) {
    for (std::size_t k = 0; k < x.a_.size(); ++k)
      x.a_[k] += y.a_[k];
    return x;
  }
  friend Matrix operator-(Matrix x, const Matrix& y) {
    for (std::size_t k = 0; k < x.a_.size(); ++k)
      x.a_[k] -= y.a_[k];
    return x;
  }
  friend Matrix operator*(const K& c, Matrix x) {
    for (auto& e : x.a_)
      e = K(c * e);
    return x;
  }
  friend bool operator==(const Matrix& x, const Matrix& y) {
    return x.n_ == y.n_ && x.a_ == y.a_;
  }

  const std::vector<K>& entries() const { return a_; }

private:
  int n_ = 0;
  std::vector<K> a_;
};

using MatrixF = Matrix<FieldElem>;
using MatrixQ = Matrix<Rational>;

// Bareiss fraction-free elimination with row pivoting.
template <class K>
K det(Matrix<K> m) {
  const int n = m.size();
  if (n == 0)
    return K(1);
  bool negate = false;
  K prev(1);
  for (int k = 0; k < n - 1; ++k) {
    if (is_zero(m(k, k))) {
      int p = k + 1;
      while (p < n && is_zero(m(p, k)))
        ++p;
      if (p == n)
        return K(0);
      m.swap_rows(k, p);
      negate = !negate;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        K v = K(m(i, j) * m(k, k)) - K(m(i, k) * m(k, j));
        m(i, j) = K(v / prev);
      }
      m(i, k) = K(0);
    }
    prev = m(k, k);
  }
  K d = m(n - 1, n - 1);
  return negate ? K(-d) : d;
}

// Gauss-Jordan; throws SingularMatrix.
template <class K>
Matrix<K> inverse(Matrix<K> m) {
  const int n = m.size();
  Matrix<K> inv = Matrix<K>::identity(n);
  for (int c = 0; c < n; ++c) {
    int p = c;
    while (p < n && is_zero(m(p, c)))
      ++p;
    if (p == n)
      throw SingularMatrix("matrix is singular");
    m.swap_rows(c, p);
    inv.swap_rows(c, p);
    const K piv_inv = K(K(1) / m(c, c));
    for (int j = 0; j < n; ++j) {
      m(c, j) = K(m(c, j) * piv_inv);
      inv(c, j) = K(inv(c, j) * piv_inv);
    }
    for (int i = 0; i < n; ++i) {
      if (i == c || is_zero(m(i, c)))
        continue;
      const K f = m(i, c);
      for (int j = 0; j < n; ++j) {
        if (!is_zero(m(c, j)))
          m(i, j) -= K(f * m(c, j));
        if (!is_zero(inv(c, j)))
          inv(i, j) -= K(f * inv(c, j));
      }
    }
  }
  return inv;
}

// det(lambda*I - m), monic of degree n, by Faddeev-LeVerrier (char 0).
template <class K>
Polynomial<K> charpoly(const Matrix<K>& m) {
  const int n = m.size();
  std::vector<K> c(n + 1, K(0));
  c[n] = K(1);
  Matrix<K> acc(n); // M_k
  for (int k = 1; k <= n; ++k) {
    Matrix<K> next = m * acc;
    for (int i = 0; i < n; ++i)
      next(i, i) += c[n - k + 1];
    acc = std::move(next);
    Matrix<K> am = m * acc;
    K trace(0);
    for (int i = 0; i < n; ++i)
      trace += am(i, i);
    c[n - k] = K(K(-trace) / K(static_cast<long>(k)));
  }
  return Polynomial<K>(std::move(c));
}

// Companion matrix of a monic polynomial: ones on the subdiagonal and the
// negated coefficients in the last column.
template <class K>
Matrix<K> companion(const Polynomial<K>& p) {
  const int n = p.degree();
  assert(n >= 1);
  Polynomial<K> q = p.monic();
  Matrix<K> m(n);
  for (int i = 1; i < n; ++i)
    m(i, i - 1) = K(1);
  for (int i = 0; i < n; ++i)
    m(i, n - 1) = K(-q.coeff(i));
  return m;
}

// Sylvester-matrix determinant; throws ZeroPolynomial.
FieldElem resultant(const PolyF& p, const PolyF& q);
Rational resultant(const PolyQ& p, const PolyQ& q);

// Monic minimal polynomial via the first linear dependency among
// I, m, m^2, ...
PolyQ minpoly(const MatrixQ& m);

// Invariant factors d_1 | d_2 | ... | d_k (monic, non-constant) with product
// the characteristic polynomial, from the Smith form of lambda*I - m.
std::vector<PolyQ> frobenius_form(const MatrixQ& m);

// Entrywise residue; every entry must lie in O.
MatrixQ residue(const MatrixF& m);

// True when every entry has non-negative valuation.
bool entries_in_O(const MatrixF& m);

// Minimum entry valuation (infinity for the zero matrix).
Valuation min_valuation(const MatrixF& m);

} // namespace affgrass
