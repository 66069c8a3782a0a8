#include "affgrass/iwasawa.hpp"

#include <algorithm>
#include <numeric>

namespace affgrass {

namespace {

// Right GL(n,O) column reduction of g, written in the coordinates perm, to
// a block upper-triangular matrix for the block sizes in sizes. Row stripes
// are handled from the last block up; a stripe already zero left of its
// diagonal block is left alone, otherwise its rows are triangularized.
MatrixF block_upper_form(const MatrixF& g, const std::vector<int>& perm,
                         const std::vector<int>& sizes) {
  const int n = g.size();
  MatrixF h(n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      h(a, b) = g(perm[a], perm[b]);
  int end = n;
  for (auto it = sizes.rbegin(); it != sizes.rend(); ++it) {
    const int start = end - *it;
    bool reduced = true;
    for (int r = start; r < end && reduced; ++r)
      for (int c = 0; c < start && reduced; ++c)
        reduced = h(r, c).is_zero();
    if (reduced) {
      std::vector<int> idx(*it);
      std::iota(idx.begin(), idx.end(), start);
      if (det(h.submatrix(idx)).is_zero())
        throw SingularMatrix("iwasawa_factor: matrix is singular");
    } else {
      for (int r = end - 1; r >= start; --r) {
        int piv = -1;
        for (int c = 0; c <= r; ++c) {
          if (h(r, c).is_zero())
            continue;
          if (piv < 0 || h(r, c).val() < h(r, piv).val())
            piv = c;
        }
        if (piv < 0)
          throw SingularMatrix("iwasawa_factor: matrix is singular");
        h.swap_columns(r, piv);
        const FieldElem inv = h(r, r).inverse();
        for (int c = 0; c < r; ++c) {
          if (h(r, c).is_zero())
            continue;
          const FieldElem f = h(r, c) * inv;
          for (int i = 0; i < r; ++i)
            if (!h(i, r).is_zero())
              h(i, c) -= f * h(i, r);
          h(r, c) = FieldElem();
        }
      }
    }
    end = start;
  }
  return h;
}

std::vector<int> block_sizes(const ParabolicDatum& P) {
  std::vector<int> sizes;
  for (const Block& b : P.order())
    sizes.push_back(static_cast<int>(b.size()));
  return sizes;
}

// Start offset of each block of P in flattened coordinates.
std::vector<int> block_offsets(const ParabolicDatum& P) {
  std::vector<int> off;
  int s = 0;
  for (const Block& b : P.order()) {
    off.push_back(s);
    s += static_cast<int>(b.size());
  }
  return off;
}

} // namespace

IwasawaFactors iwasawa_factor(const MatrixF& g, const ParabolicDatum& P) {
  const int n = g.size();
  const std::vector<int> perm = P.flattened();
  const MatrixF h = block_upper_form(g, perm, block_sizes(P));
  MatrixF p(n), m(n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      p(perm[a], perm[b]) = h(a, b);
      if (P.position_of(perm[a]) == P.position_of(perm[b]))
        m(perm[a], perm[b]) = h(a, b);
    }
  IwasawaFactors f;
  f.n_part = p * inverse(m);
  f.k_part = inverse(p) * g;
  f.m_part = std::move(m);
  return f;
}

LeviPoint retract(const MatrixF& g, const ParabolicDatum& P) {
  const MatrixF h = block_upper_form(g, P.flattened(), block_sizes(P));
  const std::vector<int> off = block_offsets(P);
  const LeviDatum& levi = P.levi();
  LeviPoint xm{levi, std::vector<GrassPoint>(levi.rank())};
  for (std::size_t k = 0; k < P.order().size(); ++k) {
    const Block& b = P.order()[k];
    std::vector<int> idx(b.size());
    for (std::size_t i = 0; i < b.size(); ++i)
      idx[i] = off[k] + static_cast<int>(i);
    xm.points[levi.index_of(b)] = canonicalize(h.submatrix(idx));
  }
  return xm;
}

LeviPoint retract(const LeviPoint& y, const ParabolicDatum& P) {
  const LeviDatum& target = P.levi();
  LeviPoint out{target, std::vector<GrassPoint>(target.rank())};
  for (int kL = 0; kL < y.levi.rank(); ++kL) {
    const Block& Lb = y.levi.blocks()[kL];
    const ParabolicDatum local = restrict_to_block(P, Lb);
    const LeviPoint part = retract(y.points[kL], local);
    for (int j = 0; j < part.levi.rank(); ++j) {
      Block global;
      for (int i : part.levi.blocks()[j])
        global.push_back(Lb[i]);
      out.points[target.index_of(global)] = part.points[j];
    }
  }
  return out;
}

long n_pair_from_nu(const CoweightM& nu_P, const CoweightM& nu_P2,
                    const ParabolicDatum& P, const ParabolicDatum& P2) {
  const CoweightM b = beta(P, P2);
  const CoweightM d = nu_P - nu_P2;
  long n = 0;
  for (std::size_t k = 0; k < b.components.size(); ++k)
    if (b.components[k] == 1)
      n = d.components[k];
  for (std::size_t k = 0; k < b.components.size(); ++k)
    if (d.components[k] != n * b.components[k])
      throw ProportionalityViolation("nu_M(x_P) - nu_M(x_P') is not proportional to beta for " +
                                     pair_key(P, P2));
  if (n < 0)
    throw ProportionalityViolation("negative n(x,P,P') for " + pair_key(P, P2));
  return n;
}

long n_pair(const MatrixF& g, const ParabolicDatum& P, const ParabolicDatum& P2) {
  if (!adjacent(P, P2))
    throw NotAdjacent("n_pair: parabolics are not adjacent: " + pair_key(P, P2));
  return n_pair_from_nu(levi_nu(retract(g, P)), levi_nu(retract(g, P2)), P, P2);
}

} // namespace affgrass
