#include "affgrass/puiseux.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace affgrass {

namespace {

using C = std::complex<long double>;
using Series = std::vector<C>;
using SeriesPoly = std::vector<Series>; // coefficient of lambda^i

constexpr int kInf = std::numeric_limits<int>::max();

struct Expander {
  int order;      // series length in s
  int target;     // stop once the next exponent reaches this
  long double tol;
  std::vector<PuiseuxRoot> roots;

  int valuation(const Series& a, long double scale) const {
    for (int k = 0; k < order; ++k)
      if (std::abs(a[k]) > tol * scale)
        return k;
    return kInf;
  }

  static long double magnitude(const SeriesPoly& f) {
    long double m = 1;
    for (const auto& a : f)
      for (const auto& c : a)
        m = std::max(m, std::abs(c));
    return m;
  }

  static C eval(const std::vector<C>& p, C z) {
    C acc = 0;
    for (std::size_t k = p.size(); k-- > 0;)
      acc = acc * z + p[k];
    return acc;
  }

  static std::vector<C> derivative(const std::vector<C>& p) {
    std::vector<C> d;
    for (std::size_t k = 1; k < p.size(); ++k)
      d.push_back(p[k] * static_cast<long double>(k));
    return d;
  }

  // Aberth-Ehrlich iteration on a polynomial with nonzero constant term.
  static std::vector<C> poly_roots(std::vector<C> p) {
    const int d = static_cast<int>(p.size()) - 1;
    const C lead = p.back();
    for (auto& c : p)
      c /= lead;
    const std::vector<C> dp = derivative(p);
    long double radius = 0;
    for (int k = 0; k < d; ++k)
      radius = std::max(radius, std::pow(std::abs(p[k]), 1.0L / (d - k)));
    std::vector<C> z(d);
    for (int k = 0; k < d; ++k)
      z[k] = std::polar(radius, 2 * 3.14159265358979323846L * k / d + 0.4L);
    for (int it = 0; it < 2000; ++it) {
      long double moved = 0;
      for (int k = 0; k < d; ++k) {
        const C pv = eval(p, z[k]);
        if (std::abs(pv) == 0)
          continue;
        const C ratio = pv / eval(dp, z[k]);
        C sum = 0;
        for (int j = 0; j < d; ++j)
          if (j != k)
            sum += C(1) / (z[k] - z[j]);
        const C step = ratio / (C(1) - ratio * sum);
        z[k] -= step;
        moved = std::max(moved, std::abs(step));
      }
      if (moved < 1e-30L)
        break;
    }
    return z;
  }

  // Distinct roots with multiplicity; each cluster center is polished as a
  // simple root of the (m-1)-th derivative.
  std::vector<std::pair<C, int>> clustered_roots(const std::vector<C>& p) const {
    std::vector<C> z = poly_roots(p);
    std::vector<std::pair<C, int>> out;
    std::vector<bool> used(z.size(), false);
    const long double cluster_tol = 1e-5L;
    for (std::size_t a = 0; a < z.size(); ++a) {
      if (used[a])
        continue;
      C sum = z[a];
      int m = 1;
      used[a] = true;
      for (std::size_t b = a + 1; b < z.size(); ++b)
        if (!used[b] && std::abs(z[b] - z[a]) < cluster_tol * (1 + std::abs(z[a]))) {
          used[b] = true;
          sum += z[b];
          ++m;
        }
      C c = sum / static_cast<long double>(m);
      std::vector<C> q = p;
      for (int k = 1; k < m; ++k)
        q = derivative(q);
      const std::vector<C> dq = derivative(q);
      for (int it = 0; it < 50; ++it) {
        const C step = eval(q, c) / eval(dq, c);
        if (!std::isfinite(std::abs(step)))
          break;
        c -= step;
        if (std::abs(step) < 1e-30L)
          break;
      }
      out.emplace_back(c, m);
    }
    return out;
  }

  // f(c s^gamma + lambda)
  SeriesPoly shift(const SeriesPoly& f, C c, int gamma) const {
    const int d = static_cast<int>(f.size()) - 1;
    SeriesPoly g(d + 1, Series(order, C(0)));
    for (int i = 0; i <= d; ++i) {
      C cpow = 1;        // c^{i-j}
      long double binom = 1;
      for (int j = i; j >= 0; --j) {
        const int off = gamma * (i - j);
        const C factor = binom * cpow;
        for (int k = 0; k + off < order; ++k)
          g[j][k + off] += factor * f[i][k];
        cpow *= c;
        binom = binom * j / (i - j + 1);
      }
    }
    return g;
  }

  void record(const std::vector<std::pair<int, C>>& prefix, int count, int precision) {
    for (int k = 0; k < count; ++k)
      roots.push_back({prefix, precision});
  }

  // Roots of f with s-valuation > floor, each added to prefix.
  void expand(const SeriesPoly& f, int floor, std::vector<std::pair<int, C>> prefix) {
    const int d = static_cast<int>(f.size()) - 1;
    const long double scale = magnitude(f);
    std::vector<int> v(d + 1);
    for (int i = 0; i <= d; ++i)
      v[i] = valuation(f[i], scale);
    int zeros = 0;
    while (zeros <= d && v[zeros] == kInf)
      ++zeros;
    if (zeros > 0)
      record(prefix, zeros, target);
    // Lower convex hull from (zeros, v[zeros]) to (d, v[d] = 0).
    int i1 = zeros;
    while (i1 < d) {
      int best = -1;
      // Steepest descent: minimize slope (v[i] - v[i1]) / (i - i1).
      for (int i = i1 + 1; i <= d; ++i) {
        if (v[i] == kInf)
          continue;
        if (best < 0 ||
            static_cast<long long>(v[i] - v[i1]) * (best - i1) <=
                static_cast<long long>(v[best] - v[i1]) * (i - i1))
          best = i;
      }
      const int i2 = best;
      const int rise = v[i1] - v[i2];
      if (rise % (i2 - i1) != 0)
        throw PrecisionExhausted("Puiseux: slope needs ramification beyond the configured index");
      const int gamma = rise / (i2 - i1);
      if (gamma > floor) {
        if (gamma >= target) {
          record(prefix, i2 - i1, target);
        } else {
          std::vector<C> edge(i2 - i1 + 1, C(0));
          for (int i = i1; i <= i2; ++i)
            if (v[i] != kInf && v[i] + gamma * i == v[i1] + gamma * i1)
              edge[i - i1] = f[i][v[i]];
          for (const auto& [c, m] : clustered_roots(edge)) {
            auto next = prefix;
            next.emplace_back(gamma, c);
            const std::size_t before = roots.size();
            expand(shift(f, c, gamma), gamma, next);
            if (roots.size() - before != static_cast<std::size_t>(m))
              throw PrecisionExhausted("Puiseux: branch multiplicity mismatch");
          }
        }
      }
      i1 = i2;
    }
  }
};

} // namespace

std::vector<PuiseuxRoot> puiseux_roots(const PolyF& p, const PuiseuxOptions& opt) {
  if (p.degree() < 1 || !p.leading().is_one())
    throw InputError("puiseux_roots: polynomial must be monic of positive degree");
  const int e = opt.ramification;
  const int target = e * opt.depth;
  const int order = 2 * target + e;
  const int eps_terms = (order + e - 1) / e;
  SeriesPoly f(p.degree() + 1, Series(order, C(0)));
  for (int i = 0; i <= p.degree(); ++i) {
    const FieldElem& a = p.coeff(i);
    if (!a.in_O())
      throw InputError("puiseux_roots: coefficient outside O");
    for (int k = 0; k < eps_terms && k * e < order; ++k) {
      const Rational c = a.laurent_coeff(k);
      f[i][k * e] = C(static_cast<long double>(c.get_d()), 0);
    }
  }
  Expander ex{order, target, opt.tolerance, {}};
  ex.expand(f, -1, {});
  if (static_cast<int>(ex.roots.size()) != p.degree())
    throw PrecisionExhausted("Puiseux: lost roots during expansion");
  return ex.roots;
}

Rational puiseux_difference_valuation(const PolyF& p, const PolyF& q, const PuiseuxOptions& opt) {
  const auto rp = puiseux_roots(p, opt);
  const auto rq = puiseux_roots(q, opt);
  long total = 0;
  for (const auto& a : rp)
    for (const auto& b : rq) {
      const int limit = std::min(a.precision, b.precision);
      auto coeff_at = [](const PuiseuxRoot& r, int k) {
        for (const auto& [e, c] : r.terms)
          if (e == k)
            return c;
        return C(0);
      };
      int found = -1;
      for (int k = 0; k < limit && found < 0; ++k)
        if (std::abs(coeff_at(a, k) - coeff_at(b, k)) > 1e-6L)
          found = k;
      if (found < 0)
        throw PrecisionExhausted("Puiseux: roots agree to the configured depth");
      total += found;
    }
  Rational out(total, opt.ramification);
  out.canonicalize();
  return out;
}

Rational puiseux_oracle_n_u(const FiberDatum& u, const ParabolicDatum& P,
                            const ParabolicDatum& P2, const PuiseuxOptions& opt) {
  auto s = adjacent(P, P2);
  if (!s)
    throw NotAdjacent("puiseux_oracle_n_u: parabolics are not adjacent");
  const LeviDatum& levi = u.levi();
  return puiseux_difference_valuation(u.block_charpoly(levi.index_of(s->first)),
                                      u.block_charpoly(levi.index_of(s->second)), opt);
}

} // namespace affgrass
