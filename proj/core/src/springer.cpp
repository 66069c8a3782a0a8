#include "affgrass/springer.hpp"

#include <algorithm>
#include <limits>
#include <random>
#include <set>
#include <thread>

namespace affgrass {

namespace {

PolyF derivative(const PolyF& p) {
  std::vector<FieldElem> c;
  for (int k = 1; k <= p.degree(); ++k)
    c.push_back(p.coeff(k) * FieldElem(static_cast<long>(k)));
  return PolyF(std::move(c));
}

bool block_diagonal_for(const MatrixF& u, const LeviDatum& levi) {
  for (int i = 0; i < u.size(); ++i)
    for (int j = 0; j < u.size(); ++j)
      if (levi.block_of(i) != levi.block_of(j) && !u(i, j).is_zero())
        return false;
  return true;
}

std::string check_fiber_datum(const MatrixF& u, const LeviDatum& levi) {
  if (u.size() != levi.n())
    return "size of u does not match the Levi datum";
  if (!block_diagonal_for(u, levi))
    return "u is not block diagonal for the Levi datum";
  if (!entries_in_O(u))
    return "u has an entry of negative valuation";
  const PolyF p = charpoly(u);
  if (p.degree() > 1 && resultant(p, derivative(p)).is_zero())
    return "characteristic polynomial of u is not squarefree";
  std::vector<PolyF> cp;
  for (const Block& b : levi.blocks())
    cp.push_back(charpoly(u.submatrix(b)));
  for (std::size_t a = 0; a < cp.size(); ++a)
    for (std::size_t b = a + 1; b < cp.size(); ++b)
      if (resultant(cp[a], cp[b]).is_zero())
        return "block characteristic polynomials share a root";
  return {};
}

// Deterministic bounded draw; std distributions are implementation-defined.
int draw(std::mt19937_64& rng, int lo, int hi) {
  return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

struct Coordinate {
  int row;
  int col;
};

std::vector<Coordinate> upper_coordinates(const BorelDatum& B) {
  std::vector<Coordinate> out;
  const int n = static_cast<int>(B.perm.size());
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      out.push_back({B.perm[a], B.perm[b]});
  return out;
}

std::vector<std::vector<int>> mu_points(const EnumWindow& w) {
  std::vector<std::vector<int>> out{{}};
  for (const auto& [lo, hi] : w.mu_box) {
    std::vector<std::vector<int>> next;
    for (const auto& prefix : out)
      for (int v = lo; v <= hi; ++v) {
        next.push_back(prefix);
        next.back().push_back(v);
      }
    out = std::move(next);
  }
  return out;
}

// n(t) * eps^mu: column j of n(t) scaled by eps^{mu_j}.
MatrixF candidate(const MatrixF& unipotent, const std::vector<int>& mu) {
  MatrixF g = unipotent;
  for (int j = 0; j < g.size(); ++j) {
    if (mu[j] == 0)
      continue;
    const FieldElem s = FieldElem::eps_power(mu[j]);
    for (int i = 0; i < g.size(); ++i)
      if (!g(i, j).is_zero())
        g(i, j) *= s;
  }
  return g;
}

// Right cosets of N_mu = eps^mu N(O) eps^{-mu} in N(F), for N the unipotent
// radical of B: reducing each coordinate to its exponents below
// mu_i - mu_j, nearest the diagonal first within each column, picks a unique
// representative. Since mu = nu_A(x_B) is determined by the point, the pair
// (mu, reduced coordinates) identifies n(t) eps^mu G(O).
struct SweepKey {
  std::vector<int> mu;
  std::vector<FieldElem> coords;
  friend bool operator<(const SweepKey& a, const SweepKey& b) {
    if (a.mu != b.mu)
      return a.mu < b.mu;
    for (std::size_t k = 0; k < a.coords.size(); ++k)
      if (int c = compare(a.coords[k], b.coords[k]); c != 0)
        return c < 0;
    return false;
  }
};

SweepKey reduced_key(MatrixF unip, const std::vector<int>& mu, const BorelDatum& B) {
  const auto& perm = B.perm;
  const int n = static_cast<int>(perm.size());
  for (int b = 1; b < n; ++b) {
    const int j = perm[b];
    for (int a = b - 1; a >= 0; --a) {
      const int i = perm[a];
      const FieldElem& t = unip(i, j);
      if (t.is_zero())
        continue;
      const FieldElem kept = t.truncate_below(mu[i] - mu[j]);
      const FieldElem tail = t - kept;
      if (tail.is_zero())
        continue;
      for (int l = 0; l < a; ++l) {
        const int r = perm[l];
        if (!unip(r, i).is_zero())
          unip(r, j) -= tail * unip(r, i);
      }
      unip(i, j) = kept;
    }
  }
  SweepKey key{mu, {}};
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      key.coords.push_back(unip(perm[a], perm[b]));
  return key;
}

MatrixF key_candidate(const SweepKey& key, const BorelDatum& B) {
  const int n = static_cast<int>(B.perm.size());
  MatrixF unip = MatrixF::identity(n);
  std::size_t k = 0;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      unip(B.perm[a], B.perm[b]) = key.coords[k++];
  return candidate(unip, key.mu);
}

// Inverse of a unipotent matrix that is upper triangular in the order perm.
MatrixF unipotent_inverse(const MatrixF& unip, const std::vector<int>& perm) {
  const int n = unip.size();
  MatrixF inv = MatrixF::identity(n);
  for (int b = 1; b < n; ++b)
    for (int a = b - 1; a >= 0; --a) {
      FieldElem acc;
      for (int c = a + 1; c <= b; ++c)
        if (!unip(perm[a], perm[c]).is_zero() && !inv(perm[c], perm[b]).is_zero())
          acc += unip(perm[a], perm[c]) * inv(perm[c], perm[b]);
      inv(perm[a], perm[b]) = -acc;
    }
  return inv;
}

// Splits [0, count) into contiguous ranges, one per worker. With a set as
// the result each worker fills its own and they are merged; with a vector
// workers write disjoint slots. The first error in range order is rethrown.
template <class Result, class Body>
void run_parallel(std::size_t count, int parallel, Result& result, Body body) {
  const int workers = std::max(1, parallel);
  if (workers == 1 || count < 2) {
    body(0, count, result);
    return;
  }
  constexpr bool merges = requires(Result r) { r.merge(r); };
  std::vector<Result> partial(merges ? workers : 0);
  std::vector<std::thread> threads;
  std::vector<std::exception_ptr> errors(workers);
  for (int t = 0; t < workers; ++t) {
    const std::size_t b = count * t / workers, e = count * (t + 1) / workers;
    threads.emplace_back([&, t, b, e] {
      try {
        if constexpr (merges)
          body(b, e, partial[t]);
        else
          body(b, e, result);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  }
  for (auto& th : threads)
    th.join();
  for (auto& err : errors)
    if (err)
      std::rethrow_exception(err);
  if constexpr (merges)
    for (auto& p : partial)
      result.merge(p);
}

} // namespace

FiberDatum::FiberDatum(LeviDatum levi, MatrixF u) : levi_(std::move(levi)), u_(std::move(u)) {
  if (std::string why = check_fiber_datum(u_, levi_); !why.empty())
    throw InvalidFiberDatum("invalid fiber datum: " + why);
  for (const Block& b : levi_.blocks()) {
    blocks_.push_back(u_.submatrix(b));
    block_charpolys_.push_back(charpoly(blocks_.back()));
  }
}

bool is_integral_rss(const MatrixF& u, const LeviDatum& levi) {
  return check_fiber_datum(u, levi).empty();
}

bool in_fiber(const MatrixF& g, const MatrixF& u) {
  return entries_in_O(inverse(g) * u * g);
}

MatrixQ residue_class(const MatrixF& g, const MatrixF& u) {
  const MatrixF ad = inverse(g) * u * g;
  if (!entries_in_O(ad))
    throw NotInFiber("point is not in the affine Springer fiber");
  return residue(ad);
}

bool is_regular(const MatrixQ& m) { return minpoly(m).degree() == m.size(); }

bool is_regular_point(const MatrixF& g, const MatrixF& u) {
  return is_regular(residue_class(g, u));
}

LeviPoint retract_fiber(const GrassPoint& x, const FiberDatum& u, const ParabolicDatum& P) {
  if (!(P.levi() == u.levi()))
    throw LeviMismatch("parabolic is not in P(M) for the fiber datum's Levi");
  if (!in_fiber(x, u))
    throw NotInFiber("retract_fiber: point is not in the affine Springer fiber");
  LeviPoint y = retract(x, P);
  for (int k = 0; k < y.levi.rank(); ++k)
    if (!in_fiber(y.points[k].rep(), u.block(k)))
      throw FiberRetractViolation("retraction to " + to_string(P) +
                                  " left the Levi fiber in block " + std::to_string(k));
  return y;
}

bool is_regular_levi_point(const LeviPoint& y, const FiberDatum& u) {
  for (int k = 0; k < y.levi.rank(); ++k)
    if (!is_regular_point(y.points[k].rep(), u.block(k)))
      return false;
  return true;
}

void EnumWindow::validate(int n) const {
  if (static_cast<int>(mu_box.size()) != n)
    throw InputError("window: mu_box needs one interval per coordinate");
  for (const auto& [lo, hi] : mu_box)
    if (lo > hi)
      throw InputError("window: empty mu interval");
  if (exp_range.first > exp_range.second)
    throw InputError("window: empty exponent range");
  bool has_zero = false;
  for (const auto& c : coeff_set)
    has_zero = has_zero || is_zero(c);
  if (!has_zero)
    throw InputError("window: coeff_set must contain 0");
  if (sample_count < 0)
    throw InputError("window: negative sample_count");
}

namespace {

// Swept candidates of one Borel chart that lie in the fiber, by key.
std::set<SweepKey> sweep_chart(const FiberDatum& u, const BorelDatum& B, const EnumWindow& w,
                               int parallel, std::size_t& candidates) {
  const int n = u.n();
  if (static_cast<int>(B.perm.size()) != n)
    throw InputError("generate_fiber_points: Borel size mismatch");
  const auto coords = upper_coordinates(B);
  const auto mus = mu_points(w);

  std::vector<FieldElem> values{FieldElem()};
  for (const auto& a : w.coeff_set)
    if (!is_zero(a))
      for (int k = w.exp_range.first; k <= w.exp_range.second; ++k)
        values.push_back(FieldElem::eps_power(k, a));

  std::size_t combos = 1;
  for (std::size_t c = 0; c < coords.size(); ++c)
    combos *= values.size();
  candidates += combos * mus.size();

  // Ad((n eps^mu)^{-1}) u = eps^{-mu} (n^{-1} u n) eps^{mu}, so membership of
  // every mu is read off the entry valuations of n^{-1} u n.
  auto sweep = [&](std::size_t begin, std::size_t end, std::set<SweepKey>& found) {
    std::vector<long> vals(static_cast<std::size_t>(n) * n);
    for (std::size_t idx = begin; idx < end; ++idx) {
      MatrixF unip = MatrixF::identity(n);
      std::size_t rest = idx;
      for (const auto& c : coords) {
        unip(c.row, c.col) = values[rest % values.size()];
        rest /= values.size();
      }
      const MatrixF conj = unipotent_inverse(unip, B.perm) * u.u() * unip;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          Valuation v = conj(i, j).val();
          vals[i * n + j] = v.is_finite() ? v.value() : std::numeric_limits<long>::max() / 4;
        }
      for (const auto& mu : mus) {
        bool ok = true;
        for (int i = 0; i < n && ok; ++i)
          for (int j = 0; j < n && ok; ++j)
            ok = vals[i * n + j] + mu[j] - mu[i] >= 0;
        if (ok)
          found.insert(reduced_key(unip, mu, B));
      }
    }
  };

  std::set<SweepKey> keys;
  run_parallel(combos, parallel, keys, sweep);
  return keys;
}

// One random candidate: each coordinate is zero or a sum of one or two terms
// p/q eps^e with e in exp_range, 1 <= |p| <= 3 and 1 <= q <= 3.
std::pair<MatrixF, std::vector<int>> random_candidate(std::mt19937_64& rng, const EnumWindow& w,
                                                      const BorelDatum& B) {
  const int n = static_cast<int>(B.perm.size());
  std::vector<int> mu(n);
  for (int i = 0; i < n; ++i)
    mu[i] = draw(rng, w.mu_box[i].first, w.mu_box[i].second);
  MatrixF unip = MatrixF::identity(n);
  for (const auto& c : upper_coordinates(B)) {
    if (draw(rng, 0, 1) == 0)
      continue;
    const int terms = draw(rng, 1, 2);
    FieldElem t;
    for (int k = 0; k < terms; ++k) {
      const int e = draw(rng, w.exp_range.first, w.exp_range.second);
      int p = draw(rng, -3, 2);
      if (p >= 0)
        ++p;
      const int q = draw(rng, 1, 3);
      Rational coeff(p, q);
      coeff.canonicalize();
      t += FieldElem::eps_power(e, coeff);
    }
    unip(c.row, c.col) = t;
  }
  return {std::move(unip), std::move(mu)};
}

} // namespace

FiberSample generate_fiber_points(const FiberDatum& u, const BorelDatum& B,
                                  const EnumWindow& w, int parallel) {
  return generate_fiber_points(u, std::vector<BorelDatum>{B}, w, parallel);
}

std::vector<BorelDatum> all_borels(int n) {
  std::vector<BorelDatum> out;
  for (const ParabolicDatum& P : parabolics(LeviDatum::torus(n)))
    out.push_back(BorelDatum{P.flattened()});
  return out;
}

FiberSample generate_fiber_points(const FiberDatum& u, const std::vector<BorelDatum>& borels,
                                  const EnumWindow& w, int parallel) {
  w.validate(u.n());
  if (borels.empty())
    throw InputError("generate_fiber_points: no Borel given");
  FiberSample out;
  std::vector<std::set<SweepKey>> keys;
  for (const BorelDatum& B : borels)
    keys.push_back(sweep_chart(u, B, w, parallel, out.candidates));

  // A single chart keeps the stream free of chart draws.
  std::mt19937_64 rng(w.seed);
  const int charts = static_cast<int>(borels.size());
  for (int s = 0; s < w.sample_count; ++s) {
    const int b = charts == 1 ? 0 : draw(rng, 0, charts - 1);
    auto [unip, mu] = random_candidate(rng, w, borels[b]);
    if (in_fiber(candidate(unip, mu), u.u()))
      keys[b].insert(reduced_key(unip, mu, borels[b]));
  }
  out.candidates += static_cast<std::size_t>(w.sample_count);

  std::vector<std::pair<const SweepKey*, const BorelDatum*>> distinct;
  for (int b = 0; b < charts; ++b)
    for (const SweepKey& k : keys[b])
      distinct.emplace_back(&k, &borels[b]);
  std::vector<GrassPoint> points(distinct.size());
  auto finish = [&](std::size_t begin, std::size_t end, std::vector<GrassPoint>& pts) {
    for (std::size_t k = begin; k < end; ++k) {
      const MatrixF g = key_candidate(*distinct[k].first, *distinct[k].second);
      if (!in_fiber(g, u.u()))
        throw InvariantViolation("generate_fiber_points: swept candidate left the fiber");
      pts[k] = canonicalize(g);
    }
  };
  run_parallel(distinct.size(), parallel, points, finish);
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  out.points = std::move(points);
  return out;
}

} // namespace affgrass
