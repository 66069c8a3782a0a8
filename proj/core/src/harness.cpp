#include "affgrass/harness.hpp"

#include "affgrass/serialize.hpp"

#include <algorithm>
#include <chrono>
#include <exception>
#include <thread>

namespace affgrass {

namespace {

using NuTable = std::vector<std::pair<std::string, long>>;

NuTable n_u_table(const FiberDatum& u) {
  NuTable t;
  for (const auto& [P, P2] : adjacent_pairs(u.levi()))
    t.emplace_back(pair_key(P, P2), n_u_pair(u, P, P2));
  return t;
}

TheoremCertificate certify_with(const GrassPoint& x, const FiberDatum& u, const NuTable& nu_u) {
  TheoremCertificate c;
  c.point = x;
  c.in_fiber = in_fiber(x, u);
  if (!c.in_fiber)
    throw NotInFiber("certify_point: point is not in the affine Springer fiber");

  const auto Ps = parabolics(u.levi());
  c.retractions_regular = true;
  for (const auto& P : Ps) {
    const LeviPoint y = retract_fiber(x, u, P);
    c.nu_table.emplace_back(P, levi_nu(y));
    c.retractions_regular = c.retractions_regular && is_regular_levi_point(y, u);
  }
  auto nu_of = [&](const ParabolicDatum& P) -> const CoweightM& {
    return std::find_if(c.nu_table.begin(), c.nu_table.end(),
                        [&](const auto& e) { return e.first == P; })
        ->second;
  };

  bool all_equal = true;
  c.part_a_ok = true;
  const auto pairs = adjacent_pairs(u.levi());
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    const auto& [P, P2] = pairs[k];
    const long nx = n_pair_from_nu(nu_of(P), nu_of(P2), P, P2);
    const long nu = nu_u[k].second;
    c.n_x_table.emplace_back(nu_u[k].first, nx);
    c.n_u_table.push_back(nu_u[k]);
    c.part_a_ok = c.part_a_ok && nx <= nu;
    all_equal = all_equal && nx == nu;
  }
  c.regular = is_regular_point(x, u);
  c.part_b_ok = c.regular == (c.retractions_regular && all_equal);
  if (!c.part_a_ok || !c.part_b_ok)
    throw TheoremViolation(std::string("theorem violated: ") +
                               (c.part_a_ok ? "part (b)" : "part (a)"),
                           certificate_to_json(c).dump());
  return c;
}

} // namespace

long n_u_pair(const FiberDatum& u, const ParabolicDatum& P, const ParabolicDatum& P2) {
  if (!(P.levi() == u.levi()))
    throw LeviMismatch("n_u_pair: parabolic is not in P(M) for the fiber datum's Levi");
  auto s = adjacent(P, P2);
  if (!s)
    throw NotAdjacent("n_u_pair: parabolics are not adjacent: " + pair_key(P, P2));
  const int a = u.levi().index_of(s->first);
  const int b = u.levi().index_of(s->second);
  const FieldElem r = resultant(u.block_charpoly(a), u.block_charpoly(b));
  if (r.is_zero())
    throw CoprimalityViolation("block characteristic polynomials share a root");
  return static_cast<long>(r.val().value());
}

TheoremCertificate certify_point(const GrassPoint& x, const FiberDatum& u) {
  return certify_with(x, u, n_u_table(u));
}

TheoremReport verify_points(const FiberDatum& u, const std::vector<GrassPoint>& points,
                            int parallel) {
  const auto start = std::chrono::steady_clock::now();
  const NuTable nu_u = n_u_table(u);
  TheoremReport report;
  report.certificates.resize(points.size());
  std::vector<std::exception_ptr> errors(points.size());

  auto work = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      try {
        report.certificates[i] = certify_with(points[i], u, nu_u);
      } catch (...) {
        errors[i] = std::current_exception();
        return;
      }
    }
  };
  const int workers = std::max(1, std::min<int>(parallel, static_cast<int>(points.size())));
  if (workers <= 1) {
    work(0, points.size());
  } else {
    std::vector<std::thread> threads;
    for (int t = 0; t < workers; ++t)
      threads.emplace_back(work, points.size() * t / workers, points.size() * (t + 1) / workers);
    for (auto& th : threads)
      th.join();
  }
  // Report the first failing point in canonical order.
  for (auto& e : errors)
    if (e)
      std::rethrow_exception(e);

  report.summary.points = points.size();
  for (const auto& c : report.certificates)
    (c.regular ? report.summary.regular : report.summary.non_regular)++;
  report.summary.wall_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

TheoremReport verify_theorem(const FiberDatum& u, const EnumWindow& w, int parallel) {
  const auto start = std::chrono::steady_clock::now();
  FiberSample sample = generate_fiber_points(u, all_borels(u.n()), w, parallel);
  TheoremReport report = verify_points(u, sample.points, parallel);
  report.summary.candidates = sample.candidates;
  report.summary.wall_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

Sl2Report sl2_golden(const std::vector<FieldElem>& c_vals, const std::vector<FieldElem>& t_vals) {
  const BorelDatum B = BorelDatum::standard(2);
  const ParabolicDatum upper = B.parabolic(), lower = B.opposite().parabolic();
  Sl2Report report;
  for (const auto& c : c_vals) {
    if (c.is_zero() || !c.in_O())
      throw InputError("sl2_golden: c must be nonzero with val(c) >= 0");
    const FiberDatum u(LeviDatum::torus(2), MatrixF{{c, FieldElem()}, {FieldElem(), -c}});
    const long n_u = n_u_pair(u, upper, lower);
    for (const auto& t : t_vals) {
      Sl2Row row{c, t};
      const GrassPoint x = canonicalize(MatrixF{{FieldElem(1), FieldElem()}, {t, FieldElem(1)}});
      row.member = in_fiber(x, u);
      row.regular = row.member && is_regular_point(x, u);
      row.n_x = n_pair(x, upper, lower);
      row.n_u = n_u;

      const Valuation vc = c.val(), vt = t.val(), vct = vc + vt;
      row.expected_member = vct >= Valuation(0);
      row.expected_regular =
          vct == Valuation(0) || (vc == Valuation(0) && vt >= Valuation(0));
      row.expected_n_x = vt.is_finite() ? std::max<long>(0, -vt.value()) : 0;
      row.expected_n_u = vc.value();
      if (!row.matches())
        ++report.mismatches;
      report.rows.push_back(std::move(row));
    }
  }
  return report;
}

} // namespace affgrass
