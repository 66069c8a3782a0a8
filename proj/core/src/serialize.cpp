#include "affgrass/serialize.hpp"

namespace affgrass {

namespace {

[[noreturn]] void bad(const std::string& what) { throw InputError("JSON: " + what); }

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    bad(std::string("missing field '") + key + "'");
  return j.at(key);
}

int as_int(const json& j, const char* what) {
  if (!j.is_number_integer())
    bad(std::string(what) + " must be an integer");
  return j.get<int>();
}

std::vector<Block> blocks_from_json(const json& j, int n) {
  if (!j.is_array())
    bad("blocks must be an array of index arrays");
  std::vector<Block> out;
  for (const auto& b : j) {
    if (!b.is_array())
      bad("block must be an array of indices");
    Block blk;
    for (const auto& i : b) {
      int v = as_int(i, "block index");
      if (v < 1 || v > n)
        bad("block index out of range 1.." + std::to_string(n));
      blk.push_back(v - 1);
    }
    out.push_back(std::move(blk));
  }
  return out;
}

json blocks_to_json(const std::vector<Block>& blocks) {
  json out = json::array();
  for (const auto& b : blocks) {
    json jb = json::array();
    for (int i : b)
      jb.push_back(i + 1);
    out.push_back(std::move(jb));
  }
  return out;
}

} // namespace

json to_json(const FieldElem& a) { return a.to_text(); }

FieldElem field_elem_from_json(const json& j) {
  if (j.is_number_integer())
    return FieldElem(j.get<long>());
  if (!j.is_string())
    bad("field element must be a string");
  return parse_field_elem(j.get<std::string>());
}

json to_json(const MatrixF& m) {
  json out = json::array();
  for (int i = 0; i < m.size(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.size(); ++j)
      row.push_back(to_json(m(i, j)));
    out.push_back(std::move(row));
  }
  return out;
}

MatrixF matrix_from_json(const json& j) {
  if (!j.is_array() || j.empty())
    bad("matrix must be a nonempty array of rows");
  const int n = static_cast<int>(j.size());
  MatrixF m(n);
  for (int i = 0; i < n; ++i) {
    if (!j[i].is_array() || static_cast<int>(j[i].size()) != n)
      bad("matrix must be square");
    for (int k = 0; k < n; ++k) {
      try {
        m(i, k) = field_elem_from_json(j[i][k]);
      } catch (const ParseError& e) {
        throw e.in_context("matrix entry [" + std::to_string(i) + "][" + std::to_string(k) + "]");
      }
    }
  }
  return m;
}

json to_json(const PolyQ& p) {
  json out = json::array();
  for (const auto& c : p.coeffs())
    out.push_back(to_string(c));
  return out;
}

json to_json(const LeviDatum& levi) { return blocks_to_json(levi.blocks()); }

LeviDatum levi_from_json(const json& j, int n) {
  return LeviDatum(n, blocks_from_json(j, n));
}

json to_json(const ParabolicDatum& P) { return blocks_to_json(P.order()); }

ParabolicDatum parabolic_from_json(const json& j, int n) {
  return ParabolicDatum(n, blocks_from_json(j, n));
}

json to_json(const BorelDatum& B) {
  json out = json::array();
  for (int i : B.perm)
    out.push_back(i + 1);
  return out;
}

BorelDatum borel_from_json(const json& j, int n) {
  if (!j.is_array() || static_cast<int>(j.size()) != n)
    bad("Borel must be a permutation of 1.." + std::to_string(n));
  BorelDatum B;
  std::vector<bool> seen(n, false);
  for (const auto& e : j) {
    int v = as_int(e, "Borel entry");
    if (v < 1 || v > n || seen[v - 1])
      bad("Borel must be a permutation of 1.." + std::to_string(n));
    seen[v - 1] = true;
    B.perm.push_back(v - 1);
  }
  return B;
}

json to_json(const CoweightM& c) { return c.components; }

json to_json(const GrassPoint& x) { return {{"n", x.n()}, {"rep", to_json(x.rep())}}; }

GrassPoint grass_point_from_json(const json& j) {
  MatrixF rep = matrix_from_json(field(j, "rep"));
  if (j.contains("n") && as_int(j.at("n"), "n") != rep.size())
    bad("GrassPoint n does not match rep size");
  return canonicalize(rep);
}

json to_json(const LeviPoint& y) {
  json pts = json::array();
  for (const auto& p : y.points)
    pts.push_back(to_json(p));
  return {{"blocks", to_json(y.levi)}, {"points", std::move(pts)}};
}

LeviPoint levi_point_from_json(const json& j) {
  const json& jb = field(j, "blocks");
  const json& jp = field(j, "points");
  if (!jb.is_array() || !jp.is_array() || jb.size() != jp.size())
    bad("LeviPoint needs one point per block");
  int n = 0;
  for (const auto& b : jb)
    n += static_cast<int>(b.size());
  // Pair each block with its point before the Levi sorts its blocks.
  std::vector<std::pair<Block, GrassPoint>> parts;
  const auto blocks = blocks_from_json(jb, n);
  for (std::size_t k = 0; k < blocks.size(); ++k) {
    GrassPoint p = grass_point_from_json(jp[k]);
    if (p.n() != static_cast<int>(blocks[k].size()))
      bad("LeviPoint block point has the wrong size");
    Block sorted = blocks[k];
    std::sort(sorted.begin(), sorted.end());
    parts.emplace_back(std::move(sorted), std::move(p));
  }
  LeviPoint y{LeviDatum(n, blocks), std::vector<GrassPoint>(blocks.size())};
  for (auto& [b, p] : parts)
    y.points[y.levi.index_of(b)] = std::move(p);
  return y;
}

json to_json(const FiberDatum& u) { return {{"levi", to_json(u.levi())}, {"u", to_json(u.u())}}; }

FiberDatum fiber_datum_from_json(const json& j) {
  MatrixF u = matrix_from_json(field(j, "u"));
  LeviDatum levi = j.contains("levi") ? levi_from_json(j.at("levi"), u.size())
                                      : LeviDatum::torus(u.size());
  return FiberDatum(std::move(levi), std::move(u));
}

json to_json(const EnumWindow& w) {
  json mu = json::array();
  for (const auto& [lo, hi] : w.mu_box)
    mu.push_back({lo, hi});
  json coeffs = json::array();
  for (const auto& c : w.coeff_set)
    coeffs.push_back(to_string(c));
  return {{"mu_box", mu},
          {"exp_range", {w.exp_range.first, w.exp_range.second}},
          {"coeff_set", coeffs},
          {"sample_count", w.sample_count},
          {"seed", w.seed}};
}

EnumWindow window_from_json(const json& j, int n) {
  EnumWindow w;
  const json& mu = field(j, "mu_box");
  auto interval = [](const json& iv, const char* what) {
    if (!iv.is_array() || iv.size() != 2)
      bad(std::string(what) + " must be [lo, hi]");
    return std::pair<int, int>(as_int(iv[0], what), as_int(iv[1], what));
  };
  if (!mu.is_array())
    bad("mu_box must be an array");
  if (mu.size() == 2 && mu[0].is_number_integer()) {
    // One interval shared by every coordinate.
    w.mu_box.assign(n, interval(mu, "mu_box"));
  } else {
    for (const auto& iv : mu)
      w.mu_box.push_back(interval(iv, "mu_box interval"));
  }
  w.exp_range = interval(field(j, "exp_range"), "exp_range");
  w.coeff_set.clear();
  for (const auto& c : field(j, "coeff_set")) {
    if (c.is_number_integer())
      w.coeff_set.emplace_back(c.get<long>());
    else if (c.is_string())
      w.coeff_set.push_back(parse_rational(c.get<std::string>()));
    else
      bad("coeff_set entries must be integers or rational strings");
  }
  w.sample_count = j.contains("sample_count") ? as_int(j.at("sample_count"), "sample_count") : 0;
  const json& seed = field(j, "seed");
  if (!seed.is_number_integer())
    bad("seed must be an integer");
  w.seed = seed.get<std::uint64_t>();
  w.validate(n);
  return w;
}

json certificate_to_json(const TheoremCertificate& c) {
  json nu = json::object(), nx = json::object(), nu_u = json::object();
  for (const auto& [P, v] : c.nu_table)
    nu[to_string(P)] = to_json(v);
  for (const auto& [k, v] : c.n_x_table)
    nx[k] = v;
  for (const auto& [k, v] : c.n_u_table)
    nu_u[k] = v;
  return {{"schema_version", kSchemaVersion},
          {"point", to_json(c.point)},
          {"nu_table", nu},
          {"n_x_table", nx},
          {"n_u_table", nu_u},
          {"in_fiber", c.in_fiber},
          {"regular", c.regular},
          {"retractions_regular", c.retractions_regular},
          {"part_a_ok", c.part_a_ok},
          {"part_b_ok", c.part_b_ok}};
}

json summary_to_json(const TheoremSummary& s, bool include_wall_time) {
  json j = {{"schema_version", kSchemaVersion},
            {"candidates", s.candidates},
            {"points", s.points},
            {"regular", s.regular},
            {"non_regular", s.non_regular},
            {"violations", s.violations}};
  if (include_wall_time)
    j["wall_time_ms"] = s.wall_ms;
  return j;
}

} // namespace affgrass
