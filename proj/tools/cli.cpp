#include "cli.hpp"

#include "affgrass/error.hpp"
#include "affgrass/harness.hpp"
#include "affgrass/serialize.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

namespace affgrass::cli {

namespace {

json load_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw InputError("cannot open config file " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  json cfg;
  try {
    cfg = json::parse(text);
  } catch (const json::parse_error& e) {
    // Convert the byte offset into a line and column.
    int line = 1, column = 1;
    const std::size_t stop = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t k = 0; k < stop; ++k) {
      if (text[k] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw ParseError("config " + path + ": malformed JSON", line, column);
  }
  if (!cfg.is_object())
    throw InputError("config " + path + ": top level must be an object");
  if (cfg.contains("schema_version") && cfg.at("schema_version") != kSchemaVersion)
    throw InputError("config " + path + ": unsupported schema_version");
  return cfg;
}

const json& require(const json& cfg, const char* key) {
  if (!cfg.contains(key))
    throw InputError(std::string("config: missing field '") + key + "'");
  return cfg.at(key);
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos)
    return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"')
      out += '"';
    out += c;
  }
  return out + "\"";
}

std::string csv_value(const json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }

// Writes records as JSON Lines, or as CSV rows with the given columns taken
// from each record. Summaries are only written in JSON mode; in CSV mode
// they go to the diagnostic stream.
class Writer {
public:
  Writer(Format format, std::ostream& out, std::ostream& err, std::vector<std::string> columns)
      : format_(format), out_(out), err_(err), columns_(std::move(columns)) {}

  void record(json j) {
    if (format_ == Format::Json) {
      out_ << j.dump() << '\n';
      return;
    }
    if (!header_) {
      for (std::size_t k = 0; k < columns_.size(); ++k)
        out_ << (k ? "," : "") << columns_[k];
      out_ << '\n';
      header_ = true;
    }
    for (std::size_t k = 0; k < columns_.size(); ++k) {
      const json& v = j.contains(columns_[k]) ? j.at(columns_[k]) : json();
      out_ << (k ? "," : "") << csv_field(csv_value(v));
    }
    out_ << '\n';
  }

  void summary(const json& j) {
    if (format_ == Format::Json)
      out_ << j.dump() << '\n';
    else
      err_ << j.dump() << '\n';
  }

private:
  Format format_;
  std::ostream& out_;
  std::ostream& err_;
  std::vector<std::string> columns_;
  bool header_ = false;
};

json tagged(const char* record, json j) {
  j["schema_version"] = kSchemaVersion;
  j["record"] = record;
  return j;
}

std::vector<BorelDatum> borels_from_config(const json& cfg, int n) {
  if (!cfg.contains("borels") || cfg.at("borels") == "all")
    return all_borels(n);
  const json& jb = cfg.at("borels");
  if (jb == "standard")
    return {BorelDatum::standard(n)};
  if (!jb.is_array())
    throw InputError("config: borels must be \"all\", \"standard\" or a list of permutations");
  std::vector<BorelDatum> out;
  for (const auto& b : jb)
    out.push_back(borel_from_json(b, n));
  return out;
}

EnumWindow window_from_config(const json& cfg, int n, const RunConfig& rc) {
  EnumWindow w = window_from_json(require(cfg, "window"), n);
  if (rc.seed)
    w.seed = *rc.seed;
  return w;
}

json invariant_factors_json(const std::vector<PolyQ>& fs) {
  json out = json::array();
  for (const auto& f : fs)
    out.push_back(to_json(f));
  return out;
}

int cmd_retract(const json& cfg, Writer& w) {
  const GrassPoint x = grass_point_from_json(require(cfg, "point"));
  const LeviDatum levi =
      cfg.contains("levi") ? levi_from_json(cfg.at("levi"), x.n()) : LeviDatum::torus(x.n());
  std::vector<ParabolicDatum> Ps;
  if (cfg.contains("parabolics")) {
    for (const auto& jp : cfg.at("parabolics")) {
      Ps.push_back(parabolic_from_json(jp, x.n()));
      if (!(Ps.back().levi() == levi))
        throw LeviMismatch("config: parabolic " + to_string(Ps.back()) + " is not in P(M)");
    }
  } else {
    Ps = parabolics(levi);
  }
  for (const auto& P : Ps) {
    const LeviPoint y = retract(x, P);
    w.record(tagged("retraction",
                    {{"parabolic", to_json(P)}, {"nu", to_json(levi_nu(y))}, {"point", to_json(y)}}));
  }
  return kExitOk;
}

int cmd_check_point(const json& cfg, Writer& w) {
  const GrassPoint x = grass_point_from_json(require(cfg, "point"));
  const FiberDatum u = fiber_datum_from_json(require(cfg, "fiber"));
  if (u.n() != x.n())
    throw InputError("config: point and fiber datum have different sizes");
  json j = {{"point", to_json(x)}, {"member", in_fiber(x, u)}};
  if (j["member"]) {
    const MatrixQ r = residue_class(x, u);
    j["invariant_factors"] = invariant_factors_json(frobenius_form(r));
    j["regular"] = is_regular(r);
  } else {
    j["invariant_factors"] = nullptr;
    j["regular"] = nullptr;
  }
  w.record(tagged("check", std::move(j)));
  return kExitOk;
}

int cmd_enumerate(const json& cfg, const RunConfig& rc, Writer& w) {
  const auto start = std::chrono::steady_clock::now();
  const FiberDatum u = fiber_datum_from_json(require(cfg, "fiber"));
  const EnumWindow win = window_from_config(cfg, u.n(), rc);
  const FiberSample s = generate_fiber_points(u, borels_from_config(cfg, u.n()), win, rc.parallel);
  for (std::size_t k = 0; k < s.points.size(); ++k)
    w.record(tagged("point",
                    {{"index", k}, {"nu_G", nu_G(s.points[k])}, {"point", to_json(s.points[k])}}));
  json sum = tagged("summary", {{"candidates", s.candidates}, {"points", s.points.size()}});
  if (rc.timing)
    sum["wall_time_ms"] =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  w.summary(sum);
  return kExitOk;
}

int cmd_verify(const json& cfg, const RunConfig& rc, Writer& w) {
  const auto start = std::chrono::steady_clock::now();
  const FiberDatum u = fiber_datum_from_json(require(cfg, "fiber"));
  const EnumWindow win = window_from_config(cfg, u.n(), rc);
  const FiberSample s = generate_fiber_points(u, borels_from_config(cfg, u.n()), win, rc.parallel);
  TheoremReport r = verify_points(u, s.points, rc.parallel);
  r.summary.candidates = s.candidates;
  r.summary.wall_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  for (std::size_t k = 0; k < r.certificates.size(); ++k) {
    json c = certificate_to_json(r.certificates[k]);
    c["index"] = k;
    w.record(tagged("certificate", std::move(c)));
  }
  w.summary(tagged("summary", summary_to_json(r.summary, rc.timing)));
  return kExitOk;
}

std::vector<FieldElem> default_c_values() {
  std::vector<FieldElem> c;
  for (int m = 0; m <= 3; ++m)
    c.push_back(FieldElem::eps_power(m));
  c.push_back(FieldElem(1) + FieldElem::eps_power(1));
  return c;
}

std::vector<FieldElem> default_t_values() {
  std::vector<FieldElem> t;
  for (const Rational& a : {Rational(1), Rational(2), Rational(1, 2)})
    for (int k = -5; k <= 5; ++k)
      t.push_back(FieldElem::eps_power(k, a));
  t.emplace_back();
  return t;
}

std::vector<FieldElem> elems_from(const json& j, const char* what) {
  if (!j.is_array() || j.empty())
    throw InputError(std::string("config: ") + what + " must be a nonempty array");
  std::vector<FieldElem> out;
  for (std::size_t k = 0; k < j.size(); ++k) {
    try {
      out.push_back(field_elem_from_json(j[k]));
    } catch (const ParseError& e) {
      throw e.in_context(std::string(what) + "[" + std::to_string(k) + "]");
    }
  }
  return out;
}

int cmd_sl2(const json& cfg, const RunConfig& rc, Writer& w, std::ostream& err) {
  const auto start = std::chrono::steady_clock::now();
  const auto cs = cfg.contains("c_values") ? elems_from(cfg.at("c_values"), "c_values")
                                           : default_c_values();
  const auto ts = cfg.contains("t_values") ? elems_from(cfg.at("t_values"), "t_values")
                                           : default_t_values();
  for (const auto& c : cs)
    if (c.is_zero() || !c.in_O())
      throw InputError("config: every c must be nonzero with non-negative valuation");
  const Sl2Report r = sl2_golden(cs, ts);
  for (const auto& row : r.rows)
    w.record(tagged("sl2", {{"c", to_json(row.c)},
                            {"t", to_json(row.t)},
                            {"member", row.member},
                            {"regular", row.regular},
                            {"n_x", row.n_x},
                            {"n_u", row.n_u},
                            {"expected_member", row.expected_member},
                            {"expected_regular", row.expected_regular},
                            {"expected_n_x", row.expected_n_x},
                            {"expected_n_u", row.expected_n_u},
                            {"match", row.matches()}}));
  json sum = tagged("summary", {{"rows", r.rows.size()}, {"mismatches", r.mismatches}});
  if (rc.timing)
    sum["wall_time_ms"] =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  w.summary(sum);
  if (r.mismatches != 0) {
    err << "error: " << r.mismatches << " rows disagree with the closed-form classification\n";
    return kExitInvariant;
  }
  return kExitOk;
}

std::vector<std::string> columns_for(Command c) {
  switch (c) {
  case Command::Retract:
    return {"parabolic", "nu", "point"};
  case Command::CheckPoint:
    return {"member", "regular", "invariant_factors", "point"};
  case Command::EnumerateFiber:
    return {"index", "nu_G", "point"};
  case Command::VerifyTheorem:
    return {"index",     "in_fiber",  "regular",   "retractions_regular",
            "part_a_ok", "part_b_ok", "n_x_table", "n_u_table", "point"};
  case Command::Sl2Golden:
    return {"c", "t", "member", "regular", "n_x", "n_u", "match"};
  }
  return {};
}

int dispatch(const RunConfig& rc, std::ostream& out, std::ostream& err) {
  json cfg = json::object();
  if (!rc.config_path.empty())
    cfg = load_config(rc.config_path);
  else if (rc.command != Command::Sl2Golden)
    throw InputError("--config is required for this command");
  if (rc.parallel < 1)
    throw InputError("--parallel must be at least 1");
  Writer w(rc.format, out, err, columns_for(rc.command));
  switch (rc.command) {
  case Command::Retract:
    return cmd_retract(cfg, w);
  case Command::CheckPoint:
    return cmd_check_point(cfg, w);
  case Command::EnumerateFiber:
    return cmd_enumerate(cfg, rc, w);
  case Command::VerifyTheorem:
    return cmd_verify(cfg, rc, w);
  case Command::Sl2Golden:
    return cmd_sl2(cfg, rc, w, err);
  }
  return kExitOk;
}

} // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  std::ofstream file;
  std::ostream* sink = &out;
  if (!config.out_path.empty()) {
    file.open(config.out_path, std::ios::binary | std::ios::trunc);
    if (!file) {
      err << "error: cannot open output file " << config.out_path << '\n';
      return kExitInput;
    }
    sink = &file;
  }
  try {
    return dispatch(config, *sink, err);
  } catch (const TheoremViolation& e) {
    *sink << json{{"schema_version", kSchemaVersion},
                  {"record", "violation"},
                  {"certificate", json::parse(e.certificate_json())}}
                 .dump()
          << '\n';
    err << "invariant violation: " << e.what() << '\n';
    return kExitInvariant;
  } catch (const InvariantViolation& e) {
    err << "invariant violation: " << e.what() << '\n';
    return kExitInvariant;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const json::exception& e) {
    err << "error: config: " << e.what() << '\n';
    return kExitInput;
  }
}

int main(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations on the affine Grassmannian of GL(n) over Q(eps)", "affgrass"};
  app.require_subcommand(1);
  RunConfig rc;
  std::uint64_t seed = 0;
  std::string format = "json";

  struct Sub {
    const char* name;
    const char* help;
    Command command;
  };
  const Sub subs[] = {
      {"retract", "Retractions x_P and nu_M(x_P) of a point", Command::Retract},
      {"check-point", "Fiber membership, residue invariant factors and regularity",
       Command::CheckPoint},
      {"enumerate-fiber", "Deduplicated fiber points in a window", Command::EnumerateFiber},
      {"verify-theorem", "Certificates for every fiber point in a window", Command::VerifyTheorem},
      {"sl2-golden", "GL(2) comparison against the closed-form classification",
       Command::Sl2Golden},
  };
  std::vector<CLI::App*> apps;
  std::vector<CLI::Option*> seed_opts;
  for (const Sub& s : subs) {
    CLI::App* sub = app.add_subcommand(s.name, s.help);
    sub->add_option("--config", rc.config_path, "JSON input file")->check(CLI::ExistingFile);
    seed_opts.push_back(sub->add_option("--seed", seed, "Override the window seed"));
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--out", rc.out_path, "Write records to this file");
    sub->add_option("--parallel", rc.parallel, "Worker threads")->check(CLI::PositiveNumber);
    sub->add_flag("--timing", rc.timing, "Include wall time in summaries");
    apps.push_back(sub);
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }
  for (std::size_t k = 0; k < apps.size(); ++k)
    if (apps[k]->parsed()) {
      rc.command = subs[k].command;
      if (seed_opts[k]->count() > 0)
        rc.seed = seed;
    }
  rc.format = format == "csv" ? Format::Csv : Format::Json;
  return run(rc, out, err);
}

} // namespace affgrass::cli
