#pragma once

#include "affgrass/grassmann.hpp"
#include "affgrass/harness.hpp"
#include "affgrass/springer.hpp"

#include <nlohmann/json.hpp>

namespace affgrass {

using json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;

// All *_from_json functions throw InputError (or ParseError for field
// element text) on malformed input.

json to_json(const FieldElem& a);
FieldElem field_elem_from_json(const json& j);

// Row-major array of rows of field element strings.
json to_json(const MatrixF& m);
MatrixF matrix_from_json(const json& j);

json to_json(const PolyQ& p); // ascending coefficient strings

// 1-based sorted index arrays.
json to_json(const LeviDatum& levi);
LeviDatum levi_from_json(const json& j, int n);
json to_json(const ParabolicDatum& P);
ParabolicDatum parabolic_from_json(const json& j, int n);
json to_json(const BorelDatum& B); // 1-based permutation
BorelDatum borel_from_json(const json& j, int n);

json to_json(const CoweightM& c);

// {"n": n, "rep": matrix}; parsing canonicalizes any invertible rep.
json to_json(const GrassPoint& x);
GrassPoint grass_point_from_json(const json& j);

// {"blocks": [...], "points": [...]}.
json to_json(const LeviPoint& y);
LeviPoint levi_point_from_json(const json& j);

// {"levi": blocks, "u": matrix}.
json to_json(const FiberDatum& u);
FiberDatum fiber_datum_from_json(const json& j);

// {"mu_box": [[lo,hi],...], "exp_range": [lo,hi], "coeff_set": [...],
//  "sample_count": k, "seed": s}.
json to_json(const EnumWindow& w);
EnumWindow window_from_json(const json& j, int n);

json certificate_to_json(const TheoremCertificate& c);
json summary_to_json(const TheoremSummary& s, bool include_wall_time);

} // namespace affgrass
