#pragma once

#include "lemniscate/diff_expr.hpp"
#include "lemniscate/gamma_pi.hpp"
#include "lemniscate/series.hpp"
#include "lemniscate/verification.hpp"

#include <nlohmann/json.hpp>

namespace lemniscate {

using Json = nlohmann::json;

// Polynomials are arrays of "num/den" strings, lowest degree first.
Json to_json(const Poly& p);
Poly poly_from_json(const Json& j);

// {"num": [...], "den": [...]}
Json to_json(const RationalFunction& f);
RationalFunction rational_function_from_json(const Json& j);

// {"kind": "sd_p", "first_index": 0, "polys": [[...], ...]}
Json to_json(const SeriesTable& t);
SeriesTable series_table_from_json(const Json& j);

// {"half_power": s, "terms": [{"coeff": {...}, "z": e, "deriv": [d1, ...]}]}
Json to_json(const DiffExpr& e);
DiffExpr diff_expr_from_json(const Json& j);

// [{"num": "3", "den": "16", "gamma_exp": 4, "pi_exp_x2": -6}, ...]
Json to_json(const GammaPiExpr& e);
GammaPiExpr gamma_pi_from_json(const Json& j);

/// Report record; numeric fields are null for exact checks.
Json to_json(const VerificationReport& r, bool include_runtime = true);

}  // namespace lemniscate
