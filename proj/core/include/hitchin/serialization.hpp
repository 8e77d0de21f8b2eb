#pragma once

#include <json.hpp>

#include "hitchin/integer_matrix.hpp"
#include "hitchin/laurent.hpp"

namespace hitchin {

/// {"rows": n, "cols": m, "entries": [["1", "-2"], ...]}; integers are
/// decimal strings so entries of any size survive the round trip.
nlohmann::json to_json(const IntegerMatrix& m);
IntegerMatrix integer_matrix_from_json(const nlohmann::json& j);

nlohmann::json to_json(const IntegerVector& v);

/// {"-1": "3", "0": "1"}: exponent -> coefficient.
nlohmann::json to_json(const LaurentPoly& p);
LaurentPoly laurent_poly_from_json(const nlohmann::json& j);

/// {"rows": n, "cols": m, "entries": [[{...}, ...], ...]}
nlohmann::json to_json(const LaurentMatrix& m);
LaurentMatrix laurent_matrix_from_json(const nlohmann::json& j);

}  // namespace hitchin
