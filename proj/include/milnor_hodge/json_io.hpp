#pragma once

// JSON encodings of the value types. Rationals are always {"num","den"}
// pairs and integers are JSON numbers when they fit in 64 bits, decimal
// strings otherwise, so every encoding round-trips bit-exactly.
//
// Readers throw SchemaError on shape mismatches. Polynomial readers also
// accept the canonical text rendering as a JSON string.

#include <string>
#include <string_view>

#include <json.hpp>

#include "milnor_hodge/frac_poly.hpp"
#include "milnor_hodge/hodge.hpp"
#include "milnor_hodge/laurent.hpp"
#include "milnor_hodge/rational.hpp"
#include "milnor_hodge/spectrum.hpp"
#include "milnor_hodge/strata.hpp"

namespace milnor_hodge::json_io {

using json = nlohmann::json;

/// Wraps nlohmann::json::parse, rethrowing syntax errors as ParseError.
json parse(std::string_view text);

json to_json(const Integer& z);
json to_json(const Rational& r);
json to_json(const LaurentPolyY& p);
json to_json(const FracPoly& p);
/// {"num_vars": m, "spectrum": FracPoly}
json to_json(const Spectrum& s);
json to_json(const IsolatedSingularity& s);
json to_json(const HodgeTable& h);
json to_json(const ChiClass& c);
/// {symbol: LaurentPolyY, ...}
json to_json(const StratifiedClass& c);
json to_json(const Stratification& s);

Integer integer_from_json(const json& j);
Rational rational_from_json(const json& j);
LaurentPolyY laurent_from_json(const json& j);
FracPoly frac_poly_from_json(const json& j);
/// Accepts the output of to_json(Spectrum) as well.
Spectrum spectrum_from_json(const json& j);
/// {"brieskorn_pham":[..]}, {"quasi_homogeneous":[..]} or
/// {"explicit_spectrum": FracPoly, "num_vars": m}.
IsolatedSingularity singularity_from_json(const json& j);
HodgeTable hodge_table_from_json(const json& j);
StratifiedClass stratified_class_from_json(const json& j);
Stratification stratification_from_json(const json& j);

}  // namespace milnor_hodge::json_io
