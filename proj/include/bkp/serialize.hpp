#pragma once

#include <string>

#include "bkp/laurent.hpp"
#include "bkp/scalar.hpp"
#include "bkp/tpoly.hpp"
#include "json.hpp"

namespace bkp {

using json = nlohmann::ordered_json;

// Rationals travel as strings ("3", "-1/6") so no reader rounds them.
json rat_to_json(const Rat& r);

// {"beta_order": B, "terms": [{"p": a, "beta": b, "coefficient": "n/d"}, ...]}
// Exact scalars (no truncation applied yet) report the fallback order, which
// callers set to the active beta cutoff of the run.
json scalar_to_json(const Scalar& s, int fallback_order);

// {"lo": .., "hi": .., "tail_exact": .., "coefficients": [{"degree": d,
//  "value": <scalar>}, ...]} listing trusted stored degrees only.
json laurent_to_json(const LaurentZ& f, int fallback_order);

// {"weight_cutoff": W, "terms": [{"monomial": "t_1^2 t_3", "exponents":
//  [2,0,1...], "value": <scalar>}, ...]}
json tpoly_to_json(const TPoly& f, int fallback_order);

// CSV text for the same objects: one row per term, rationals as "n/d".
std::string scalar_to_csv(const Scalar& s);
std::string laurent_to_csv(const LaurentZ& f);
std::string tpoly_to_csv(const TPoly& f);

}  // namespace bkp
