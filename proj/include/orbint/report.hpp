#pragma once

/* JSON-facing layer: curve files in and exact values out.
 *
 * A curve file is {"q": 2, "genus": 0} with either "counts" (point counts
 * over F_{q^k}, k = 1..genus) or "numerator" (the zeta numerator
 * coefficients as exact "p/q" strings); both routes end in the
 * functional-equation gate of curve construction.
 *
 * Values are serialized losslessly: a plain rational as the string "p/q",
 * and a value carrying sqrt(q) as {"rational": "p/q", "sqrtq_coeff":
 * "a/b"} meaning p/q + (a/b) sqrt(q).
 */

#include "orbint/curve.hpp"
#include "orbint/radical.hpp"

#include "json.hpp"

#include <string>

namespace orbint {

/* throws std::invalid_argument on schema violations, with the offending
 * field named */
Curve curve_from_json(const nlohmann::json& j);
Curve curve_from_json_text(const std::string& text);

/* "p/q" when rational; {"rational", "sqrtq_coeff"} when a sqrt(q) part is
 * present; throws std::domain_error when the value lives outside
 * Q + Q sqrt(q) */
nlohmann::json value_to_json(const RadExt& v, long q);

/* the factored integral result: value, psi, volume_factor, q_power,
 * direction */
nlohmann::json integral_report(const Curve& c, long degD, int n, int d, long e, unsigned salt);

/* {"passed": bool, "suites": [{name, passed, detail, elapsed_ms}...]} */
nlohmann::json checks_report(int nmax, unsigned seed);

}  // namespace orbint
