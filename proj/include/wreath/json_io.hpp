#pragma once
// JSON encodings.  Every exact scalar travels as a "numerator/denominator"
// string so no consumer is tempted to round.

#include <json.hpp>

#include "wreath/algebra.hpp"
#include "wreath/report.hpp"
#include "wreath/tableaux.hpp"

namespace wreath {

using json = nlohmann::json;

json encode_rational(const Rational& q);
Rational decode_rational(const json& j);

// {"m": m, "coeffs": ["p/q", ...]} with deg Phi_m coefficients.
json encode_cyclo(const CycloScalar& c);
CycloScalar decode_cyclo(const json& j);

// {"m": m, "n": n}
json encode_context(const GroupContext& ctx);
GroupContext decode_context(const json& j);

// {"perm": [pi(1)..pi(n)], "colors": [a_1..a_n]}
json encode_group_element(const ColoredPermutation& g);
ColoredPermutation decode_group_element(const GroupContext& ctx, const json& j);

// {"ctx": {...}, "terms": [{"g": {...}, "coeff": {...}}, ...]} in the
// deterministic group element order.
json encode_element(const CycloElement& e);
CycloElement decode_element(const json& j);

// Nested arrays, e.g. [[2,1],[1]].
json encode_shape(const MultiPartition& shape);
MultiPartition decode_shape(unsigned m, const json& j);

// [{"pos": k, "row": x, "col": y}, ...] in label order.
json encode_tableau(const StandardMultiTableau& tab);
StandardMultiTableau decode_tableau(unsigned m, const json& j);

json encode_report(const std::vector<CheckResult>& results);

}  // namespace wreath
