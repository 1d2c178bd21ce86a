#pragma once

#include "json.hpp"

#include "qflag/polynomial.hpp"

namespace qflag {

using Json = nlohmann::ordered_json;

/// JSON polynomial schema version. A polynomial is a list of terms
/// {"x": [a_1..a_n], "q": [d_1..d_{n-1}], "c": "<decimal>"} in display order.
inline constexpr int kJsonSchemaVersion = 1;

Json to_json(const Polynomial& p);
/// Rank is taken from the length of the "x" arrays unless given explicitly.
/// An empty list needs an explicit rank.
Polynomial polynomial_from_json(const Json& j, int rank = -1);

}  // namespace qflag
