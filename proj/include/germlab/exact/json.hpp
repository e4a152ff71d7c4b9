#pragma once

#include "germlab/exact/dyadic.hpp"
#include "germlab/exact/quad.hpp"

#include <json.hpp>

namespace germlab {

using Json = nlohmann::ordered_json;

/// {"num": "<decimal>", "den_exp": k}
Json to_json(const Dyadic& d);
Dyadic dyadic_from_json(const Json& j);

/// ["p", "q"] with decimal strings.
Json to_json(const Rational& r);
Rational rational_from_json(const Json& j);

/// {"a": [p, q], "b": [p, q]}
Json to_json(const QuadExt& x);
QuadExt quad_from_json(const Json& j);

}  // namespace germlab
