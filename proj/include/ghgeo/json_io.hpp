#pragma once

#include <json.hpp>

#include "ghgeo/approx.hpp"
#include "ghgeo/correspondence.hpp"
#include "ghgeo/error.hpp"
#include "ghgeo/geodesic.hpp"
#include "ghgeo/metric_space.hpp"

namespace ghgeo::io {

using nlohmann::json;

/// Parses {"labels": [...], "matrix": [[...], ...]} and validates it exactly.
/// "labels" may be omitted, in which case points are named "0", "1", ...
FiniteMetricSpace space_from_json(const json& j);

/// Emits a space with its points reordered so labels are sorted; the matrix
/// is permuted to match and written row-major.
json space_to_json(const FiniteMetricSpace& x);

json correspondence_to_json(const Correspondence& r);
Correspondence correspondence_from_json(const json& j, std::size_t n,
                                        std::size_t m);

json to_json(const GHResult& r);
json to_json(const NetReport& r);
json to_json(const SandwichReport& r);
json to_json(const MidpointStep& step);
json to_json(const BoundednessReport& r);
json to_json(const Error& e);

json read_file(const std::string& path);
/// Loads a space file; any parse or schema failure becomes MalformedInput.
FiniteMetricSpace read_space(const std::string& path);

}  // namespace ghgeo::io
