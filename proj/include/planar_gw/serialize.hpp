#pragma once

// JSON forms used by the CLI. Rationals are strings "p/q" ("p" when q = 1).
// A class is {"coeff": [[c00, c01, c02], ..., [c30, c31, c32]]}; a 12x12
// tensor is {"coeff": [[...12...], ...]} with row/column index 3i + j.

#include "planar_gw/cohom_ring.hpp"

#include <json.hpp>

namespace planar_gw::io {

using Json = nlohmann::ordered_json;

Json to_json(const ring::CohClass& c);
Json to_json(const ring::Matrix12& m);

/// Inverse of to_json(CohClass); throws std::invalid_argument on a shape or
/// number format mismatch.
ring::CohClass cohclass_from_json(const Json& j);

/// Pairing matrix, its inverse, the dual basis and the diagonal tensor.
Json ring_report();

}  // namespace planar_gw::io
