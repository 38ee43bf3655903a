#pragma once

// Classical Kontsevich-Manin recursion for rational plane curves. Kept apart
// from gw_table on purpose: the engine never calls it, only verification code.

#include "planar_gw/rational.hpp"

namespace planar_gw::p2 {

/// Number K_d of rational degree-d plane curves through 3d - 1 general points.
/// Memoized behind a mutex; throws std::invalid_argument for d <= 0.
BigInt kontsevich(int d);

}  // namespace planar_gw::p2
