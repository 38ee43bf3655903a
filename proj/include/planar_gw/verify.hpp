#pragma once

// Full invariant suite behind `planar-gw verify`: ring identities, table
// rules, the point-insertion route, the plane-curve oracle and the WDVV
// checks. Every check runs; failures are collected, not thrown.

#include "planar_gw/gw_table.hpp"
#include "planar_gw/qh_series.hpp"

#include <optional>
#include <string>
#include <vector>

namespace planar_gw::verify {

struct CheckResult {
  std::string name;
  bool ok = true;
  std::string detail;  // first counterexample when !ok
  std::optional<qh::Wdvv1Report> wdvv1;
};

/// Largest r at which the reduced WDVV identity is checked.
inline constexpr int kWdvv1MaxR = 17;

std::vector<CheckResult> run_all(int d_max, gw::MemoTable& memo);

}  // namespace planar_gw::verify
