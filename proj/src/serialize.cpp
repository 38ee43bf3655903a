#include "planar_gw/serialize.hpp"

#include <stdexcept>

namespace planar_gw::io {

using ring::BasisIndex;
using ring::kBasisSize;
using ring::kMaxAExp;
using ring::kMaxHExp;

Json to_json(const ring::CohClass& c) {
  Json rows = Json::array();
  for (int i = 0; i <= kMaxAExp; ++i) {
    Json row = Json::array();
    for (int j = 0; j <= kMaxHExp; ++j) row.push_back(to_string(c(i, j)));
    rows.push_back(std::move(row));
  }
  return Json{{"coeff", std::move(rows)}};
}

Json to_json(const ring::Matrix12& m) {
  Json rows = Json::array();
  for (const auto& r : m) {
    Json row = Json::array();
    for (const auto& x : r) row.push_back(to_string(x));
    rows.push_back(std::move(row));
  }
  return Json{{"coeff", std::move(rows)}};
}

ring::CohClass cohclass_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("coeff")) throw std::invalid_argument("class JSON needs a \"coeff\" field");
  const Json& rows = j.at("coeff");
  if (!rows.is_array() || rows.size() != kMaxAExp + 1) throw std::invalid_argument("class JSON needs 4 rows");
  ring::CohClass c;
  for (int i = 0; i <= kMaxAExp; ++i) {
    const Json& row = rows[i];
    if (!row.is_array() || row.size() != kMaxHExp + 1) throw std::invalid_argument("class JSON rows need 3 entries");
    for (int j2 = 0; j2 <= kMaxHExp; ++j2) {
      if (!row[j2].is_string()) throw std::invalid_argument("class JSON entries must be strings");
      c(i, j2) = parse_rational(row[j2].get<std::string>());
    }
  }
  return c;
}

Json ring_report() {
  const auto& pairing = ring::shared_pairing();
  Json basis = Json::array();
  for (int k = 0; k < kBasisSize; ++k) basis.push_back(ring::basis_name(BasisIndex::from_flat(k)));
  Json duals = Json::array();
  for (const auto& c : ring::dual_basis()) duals.push_back(to_json(c));
  return Json{
      {"basis", std::move(basis)},
      {"pairing", to_json(pairing.g)},
      {"inverse_pairing", to_json(pairing.ginv)},
      {"dual_basis", std::move(duals)},
      {"diagonal", to_json(ring::diagonal().delta)},
  };
}

}  // namespace planar_gw::io
