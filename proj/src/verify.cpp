#include "planar_gw/verify.hpp"

#include "planar_gw/cohom_ring.hpp"
#include "planar_gw/p2_oracle.hpp"

#include <algorithm>
#include <functional>

namespace planar_gw::verify {

using gw::GWKey;
using ring::BasisIndex;
using ring::CohClass;
using ring::kBasisSize;

namespace {

// Runs `body`, which reports the first failure through `fail`.
CheckResult check(std::string name, const std::function<void(const std::function<void(std::string)>&)>& body) {
  CheckResult res;
  res.name = std::move(name);
  auto fail = [&res](std::string why) {
    if (res.ok) res.detail = std::move(why);
    res.ok = false;
  };
  try {
    body(fail);
  } catch (const std::exception& e) {
    fail(std::string("exception: ") + e.what());
  }
  return res;
}

std::string key_str(const GWKey& k) { return "N(" + gw::to_string(k) + ")"; }

bool initial_one(const GWKey& k) {
  static constexpr GWKey ones[] = {{1, 0, 2, 1}, {1, 2, 1, 1}, {1, 1, 1, 2}, {1, 2, 0, 3}, {2, 2, 3, 0}};
  return std::find(std::begin(ones), std::end(ones), k) != std::end(ones);
}

}  // namespace

std::vector<CheckResult> run_all(int d_max, gw::MemoTable& memo) {
  std::vector<CheckResult> out;

  out.push_back(check("ring.nilpotence", [](auto fail) {
    if (!CohClass::monomial(0, 4).is_zero()) fail("H^4 != 0");
    if (!CohClass::monomial(4, 0).is_zero()) fail("a^4 != 0");
  }));

  out.push_back(check("ring.pairing", [](auto fail) {
    const auto& p = ring::shared_pairing();
    for (int u = 0; u < kBasisSize; ++u) {
      for (int v = 0; v < kBasisSize; ++v) {
        const auto bu = BasisIndex::from_flat(u);
        const auto bv = BasisIndex::from_flat(v);
        if (p.g[u][v] != p.g[v][u]) fail("g not symmetric at " + ring::basis_name(bu) + "," + ring::basis_name(bv));
        if (bu.degree() + bv.degree() != ring::kDimE && p.g[u][v] != 0) fail("g nonzero off degree 5");
      }
    }
    if (ring::matmul(p.g, p.ginv) != ring::identity_matrix()) fail("g * ginv != I");
  }));

  out.push_back(check("ring.duality", [](auto fail) {
    const auto duals = ring::dual_basis();
    const auto& ginv = ring::shared_pairing().ginv;
    for (int u = 0; u < kBasisSize; ++u) {
      for (int v = 0; v < kBasisSize; ++v) {
        const Rational want = u == v ? 1 : 0;
        if (ring::integrate(CohClass::basis(BasisIndex::from_flat(u)) * duals[v]) != want) {
          fail("pairing(T_u, T^v) != delta_uv");
        }
        if (duals[u].coefficients()[v] != ginv[u][v]) fail("dual basis row differs from ginv");
      }
    }
  }));

  out.push_back(check("ring.diagonal", [](auto fail) {
    if (ring::diagonal().delta != ring::shared_pairing().ginv) fail("diagonal tensor != ginv");
  }));

  out.push_back(check("ring.classical_derivatives", [](auto fail) {
    const CohClass h = CohClass::basis(0, 1);
    const CohClass h2 = CohClass::basis(0, 2);
    for (int k = 0; k < kBasisSize; ++k) {
      const auto b = BasisIndex::from_flat(k);
      const CohClass t = CohClass::basis(b);
      const Rational hh = (b == BasisIndex{3, 0} || b == BasisIndex{2, 1}) ? 1 : 0;
      const Rational hh2 = b == BasisIndex{2, 0} ? 1 : 0;
      if (qh::phi3_classical(h, h, t) != hh) fail("Phi0(H,H," + ring::basis_name(b) + ")");
      if (qh::phi3_classical(h, h2, t) != hh2) fail("Phi0(H,H^2," + ring::basis_name(b) + ")");
      if (qh::phi3_classical(h2, h2, t) != 0) fail("Phi0(H^2,H^2," + ring::basis_name(b) + ")");
    }
  }));

  out.push_back(check("gw.initial_conditions", [&](auto fail) {
    for (int d = 1; d <= d_max; ++d) {
      for (int r = 0; r <= 2; ++r) {
        for (int s = 0; s <= 5; ++s) {
          for (int theta = 0; theta <= 5; ++theta) {
            const GWKey k{d, r, s, theta};
            if (gw::n_planar(k, memo) != (initial_one(k) ? 1 : 0)) fail(key_str(k));
          }
        }
      }
    }
  }));

  out.push_back(check("gw.vanishing", [&](auto fail) {
    for (int d = 1; d <= d_max; ++d) {
      for (int r = 0; r <= 3 * d + 2; ++r) {
        for (int s = 0; s <= 5; ++s) {
          for (int theta = 0; theta <= 5; ++theta) {
            const GWKey k{d, r, s, theta};
            const bool must_vanish = !k.balanced() || s > 3 || theta > 3 || s + theta >= 4;
            if (must_vanish && gw::n_planar(k, memo) != 0) fail(key_str(k) + " should vanish");
          }
        }
      }
    }
  }));

  out.push_back(check("gw.integrality", [&](auto fail) {
    for (const auto& [k, v] : gw::full_table(d_max, memo)) {
      if (!is_integer(v)) fail(key_str(k) + " = " + to_string(v));
    }
  }));

  out.push_back(check("gw.route_consistency", [&](auto fail) {
    for (const auto& [k, v] : gw::full_table(d_max, memo)) {
      if (k.s >= 1 && gw::reduce_point_insertion(k, memo) != v) fail(key_str(k));
    }
  }));

  out.push_back(check("oracle.fixed_plane", [&](auto fail) {
    for (int d = 2; d <= d_max; ++d) {
      const Rational n = gw::n_planar({d, 3 * d - 4, 3, 0}, memo);
      const BigInt kd = p2::kontsevich(d);
      if (n != Rational(kd)) fail("d=" + std::to_string(d) + ": " + to_string(n) + " vs K_d=" + to_string(kd));
    }
  }));

  const qh::QuantumCohomology qc(d_max, memo);

  out.push_back(check("qh.unit", [&](auto fail) {
    const auto unit = qh::QuantumElement::unit(d_max);
    for (int k = 0; k < kBasisSize; ++k) {
      const auto x = qh::QuantumElement::from_class(CohClass::basis(BasisIndex::from_flat(k)), d_max);
      if (qc.product(unit, x) != x || qc.product(x, unit) != x) {
        fail("unit fails on " + ring::basis_name(BasisIndex::from_flat(k)));
      }
    }
  }));

  out.push_back(check("qh.associativity", [&](auto fail) {
    for (int a = 0; a < kBasisSize; ++a) {
      for (int b = 0; b < kBasisSize; ++b) {
        for (int c = 0; c < kBasisSize; ++c) {
          const auto ta = qh::QuantumElement::from_class(CohClass::basis(BasisIndex::from_flat(a)), d_max);
          const auto tb = qh::QuantumElement::from_class(CohClass::basis(BasisIndex::from_flat(b)), d_max);
          const auto tc = qh::QuantumElement::from_class(CohClass::basis(BasisIndex::from_flat(c)), d_max);
          if (qc.product(qc.product(ta, tb), tc) != qc.product(ta, qc.product(tb, tc))) {
            fail("(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")");
          }
        }
      }
    }
  }));

  out.push_back(check("qh.wdvv_pairing", [&](auto fail) {
    for (int i = 0; i < kBasisSize; ++i) {
      for (int j = 0; j < kBasisSize; ++j) {
        for (int k = 0; k < kBasisSize; ++k) {
          for (int l = 0; l < kBasisSize; ++l) {
            if (!qc.wdvv_holds(BasisIndex::from_flat(i), BasisIndex::from_flat(j), BasisIndex::from_flat(k),
                               BasisIndex::from_flat(l))) {
              fail("(" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + "," +
                   std::to_string(l) + ")");
            }
          }
        }
      }
    }
  }));

  for (const auto& [k, v] : gw::full_table(d_max, memo)) {
    if (k.r < 3 || k.r > kWdvv1MaxR) continue;
    CheckResult res;
    res.name = "qh.wdvv1";
    try {
      res.wdvv1 = qh::wdvv1_coefficient_identity(k, memo);
      res.ok = res.wdvv1->ok;
      if (!res.ok) res.detail = key_str(k) + ": " + to_string(res.wdvv1->lhs) + " vs " + to_string(res.wdvv1->rhs);
    } catch (const std::exception& e) {
      res.ok = false;
      res.detail = key_str(k) + ": exception: " + e.what();
    }
    out.push_back(std::move(res));
  }

  return out;
}

}  // namespace planar_gw::verify
