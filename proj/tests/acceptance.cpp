// Acceptance suite: one line per criterion, exit status 1 if any fails.
// All comparisons are exact; each criterion also has a wall-clock budget.

#include "planar_gw/cli.hpp"
#include "planar_gw/cohom_ring.hpp"
#include "planar_gw/gw_table.hpp"
#include "planar_gw/p2_oracle.hpp"
#include "planar_gw/qh_series.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

using namespace planar_gw;
using gw::GWKey;
using ring::BasisIndex;
using ring::CohClass;
using ring::kBasisSize;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

int failures = 0;

void criterion(int id, const std::string& title, double budget_seconds, const std::function<void(Outcome&)>& body) {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.fail(std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (o.ok && secs >= budget_seconds) {
    o.fail("took " + std::to_string(secs) + " s, budget " + std::to_string(budget_seconds) + " s");
  }
  if (!o.ok) ++failures;
  std::printf("[%s] %2d. %-34s %8.3f s%s%s\n", o.ok ? "PASS" : "FAIL", id, title.c_str(), secs,
              o.ok ? "" : "  -- ", o.detail.c_str());
  std::fflush(stdout);
}

std::string key_str(const GWKey& k) { return "N(" + gw::to_string(k) + ")"; }

bool initial_one(const GWKey& k) {
  static constexpr GWKey ones[] = {{1, 0, 2, 1}, {1, 2, 1, 1}, {1, 1, 1, 2}, {1, 2, 0, 3}, {2, 2, 3, 0}};
  return std::find(std::begin(ones), std::end(ones), k) != std::end(ones);
}

qh::QuantumElement basis_element(int k, int d_max) {
  return qh::QuantumElement::from_class(CohClass::basis(BasisIndex::from_flat(k)), d_max);
}

}  // namespace

int main() {
  std::printf("planar-gw acceptance suite\n");

  criterion(1, "cubic count (CLI compute)", 1.0, [](Outcome& o) {
    std::ostringstream out, err;
    const int code = cli::run({"compute", "--d", "3", "--r", "11", "--s", "0", "--theta", "0"}, out, err);
    if (code != 0) o.fail("exit code " + std::to_string(code));
    if (out.str() != "12960\n") o.fail("printed '" + out.str() + "'");
  });

  criterion(2, "initial-condition table", 1.0, [](Outcome& o) {
    gw::MemoTable memo;
    int ones = 0;
    for (int d = 1; d <= 6; ++d)
      for (int r = 0; r <= 2; ++r)
        for (int s = 0; s <= 5; ++s)
          for (int theta = 0; theta <= 5; ++theta) {
            const GWKey k{d, r, s, theta};
            const Rational v = gw::n_planar(k, memo);
            if (v != (initial_one(k) ? 1 : 0)) o.fail(key_str(k) + " = " + to_string(v));
            if (v == 1) ++ones;
          }
    if (ones != 5) o.fail("found " + std::to_string(ones) + " ones");
  });

  criterion(3, "vanishing rules (d <= 6)", 5.0, [](Outcome& o) {
    gw::MemoTable memo;
    for (int d = 1; d <= 6; ++d)
      for (int r = 0; r <= 3 * d + 2; ++r)
        for (int s = 0; s <= 5; ++s)
          for (int theta = 0; theta <= 5; ++theta) {
            const GWKey k{d, r, s, theta};
            const bool vanish = !k.balanced() || s > 3 || theta > 3 || s + theta >= 4;
            if (vanish && gw::n_planar(k, memo) != 0) o.fail(key_str(k) + " should vanish");
          }
  });

  criterion(4, "ring identities", 1.0, [](Outcome& o) {
    if (!CohClass::monomial(0, 4).is_zero()) o.fail("H^4 != 0");
    if (!CohClass::monomial(4, 0).is_zero()) o.fail("a^4 != 0");
    const auto duals = ring::dual_basis();
    for (int u = 0; u < kBasisSize; ++u)
      for (int v = 0; v < kBasisSize; ++v)
        if (ring::integrate(CohClass::basis(BasisIndex::from_flat(u)) * duals[v]) != (u == v ? 1 : 0))
          o.fail("duality fails at (" + std::to_string(u) + "," + std::to_string(v) + ")");
    // diagonal() itself throws if the closed form disagrees with ginv.
    if (ring::diagonal().delta != ring::shared_pairing().ginv) o.fail("diagonal != ginv");
  });

  criterion(5, "classical derivative table", 1.0, [](Outcome& o) {
    const CohClass h = CohClass::basis(0, 1), h2 = CohClass::basis(0, 2);
    for (int k = 0; k < kBasisSize; ++k) {
      const auto b = BasisIndex::from_flat(k);
      const CohClass t = CohClass::basis(b);
      if (qh::phi3_classical(h, h, t) != ((b == BasisIndex{3, 0} || b == BasisIndex{2, 1}) ? 1 : 0))
        o.fail("(t01,t01," + ring::basis_name(b) + ")");
      if (qh::phi3_classical(h, h2, t) != (b == BasisIndex{2, 0} ? 1 : 0)) o.fail("(t01,t02," + ring::basis_name(b) + ")");
      if (qh::phi3_classical(h2, h2, t) != 0) o.fail("(t02,t02," + ring::basis_name(b) + ")");
    }
  });

  criterion(6, "route consistency (d <= 5)", 10.0, [](Outcome& o) {
    gw::MemoTable memo;
    int checked = 0;
    for (const auto& [k, v] : gw::full_table(5, memo)) {
      if (k.s < 1) continue;
      ++checked;
      if (gw::reduce_point_insertion(k, memo) != v) o.fail(key_str(k));
    }
    if (checked == 0) o.fail("no keys checked");
  });

  criterion(7, "oracle cross-check (2 <= d <= 6)", 10.0, [](Outcome& o) {
    gw::MemoTable memo;
    for (int d = 2; d <= 6; ++d) {
      const Rational n = gw::n_planar({d, 3 * d - 4, 3, 0}, memo);
      const BigInt kd = p2::kontsevich(d);
      if (n != Rational(kd)) o.fail("d=" + std::to_string(d) + ": " + to_string(n) + " vs " + to_string(kd));
    }
  });

  criterion(8, "WDVV suite", 60.0, [](Outcome& o) {
    gw::MemoTable memo;
    const qh::QuantumCohomology qc(3, memo);
    for (int i = 0; i < kBasisSize; ++i)
      for (int j = 0; j < kBasisSize; ++j)
        for (int k = 0; k < kBasisSize; ++k)
          for (int l = 0; l < kBasisSize; ++l)
            if (!qc.wdvv_holds(BasisIndex::from_flat(i), BasisIndex::from_flat(j), BasisIndex::from_flat(k),
                               BasisIndex::from_flat(l)))
              o.fail("WDVV fails at (" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + "," +
                     std::to_string(l) + ")");
    int keys = 0;
    for (const auto& [key, v] : gw::full_table(5, memo)) {
      if (key.r < 3 || key.r > 17) continue;
      ++keys;
      const auto rep = qh::wdvv1_coefficient_identity(key, memo);
      if (!rep.ok) o.fail("wdvv1 " + key_str(key) + ": " + to_string(rep.lhs) + " vs " + to_string(rep.rhs));
    }
    if (keys == 0) o.fail("no wdvv1 keys");
  });

  criterion(9, "quantum unit and associativity", 60.0, [](Outcome& o) {
    gw::MemoTable memo;
    constexpr int kTop = 4;
    const qh::QuantumCohomology qc(kTop, memo);
    const auto unit = qh::QuantumElement::unit(kTop);
    for (int a = 0; a < kBasisSize; ++a) {
      const auto x = basis_element(a, kTop);
      if (qc.product(unit, x) != x || qc.product(x, unit) != x) o.fail("unit fails on " + std::to_string(a));
    }
    for (int a = 0; a < kBasisSize; ++a)
      for (int b = 0; b < kBasisSize; ++b)
        for (int c = 0; c < kBasisSize; ++c) {
          const auto x = basis_element(a, kTop), y = basis_element(b, kTop), z = basis_element(c, kTop);
          if (qc.product(qc.product(x, y), z) != qc.product(x, qc.product(y, z)))
            o.fail("associativity fails at (" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")");
        }
  });

  criterion(10, "integrality (d <= 6)", 10.0, [](Outcome& o) {
    gw::MemoTable memo;
    for (const auto& [k, v] : gw::full_table(6, memo))
      if (!is_integer(v)) o.fail(key_str(k) + " = " + to_string(v));
  });

  std::printf("%s: %d criteria failed\n", failures == 0 ? "ACCEPTED" : "REJECTED", failures);
  return failures == 0 ? 0 : 1;
}
