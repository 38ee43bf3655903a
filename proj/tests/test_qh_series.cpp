#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "planar_gw/qh_series.hpp"

#include <random>

using namespace planar_gw;
using namespace planar_gw::qh;
using ring::kBasisSize;

namespace {

CohClass T(int i, int j) { return CohClass::basis(i, j); }

NovikovSeries random_series(std::mt19937_64& rng, SeriesBounds b) {
  std::uniform_int_distribution<int> c(-4, 4);
  NovikovSeries s(b);
  for (int d = 0; d <= b.d_max; ++d)
    for (int p = 0; p <= b.p_max; ++p)
      for (int t = 0; t <= b.s_max; ++t)
        for (int u = 0; u <= b.theta_max; ++u) s.add_term({d, p, t, u}, ratio(c(rng), 1 + (d + p) % 3));
  return s;
}

}  // namespace

TEST_CASE("series arithmetic truncates at the bounds") {
  const SeriesBounds b{2, 2, 1, 1};
  NovikovSeries x(b);
  x.add_term({1, 0, 0, 0}, 1);
  x.add_term({3, 0, 0, 0}, 5);  // outside, dropped
  CHECK(x.terms().size() == 1);
  const NovikovSeries sq = x * x;
  CHECK(sq.coefficient({2, 0, 0, 0}) == 1);
  CHECK((sq * x).is_zero());
  x.add_term({1, 0, 0, 0}, -1);
  CHECK(x.is_zero());
}

TEST_CASE("derivatives") {
  NovikovSeries x({3, 4, 2, 0});
  x.add_term({2, 4, 0, 0}, ratio(1, 24));
  x.add_term({1, 1, 2, 0}, 3);
  const auto dx = x.d_t02();
  CHECK(dx.bounds().p_max == 3);
  CHECK(dx.coefficient({2, 3, 0, 0}) == ratio(1, 6));
  CHECK(dx.coefficient({1, 0, 2, 0}) == 3);
  CHECK(x.d_t02(4).coefficient({2, 0, 0, 0}) == 1);
  CHECK(x.d_t03(2).coefficient({1, 1, 0, 0}) == 6);
  CHECK(x.d_t01(3).coefficient({2, 4, 0, 0}) == ratio(8, 24));
  CHECK(x.times_u(0) == x);
  CHECK_THROWS_AS(x.times_u(-1), std::invalid_argument);
}

TEST_CASE("truncation soundness: enlarging bounds never changes old coefficients") {
  std::mt19937_64 rng(17);
  const SeriesBounds small{2, 2, 1, 2};
  const SeriesBounds big{4, 4, 2, 3};
  for (int n = 0; n < 10; ++n) {
    const auto x = random_series(rng, big);
    const auto y = random_series(rng, big);
    CHECK((x * y).truncated(small) == x.truncated(small) * y.truncated(small));
    CHECK((x + y).truncated(small) == x.truncated(small) + y.truncated(small));
    CHECK(x.d_t02().truncated(small) == x.truncated({2, 3, 1, 2}).d_t02());
  }
}

TEST_CASE("series algebra is a commutative ring") {
  std::mt19937_64 rng(23);
  const SeriesBounds b{2, 2, 1, 1};
  for (int n = 0; n < 5; ++n) {
    const auto x = random_series(rng, b), y = random_series(rng, b), z = random_series(rng, b);
    CHECK(x * y == y * x);
    CHECK((x * y) * z == x * (y * z));
    CHECK(x * (y + z) == x * y + x * z);
  }
}

TEST_CASE("planar potential stores plain coefficients") {
  gw::MemoTable memo;
  const auto psi = planar_potential({3, 11, 3, 3}, memo);
  BigInt f11;
  mpz_fac_ui(f11.get_mpz_t(), 11);
  CHECK(psi.coefficient({3, 11, 0, 0}) == Rational(12960) / Rational(f11));
  CHECK(psi.coefficient({1, 0, 2, 1}) == ratio(1, 2));
  CHECK(psi.coefficient({2, 2, 3, 0}) == ratio(1, 12));
}

TEST_CASE("phi3_classical") {
  const CohClass h = T(0, 1), h2 = T(0, 2);
  CHECK(phi3_classical(h, h, T(3, 0)) == 1);
  CHECK(phi3_classical(h, h, T(2, 1)) == 1);
  CHECK(phi3_classical(h, h2, T(2, 0)) == 1);
  for (int k = 0; k < kBasisSize; ++k) {
    const auto b = BasisIndex::from_flat(k);
    CHECK(phi3_classical(h2, h2, CohClass::basis(b)) == 0);
    if (b != BasisIndex{3, 0} && b != BasisIndex{2, 1}) CHECK(phi3_classical(h, h, CohClass::basis(b)) == 0);
    if (b != BasisIndex{2, 0}) CHECK(phi3_classical(h, h2, CohClass::basis(b)) == 0);
  }
}

TEST_CASE("phi3_quantum matches gw_invariant on every basis triple") {
  gw::MemoTable memo;
  CHECK(phi3_quantum({0, 1}, {0, 2}, {2, 1}, 1, memo) == 0);
  CHECK(phi3_quantum({1, 1}, {0, 2}, {0, 2}, 1, memo) == 0);
  CHECK(phi3_quantum({0, 1}, {2, 2}, {0, 2}, 1, memo) == 0);
  // Balanced example: <H^2, a H^2, a^2 H> at d = 1 is 1 * N_1(2, 0, 3) = 1.
  CHECK(phi3_quantum({0, 2}, {1, 2}, {2, 1}, 1, memo) == 1);
  int nonzero = 0;
  for (int d = 1; d <= 3; ++d) {
    for (int a = 0; a < kBasisSize; ++a) {
      for (int b = 0; b < kBasisSize; ++b) {
        for (int c = 0; c < kBasisSize; ++c) {
          const auto u = BasisIndex::from_flat(a), v = BasisIndex::from_flat(b), w = BasisIndex::from_flat(c);
          const Rational got = phi3_quantum(u, v, w, d, memo);
          Rational want = 0;
          if (u.j > 0 && v.j > 0 && w.j > 0) {
            const std::array<int, 3> m{u.j, v.j, w.j};
            want = gw::gw_invariant(d, u.i + v.i + w.i, m, memo);
          }
          CHECK(got == want);
          if (got != 0) ++nonzero;
        }
      }
    }
  }
  CHECK(nonzero > 0);
}

TEST_CASE("quantum product: unit, classical limit, commutativity") {
  gw::MemoTable memo;
  const QuantumCohomology qc(5, memo);
  const auto unit = QuantumElement::unit(5);
  for (int k = 0; k < kBasisSize; ++k) {
    const auto x = QuantumElement::from_class(CohClass::basis(BasisIndex::from_flat(k)), 5);
    CHECK(qc.product(unit, x) == x);
    CHECK(qc.product(x, unit) == x);
  }
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<int> c(-3, 3);
  for (int n = 0; n < 20; ++n) {
    QuantumElement x = QuantumElement::zero(5);
    for (auto& comp : x.components)
      for (int k = 0; k < kBasisSize; ++k) comp[BasisIndex::from_flat(k)] = ratio(c(rng), 1 + n % 4);
    CHECK(qc.product(unit, x) == x);
  }

  const auto h = QuantumElement::from_class(T(0, 1), 5);
  const auto hh = qc.product(h, h);
  CHECK(hh.components[0] == ring::mul(T(0, 1), T(0, 1)));
  for (int a = 0; a < kBasisSize; ++a) {
    for (int b = 0; b < kBasisSize; ++b) {
      CHECK(qc.basis_product(BasisIndex::from_flat(a), BasisIndex::from_flat(b)) ==
            qc.basis_product(BasisIndex::from_flat(b), BasisIndex::from_flat(a)));
      CHECK(qc.basis_product(BasisIndex::from_flat(a), BasisIndex::from_flat(b)).components[0] ==
            ring::mul(CohClass::basis(BasisIndex::from_flat(a)), CohClass::basis(BasisIndex::from_flat(b))));
    }
  }
  // The free-function form agrees with the precomputed one.
  CHECK(quantum_product(h, h, 5, memo) == hh);
}

TEST_CASE("quantum product has genuine q-corrections") {
  gw::MemoTable memo;
  const QuantumCohomology qc(3, memo);
  bool any = false;
  for (int a = 0; a < kBasisSize; ++a)
    for (int b = 0; b < kBasisSize; ++b)
      any = any || !qc.basis_product(BasisIndex::from_flat(a), BasisIndex::from_flat(b)).components[1].is_zero();
  CHECK(any);
}

TEST_CASE("associativity up to q-degree 2") {
  gw::MemoTable memo;
  const QuantumCohomology qc(2, memo);
  for (int a = 0; a < kBasisSize; ++a) {
    for (int b = 0; b < kBasisSize; ++b) {
      for (int c = 0; c < kBasisSize; ++c) {
        const auto x = QuantumElement::from_class(CohClass::basis(BasisIndex::from_flat(a)), 2);
        const auto y = QuantumElement::from_class(CohClass::basis(BasisIndex::from_flat(b)), 2);
        const auto z = QuantumElement::from_class(CohClass::basis(BasisIndex::from_flat(c)), 2);
        CHECK(qc.product(qc.product(x, y), z) == qc.product(x, qc.product(y, z)));
      }
    }
  }
}

TEST_CASE("wdvv_pairing_check") {
  gw::MemoTable memo;
  CHECK(wdvv_pairing_check({0, 0}, {1, 2}, {0, 1}, {2, 0}, 3, memo));
  CHECK(wdvv_pairing_check({0, 1}, {0, 1}, {0, 2}, {0, 2}, 5, memo));
}

TEST_CASE("WDVV holds away from the origin in the t02 and t03 directions") {
  // Third derivatives with extra H^2 and H^3 insertions exercise the table far
  // beyond the three-point functions, through equations other than the one the
  // recursion is read off from.
  gw::MemoTable memo;
  const QuantumCohomology qc(3, memo, 3, 2);
  std::mt19937_64 rng(41);
  std::uniform_int_distribution<int> idx(0, kBasisSize - 1);
  auto check = [&](BasisIndex i, BasisIndex j, BasisIndex k, BasisIndex l) {
    CAPTURE(ring::basis_name(i));
    CAPTURE(ring::basis_name(j));
    CAPTURE(ring::basis_name(k));
    CAPTURE(ring::basis_name(l));
    CHECK(qc.wdvv_holds(i, j, k, l));
  };
  for (int n = 0; n < 300; ++n) {
    check(BasisIndex::from_flat(idx(rng)), BasisIndex::from_flat(idx(rng)), BasisIndex::from_flat(idx(rng)),
          BasisIndex::from_flat(idx(rng)));
  }
  for (int i = 0; i < kBasisSize; ++i)
    for (int l = 0; l < kBasisSize; ++l) check(BasisIndex::from_flat(i), {0, 1}, {0, 2}, BasisIndex::from_flat(l));
  // Away from the origin: q^2 t02^3 t03 in Phi_{H^2 H^2 H^2} is N_2(6,1,0)/3!.
  CHECK(qc.phi3({0, 2}, {0, 2}, {0, 2}).coefficient({2, 3, 1, 0}) == gw::n_planar({2, 6, 1, 0}, memo) / 6);
  CHECK(qc.phi3({0, 2}, {0, 2}, {0, 2}).coefficient({2, 3, 1, 0}) != 0);
}

TEST_CASE("WDVV structure derived from the diagonal") {
  const auto st = derive_wdvv1_structure();
  CHECK(st.quantum_pairs.size() == 4);
  CHECK(st.matches_reduced_form());
  CHECK(st.lhs_left == T(0, 2));
  CHECK(st.lhs_right.is_zero());
  CHECK(st.rhs_left == T(1, 2) - T(2, 1) + T(3, 0));
}

TEST_CASE("wdvv1_coefficient_identity") {
  gw::MemoTable memo;
  const auto cubic = wdvv1_coefficient_identity({3, 11, 0, 0}, memo);
  CHECK(cubic.ok);
  CHECK(cubic.lhs == 12960);
  CHECK(cubic.rhs == 12960);
  const auto small = wdvv1_coefficient_identity({1, 3, 0, 2}, memo);
  CHECK(small.ok);
  CHECK(small.lhs == 2);
  CHECK(small.rhs == 2);
  CHECK(wdvv1_coefficient_identity({2, 5, 1, 1}, memo).ok);
  CHECK_THROWS_AS(wdvv1_coefficient_identity({2, 5, 1, 0}, memo), std::invalid_argument);
  CHECK_THROWS_AS(wdvv1_coefficient_identity({1, 2, 0, 3}, memo), std::invalid_argument);
}
