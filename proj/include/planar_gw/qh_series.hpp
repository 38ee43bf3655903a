#pragma once

// Genus-0 potential of E in reduced variables, the small quantum product on
// H*(E), and the WDVV checks.
//
// Series live in Q[q, t02, t03, u] truncated at fixed bounds. The Novikov
// variable q^d stands for e^{d t01}; t02 and t03 are the coordinates dual to
// H^2 and H^3; u records the a-power carried by the substitution
// t_ij -> u^i t_0j. Coefficients are plain (not divided by factorials).

#include "planar_gw/cohom_ring.hpp"
#include "planar_gw/gw_table.hpp"
#include "planar_gw/rational.hpp"

#include <array>
#include <compare>
#include <map>
#include <vector>

namespace planar_gw::qh {

using ring::BasisIndex;
using ring::CohClass;

struct SeriesBounds {
  int d_max = 0;
  int p_max = 0;  // t02
  int s_max = 0;  // t03
  int theta_max = 0;  // u

  friend constexpr bool operator==(const SeriesBounds&, const SeriesBounds&) = default;
};

SeriesBounds meet(const SeriesBounds& x, const SeriesBounds& y);

/// Exponents of q^d t02^p t03^s u^theta.
struct SeriesExponent {
  int d = 0;
  int p = 0;
  int s = 0;
  int theta = 0;

  friend constexpr auto operator<=>(const SeriesExponent&, const SeriesExponent&) = default;
};

class NovikovSeries {
 public:
  explicit NovikovSeries(SeriesBounds bounds = {});

  static NovikovSeries constant(const Rational& c, SeriesBounds bounds);

  const SeriesBounds& bounds() const { return bounds_; }
  bool within(const SeriesExponent& e) const;

  Rational coefficient(const SeriesExponent& e) const;
  /// Adds c to the coefficient at e; terms outside the bounds are dropped.
  void add_term(const SeriesExponent& e, const Rational& c);
  const std::map<SeriesExponent, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  // Binary operations truncate at the componentwise minimum of the bounds.
  NovikovSeries& operator+=(const NovikovSeries& other);
  NovikovSeries& operator-=(const NovikovSeries& other);
  NovikovSeries& operator*=(const Rational& c);
  friend NovikovSeries operator+(NovikovSeries x, const NovikovSeries& y) { return x += y; }
  friend NovikovSeries operator-(NovikovSeries x, const NovikovSeries& y) { return x -= y; }
  friend NovikovSeries operator*(NovikovSeries x, const Rational& c) { return x *= c; }
  friend NovikovSeries operator*(const Rational& c, NovikovSeries x) { return x *= c; }
  friend NovikovSeries operator*(const NovikovSeries& x, const NovikovSeries& y);

  /// d/dt02 applied `times` times. The t02 bound drops accordingly, since the
  /// top coefficients would need terms beyond the old bound.
  NovikovSeries d_t02(int times = 1) const;
  NovikovSeries d_t03(int times = 1) const;
  /// d/dt01 applied `times` times: multiplies the q^d coefficient by d^times.
  NovikovSeries d_t01(int times = 1) const;
  /// Multiplication by u^k, k >= 0.
  NovikovSeries times_u(int k) const;

  NovikovSeries truncated(const SeriesBounds& bounds) const;

  friend bool operator==(const NovikovSeries& x, const NovikovSeries& y) {
    return x.bounds_ == y.bounds_ && x.terms_ == y.terms_;
  }

 private:
  SeriesBounds bounds_;
  std::map<SeriesExponent, Rational> terms_;  // no explicit zeros
};

/// Sum over d >= 1 of N_d(r, s, theta) q^d t02^r/r! t03^s/s! u^theta, i.e.
/// the reduced quantum potential with u marking the total a-power.
NovikovSeries planar_potential(const SeriesBounds& bounds, gw::MemoTable& memo);

/// Degree-0 three-point function: integral of u v w over E.
Rational phi3_classical(const CohClass& u, const CohClass& v, const CohClass& w);

/// Degree-d (d >= 1) three-point invariant of basis classes. Zero as soon as
/// one class is a pure a-power (string axiom).
Rational phi3_quantum(BasisIndex u, BasisIndex v, BasisIndex w, int d, gw::MemoTable& memo);

/// Element of H*(E) (x) Q[q]/(q^{d_max+1}): components[k] multiplies q^k.
struct QuantumElement {
  std::vector<CohClass> components;

  static QuantumElement zero(int d_max);
  static QuantumElement unit(int d_max);
  static QuantumElement from_class(const CohClass& c, int d_max);

  int d_max() const { return static_cast<int>(components.size()) - 1; }

  friend bool operator==(const QuantumElement&, const QuantumElement&) = default;
  friend QuantumElement operator+(QuantumElement x, const QuantumElement& y);
  friend QuantumElement operator-(QuantumElement x, const QuantumElement& y);
};

/// Third derivatives of the genus-0 potential at the point
/// (t01, t02, t03) of the big phase space, as series in q = e^{t01}, t02, t03,
/// for every triple of basis classes. With p_max = s_max = 0 these are the
/// three-point functions at the origin that define the small quantum product.
class QuantumCohomology {
 public:
  QuantumCohomology(int d_max, gw::MemoTable& memo, int p_max = 0, int s_max = 0);

  int d_max() const { return bounds_.d_max; }
  const SeriesBounds& bounds() const { return bounds_; }

  /// Phi_{uvw}; symmetric in its arguments.
  const NovikovSeries& phi3(BasisIndex u, BasisIndex v, BasisIndex w) const;

  /// T_u * T_v = sum_d q^d sum_{e,f} Phi^{(d)}_{uve} g^{ef} T_f at the origin.
  const QuantumElement& basis_product(BasisIndex u, BasisIndex v) const;
  QuantumElement product(const QuantumElement& x, const QuantumElement& y) const;

  /// sum_{e,f} Phi_{ije} g^{ef} Phi_{fkl} - sum_{e,f} Phi_{ike} g^{ef} Phi_{fjl}.
  NovikovSeries wdvv_defect(BasisIndex i, BasisIndex j, BasisIndex k, BasisIndex l) const;
  bool wdvv_holds(BasisIndex i, BasisIndex j, BasisIndex k, BasisIndex l) const {
    return wdvv_defect(i, j, k, l).is_zero();
  }

 private:
  static int triple_index(BasisIndex u, BasisIndex v, BasisIndex w) {
    return (u.flat() * ring::kBasisSize + v.flat()) * ring::kBasisSize + w.flat();
  }
  // sum_e Phi_{ije} g^{ef}, indexed like triple_index(i, j, f).
  const NovikovSeries& contracted(BasisIndex i, BasisIndex j, BasisIndex f) const {
    return contracted_[triple_index(i, j, f)];
  }

  SeriesBounds bounds_;
  std::vector<NovikovSeries> phi3_;
  std::vector<NovikovSeries> contracted_;
  std::vector<QuantumElement> basis_products_;
};

QuantumElement quantum_product(const QuantumElement& x, const QuantumElement& y, int d_max, gw::MemoTable& memo);

bool wdvv_pairing_check(BasisIndex i, BasisIndex j, BasisIndex k, BasisIndex l, int d_max, gw::MemoTable& memo);

/// Terms that survive in the WDVV equation for (t01, t01 | t02, t02), derived
/// from the diagonal tensor and the cup product instead of being assumed.
struct Wdvv1Structure {
  struct Pair {
    BasisIndex e;
    BasisIndex f;
    Rational coeff;
  };
  /// Diagonal entries delta^{ef} with neither e nor f a pure a-power; only
  /// these can pair two positive-degree factors.
  std::vector<Pair> quantum_pairs;
  /// Degree-0 factor contracted through the diagonal: Phi0_{ABe} delta^{ef} T_f
  /// is the cup product A B.
  CohClass lhs_left;   // H . H
  CohClass lhs_right;  // H^2 . H^2
  CohClass rhs_left;   // H . H^2
  CohClass rhs_right;  // H . H^2

  /// True iff the pairs are exactly (a^i H, a^{3-i} H) with coefficient 1,
  /// H.H = H^2, H^2.H^2 = 0 and H.H^2 = T_12 - T_21 + T_30.
  bool matches_reduced_form() const;
};

Wdvv1Structure derive_wdvv1_structure();

struct Wdvv1Report {
  gw::GWKey key;
  bool ok = false;
  bool structure_ok = false;
  Rational lhs;  // coefficient extracted from the t02^3-derivative piece
  Rational rhs;  // remaining pieces moved to the right-hand side
  Rational table_value;  // n_planar(key)
};

/// Builds the four expansion pieces of the reduced WDVV equation as series
/// from the N-table, multiplies them out, reads off the coefficient of
/// q^d t02^{r-3}/(r-3)! t03^s/s! u^theta and compares both sides.
/// Requires a balanced key with r >= 3; throws std::invalid_argument otherwise.
Wdvv1Report wdvv1_coefficient_identity(const gw::GWKey& key, gw::MemoTable& memo);

}  // namespace planar_gw::qh
