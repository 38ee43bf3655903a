#pragma once

// Cohomology ring of the universal plane E -> G(3,4):
//
//   H*(E, Q) = Q[a, H] / (a^4, H^3 - a H^2 + a^2 H - a^3)
//
// with a the hyperplane class of the Grassmannian and H the pullback of the
// hyperplane class of P^3. Elements are stored densely over the monomial basis
// T_ij = a^i H^j, 0 <= i <= 3, 0 <= j <= 2. Integration picks out the
// coefficient of the point class a^3 H^2.

#include "planar_gw/rational.hpp"

#include <array>
#include <compare>
#include <span>
#include <string>
#include <vector>

namespace planar_gw::ring {

inline constexpr int kMaxAExp = 3;
inline constexpr int kMaxHExp = 2;
inline constexpr int kBasisSize = (kMaxAExp + 1) * (kMaxHExp + 1);
inline constexpr int kDimE = 5;

/// Index (i, j) of the basis element a^i H^j. Flattened as 3*i + j.
struct BasisIndex {
  int i = 0;
  int j = 0;

  constexpr int flat() const { return (kMaxHExp + 1) * i + j; }
  constexpr int degree() const { return i + j; }  // complex degree
  static constexpr BasisIndex from_flat(int k) { return {k / (kMaxHExp + 1), k % (kMaxHExp + 1)}; }
  static constexpr bool in_range(int i, int j) { return i >= 0 && i <= kMaxAExp && j >= 0 && j <= kMaxHExp; }

  friend constexpr auto operator<=>(const BasisIndex&, const BasisIndex&) = default;
};

/// "T_ij" label used in reports.
std::string basis_name(BasisIndex b);

/// One term c * a^a_exp * H^h_exp of an unreduced polynomial.
struct Monomial {
  int a_exp = 0;
  int h_exp = 0;
  Rational coeff{1};
};

class CohClass {
 public:
  CohClass() = default;

  /// The basis element T_ij. Out-of-range indices give the zero class, which
  /// is the convention the dual-basis formula relies on.
  static CohClass basis(int i, int j);
  static CohClass basis(BasisIndex b) { return basis(b.i, b.j); }
  static CohClass unit() { return basis(0, 0); }
  /// Normal form of a^a_exp H^h_exp.
  static CohClass monomial(int a_exp, int h_exp);

  const Rational& operator()(int i, int j) const { return coeff_[BasisIndex{i, j}.flat()]; }
  Rational& operator()(int i, int j) { return coeff_[BasisIndex{i, j}.flat()]; }
  const Rational& operator[](BasisIndex b) const { return coeff_[b.flat()]; }
  Rational& operator[](BasisIndex b) { return coeff_[b.flat()]; }

  std::span<const Rational, kBasisSize> coefficients() const { return coeff_; }

  bool is_zero() const;
  /// True iff all nonzero coefficients sit in one cohomological degree
  /// (the zero class counts as homogeneous).
  bool is_homogeneous() const;

  CohClass& operator+=(const CohClass& other);
  CohClass& operator-=(const CohClass& other);
  CohClass& operator*=(const Rational& scalar);

  friend CohClass operator+(CohClass x, const CohClass& y) { return x += y; }
  friend CohClass operator-(CohClass x, const CohClass& y) { return x -= y; }
  friend CohClass operator*(CohClass x, const Rational& c) { return x *= c; }
  friend CohClass operator*(const Rational& c, CohClass x) { return x *= c; }
  friend CohClass operator-(CohClass x) { return x *= Rational(-1); }
  /// Cup product.
  friend CohClass operator*(const CohClass& x, const CohClass& y);

  friend bool operator==(const CohClass& x, const CohClass& y) { return x.coeff_ == y.coeff_; }

 private:
  std::array<Rational, kBasisSize> coeff_{};
};

/// Normal form of a linear combination of monomials: H^3 is rewritten to
/// a H^2 - a^2 H + a^3 until every H-exponent is at most 2, then any a^i with
/// i >= 4 is dropped.
CohClass reduce(std::span<const Monomial> raw);

CohClass mul(const CohClass& x, const CohClass& y);

/// Coefficient of a^3 H^2. Zero on every class of degree other than 5.
Rational integrate(const CohClass& x);

using Matrix12 = std::array<std::array<Rational, kBasisSize>, kBasisSize>;

Matrix12 identity_matrix();
Matrix12 matmul(const Matrix12& x, const Matrix12& y);
/// Gauss-Jordan elimination over Q. Throws std::domain_error on a singular
/// input.
Matrix12 invert(const Matrix12& m);

/// Poincare pairing g[u][v] = integral of T_u T_v and its inverse.
struct PairingTensor {
  Matrix12 g;
  Matrix12 ginv;
};

PairingTensor pairing_tensor();

/// Built on first use and immutable afterwards; safe to share across threads.
const PairingTensor& shared_pairing();

/// T^ij = T_{3-i,2-j} - T_{4-i,1-j} + T_{5-i,-j}, indexed by flat(i, j).
std::array<CohClass, kBasisSize> dual_basis();

/// Kunneth coefficients of the diagonal class: delta[u][v] multiplies
/// T_u (x) T_v.
struct DiagonalTensor {
  Matrix12 delta;
};

/// Closed-form diagonal class. Throws std::logic_error if it disagrees with
/// the inverse pairing matrix.
DiagonalTensor diagonal();

}  // namespace planar_gw::ring
