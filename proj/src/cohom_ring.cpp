#include "planar_gw/cohom_ring.hpp"

#include <algorithm>
#include <stdexcept>

namespace planar_gw::ring {

std::string basis_name(BasisIndex b) { return "T_" + std::to_string(b.i) + std::to_string(b.j); }

CohClass CohClass::basis(int i, int j) {
  CohClass c;
  if (BasisIndex::in_range(i, j)) c(i, j) = 1;
  return c;
}

CohClass CohClass::monomial(int a_exp, int h_exp) {
  const Monomial m{a_exp, h_exp, Rational(1)};
  return reduce(std::span<const Monomial>(&m, 1));
}

bool CohClass::is_zero() const {
  return std::all_of(coeff_.begin(), coeff_.end(), [](const Rational& c) { return c == 0; });
}

bool CohClass::is_homogeneous() const {
  int deg = -1;
  for (int k = 0; k < kBasisSize; ++k) {
    if (coeff_[k] == 0) continue;
    const int d = BasisIndex::from_flat(k).degree();
    if (deg >= 0 && d != deg) return false;
    deg = d;
  }
  return true;
}

CohClass& CohClass::operator+=(const CohClass& other) {
  for (int k = 0; k < kBasisSize; ++k) coeff_[k] += other.coeff_[k];
  return *this;
}

CohClass& CohClass::operator-=(const CohClass& other) {
  for (int k = 0; k < kBasisSize; ++k) coeff_[k] -= other.coeff_[k];
  return *this;
}

CohClass& CohClass::operator*=(const Rational& scalar) {
  for (auto& c : coeff_) c *= scalar;
  return *this;
}

CohClass reduce(std::span<const Monomial> raw) {
  int max_a = 0;
  int max_h = 0;
  for (const auto& m : raw) {
    if (m.a_exp < 0 || m.h_exp < 0) throw std::invalid_argument("reduce: negative exponent");
    max_a = std::max(max_a, m.a_exp);
    max_h = std::max(max_h, m.h_exp);
  }
  // Each rewrite step trades one H for at most three a's.
  const int a_rows = max_a + 3 * max_h + 1;
  std::vector<std::vector<Rational>> work(a_rows, std::vector<Rational>(max_h + 1));
  for (const auto& m : raw) work[m.a_exp][m.h_exp] += m.coeff;

  // H^3 -> a H^2 - a^2 H + a^3, highest H-power first.
  for (int h = max_h; h > kMaxHExp; --h) {
    for (int a = 0; a < a_rows; ++a) {
      const Rational c = work[a][h];
      if (c == 0) continue;
      work[a][h] = 0;
      work[a + 1][h - 1] += c;
      work[a + 2][h - 2] -= c;
      work[a + 3][h - 3] += c;
    }
  }

  CohClass out;
  for (int a = 0; a <= std::min(kMaxAExp, a_rows - 1); ++a) {
    for (int h = 0; h <= std::min(kMaxHExp, max_h); ++h) out(a, h) = work[a][h];
  }
  return out;
}

CohClass operator*(const CohClass& x, const CohClass& y) {
  std::vector<Monomial> terms;
  for (int u = 0; u < kBasisSize; ++u) {
    if (x.coefficients()[u] == 0) continue;
    const auto bu = BasisIndex::from_flat(u);
    for (int v = 0; v < kBasisSize; ++v) {
      if (y.coefficients()[v] == 0) continue;
      const auto bv = BasisIndex::from_flat(v);
      terms.push_back({bu.i + bv.i, bu.j + bv.j, x.coefficients()[u] * y.coefficients()[v]});
    }
  }
  return reduce(terms);
}

CohClass mul(const CohClass& x, const CohClass& y) { return x * y; }

Rational integrate(const CohClass& x) { return x(kMaxAExp, kMaxHExp); }

Matrix12 identity_matrix() {
  Matrix12 m{};
  for (int k = 0; k < kBasisSize; ++k) m[k][k] = 1;
  return m;
}

Matrix12 matmul(const Matrix12& x, const Matrix12& y) {
  Matrix12 out{};
  for (int r = 0; r < kBasisSize; ++r) {
    for (int k = 0; k < kBasisSize; ++k) {
      if (x[r][k] == 0) continue;
      for (int c = 0; c < kBasisSize; ++c) out[r][c] += x[r][k] * y[k][c];
    }
  }
  return out;
}

Matrix12 invert(const Matrix12& m) {
  Matrix12 a = m;
  Matrix12 inv = identity_matrix();
  for (int col = 0; col < kBasisSize; ++col) {
    int pivot = col;
    while (pivot < kBasisSize && a[pivot][col] == 0) ++pivot;
    if (pivot == kBasisSize) throw std::domain_error("invert: singular matrix");
    std::swap(a[pivot], a[col]);
    std::swap(inv[pivot], inv[col]);
    const Rational p = a[col][col];
    for (int c = 0; c < kBasisSize; ++c) {
      a[col][c] /= p;
      inv[col][c] /= p;
    }
    for (int r = 0; r < kBasisSize; ++r) {
      if (r == col || a[r][col] == 0) continue;
      const Rational f = a[r][col];
      for (int c = 0; c < kBasisSize; ++c) {
        a[r][c] -= f * a[col][c];
        inv[r][c] -= f * inv[col][c];
      }
    }
  }
  return inv;
}

PairingTensor pairing_tensor() {
  PairingTensor t;
  for (int u = 0; u < kBasisSize; ++u) {
    for (int v = 0; v < kBasisSize; ++v) {
      t.g[u][v] = integrate(CohClass::basis(BasisIndex::from_flat(u)) * CohClass::basis(BasisIndex::from_flat(v)));
    }
  }
  t.ginv = invert(t.g);
  if (matmul(t.g, t.ginv) != identity_matrix()) throw std::logic_error("pairing_tensor: g * ginv != I");
  return t;
}

const PairingTensor& shared_pairing() {
  static const PairingTensor instance = pairing_tensor();
  return instance;
}

std::array<CohClass, kBasisSize> dual_basis() {
  std::array<CohClass, kBasisSize> out;
  for (int k = 0; k < kBasisSize; ++k) {
    const auto [i, j] = BasisIndex::from_flat(k);
    out[k] = CohClass::basis(3 - i, 2 - j) - CohClass::basis(4 - i, 1 - j) + CohClass::basis(5 - i, -j);
  }
  return out;
}

DiagonalTensor diagonal() {
  DiagonalTensor t{};
  auto add = [&](int i, int j, int k, int l, int sign) {
    if (BasisIndex::in_range(i, j) && BasisIndex::in_range(k, l)) {
      t.delta[BasisIndex{i, j}.flat()][BasisIndex{k, l}.flat()] += sign;
    }
  };
  for (int i = 0; i <= 3; ++i) {
    for (int j = 0; j <= 2; ++j) add(i, j, 3 - i, 2 - j, +1);
  }
  for (int i = 1; i <= 3; ++i) {
    for (int j = 0; j <= 1; ++j) add(i, j, 4 - i, 1 - j, -1);
  }
  add(2, 0, 3, 0, +1);
  add(3, 0, 2, 0, +1);

  if (t.delta != shared_pairing().ginv) {
    throw std::logic_error("diagonal: closed form disagrees with the inverse pairing");
  }
  return t;
}

}  // namespace planar_gw::ring
