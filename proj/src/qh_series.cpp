#include "planar_gw/qh_series.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

namespace planar_gw::qh {

using ring::kBasisSize;

SeriesBounds meet(const SeriesBounds& x, const SeriesBounds& y) {
  return {std::min(x.d_max, y.d_max), std::min(x.p_max, y.p_max), std::min(x.s_max, y.s_max),
          std::min(x.theta_max, y.theta_max)};
}

// ---------------------------------------------------------------------------
// NovikovSeries

NovikovSeries::NovikovSeries(SeriesBounds bounds) : bounds_(bounds) {}

NovikovSeries NovikovSeries::constant(const Rational& c, SeriesBounds bounds) {
  NovikovSeries out(bounds);
  out.add_term({}, c);
  return out;
}

bool NovikovSeries::within(const SeriesExponent& e) const {
  return e.d >= 0 && e.p >= 0 && e.s >= 0 && e.theta >= 0 && e.d <= bounds_.d_max && e.p <= bounds_.p_max &&
         e.s <= bounds_.s_max && e.theta <= bounds_.theta_max;
}

Rational NovikovSeries::coefficient(const SeriesExponent& e) const {
  if (auto it = terms_.find(e); it != terms_.end()) return it->second;
  return 0;
}

void NovikovSeries::add_term(const SeriesExponent& e, const Rational& c) {
  if (c == 0 || !within(e)) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

NovikovSeries& NovikovSeries::operator+=(const NovikovSeries& other) {
  bounds_ = meet(bounds_, other.bounds_);
  std::erase_if(terms_, [this](const auto& kv) { return !within(kv.first); });
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

NovikovSeries& NovikovSeries::operator-=(const NovikovSeries& other) {
  bounds_ = meet(bounds_, other.bounds_);
  std::erase_if(terms_, [this](const auto& kv) { return !within(kv.first); });
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

NovikovSeries& NovikovSeries::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

NovikovSeries operator*(const NovikovSeries& x, const NovikovSeries& y) {
  NovikovSeries out(meet(x.bounds_, y.bounds_));
  for (const auto& [ex, cx] : x.terms_) {
    if (ex.d > out.bounds_.d_max || ex.p > out.bounds_.p_max || ex.s > out.bounds_.s_max ||
        ex.theta > out.bounds_.theta_max) {
      continue;
    }
    for (const auto& [ey, cy] : y.terms_) {
      out.add_term({ex.d + ey.d, ex.p + ey.p, ex.s + ey.s, ex.theta + ey.theta}, cx * cy);
    }
  }
  return out;
}

NovikovSeries NovikovSeries::d_t02(int times) const {
  if (times < 0) throw std::invalid_argument("d_t02: negative order");
  NovikovSeries out = *this;
  for (int n = 0; n < times; ++n) {
    SeriesBounds b = out.bounds_;
    b.p_max -= 1;
    NovikovSeries next(b);
    for (const auto& [e, c] : out.terms_) {
      if (e.p > 0) next.add_term({e.d, e.p - 1, e.s, e.theta}, c * e.p);
    }
    out = std::move(next);
  }
  return out;
}

NovikovSeries NovikovSeries::d_t03(int times) const {
  if (times < 0) throw std::invalid_argument("d_t03: negative order");
  NovikovSeries out = *this;
  for (int n = 0; n < times; ++n) {
    SeriesBounds b = out.bounds_;
    b.s_max -= 1;
    NovikovSeries next(b);
    for (const auto& [e, c] : out.terms_) {
      if (e.s > 0) next.add_term({e.d, e.p, e.s - 1, e.theta}, c * e.s);
    }
    out = std::move(next);
  }
  return out;
}

NovikovSeries NovikovSeries::d_t01(int times) const {
  if (times < 0) throw std::invalid_argument("d_t01: negative order");
  NovikovSeries out(bounds_);
  for (const auto& [e, c] : terms_) {
    BigInt w;
    mpz_ui_pow_ui(w.get_mpz_t(), static_cast<unsigned long>(e.d), static_cast<unsigned long>(times));
    out.add_term(e, c * Rational(w));
  }
  return out;
}

NovikovSeries NovikovSeries::times_u(int k) const {
  if (k < 0) throw std::invalid_argument("times_u: negative shift");
  NovikovSeries out(bounds_);
  for (const auto& [e, c] : terms_) out.add_term({e.d, e.p, e.s, e.theta + k}, c);
  return out;
}

NovikovSeries NovikovSeries::truncated(const SeriesBounds& bounds) const {
  NovikovSeries out(meet(bounds_, bounds));
  for (const auto& [e, c] : terms_) out.add_term(e, c);
  return out;
}

namespace {

Rational factorial(int n) {
  BigInt f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return Rational(f);
}

}  // namespace

NovikovSeries planar_potential(const SeriesBounds& bounds, gw::MemoTable& memo) {
  NovikovSeries out(bounds);
  for (int d = 1; d <= bounds.d_max; ++d) {
    for (int s = 0; s <= std::min(bounds.s_max, 3); ++s) {
      for (int theta = 0; theta <= std::min(bounds.theta_max, 3); ++theta) {
        const int r = 3 * d + 2 - 2 * s - theta;
        if (r < 0 || r > bounds.p_max) continue;
        const Rational n = gw::n_planar({d, r, s, theta}, memo);
        out.add_term({d, r, s, theta}, n / (factorial(r) * factorial(s)));
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Three-point functions and the quantum product

Rational phi3_classical(const CohClass& u, const CohClass& v, const CohClass& w) {
  return ring::integrate(u * v * w);
}

Rational phi3_quantum(BasisIndex u, BasisIndex v, BasisIndex w, int d, gw::MemoTable& memo) {
  if (d < 1) throw std::invalid_argument("phi3_quantum: d must be >= 1");
  const std::array<int, 3> h_exps{u.j, v.j, w.j};
  return gw::gw_invariant(d, u.i + v.i + w.i, h_exps, memo);
}

QuantumElement QuantumElement::zero(int d_max) {
  if (d_max < 0) throw std::invalid_argument("QuantumElement: negative d_max");
  return {std::vector<CohClass>(static_cast<std::size_t>(d_max) + 1)};
}

QuantumElement QuantumElement::unit(int d_max) { return from_class(CohClass::unit(), d_max); }

QuantumElement QuantumElement::from_class(const CohClass& c, int d_max) {
  QuantumElement out = zero(d_max);
  out.components[0] = c;
  return out;
}

QuantumElement operator+(QuantumElement x, const QuantumElement& y) {
  if (x.components.size() != y.components.size()) throw std::invalid_argument("QuantumElement: degree mismatch");
  for (std::size_t k = 0; k < x.components.size(); ++k) x.components[k] += y.components[k];
  return x;
}

QuantumElement operator-(QuantumElement x, const QuantumElement& y) {
  if (x.components.size() != y.components.size()) throw std::invalid_argument("QuantumElement: degree mismatch");
  for (std::size_t k = 0; k < x.components.size(); ++k) x.components[k] -= y.components[k];
  return x;
}

QuantumCohomology::QuantumCohomology(int d_max, gw::MemoTable& memo, int p_max, int s_max)
    : bounds_{d_max, p_max, s_max, 0} {
  if (d_max < 0 || p_max < 0 || s_max < 0) throw std::invalid_argument("QuantumCohomology: negative bound");
  constexpr int n3 = kBasisSize * kBasisSize * kBasisSize;
  phi3_.assign(n3, NovikovSeries(bounds_));

  for (int a = 0; a < kBasisSize; ++a) {
    for (int b = a; b < kBasisSize; ++b) {
      for (int c = b; c < kBasisSize; ++c) {
        const auto u = BasisIndex::from_flat(a);
        const auto v = BasisIndex::from_flat(b);
        const auto w = BasisIndex::from_flat(c);
        NovikovSeries series(bounds_);
        series.add_term({}, phi3_classical(CohClass::basis(u), CohClass::basis(v), CohClass::basis(w)));
        if (u.j > 0 && v.j > 0 && w.j > 0) {
          for (int d = 1; d <= d_max; ++d) {
            for (int p = 0; p <= p_max; ++p) {
              for (int s = 0; s <= s_max; ++s) {
                std::vector<int> insertions{u.j, v.j, w.j};
                insertions.insert(insertions.end(), p, 2);
                insertions.insert(insertions.end(), s, 3);
                const Rational value = gw::gw_invariant(d, u.i + v.i + w.i, insertions, memo);
                series.add_term({d, p, s, 0}, value / (factorial(p) * factorial(s)));
              }
            }
          }
        }
        // Fill all six orderings.
        std::array<int, 3> idx{a, b, c};
        do {
          phi3_[(idx[0] * kBasisSize + idx[1]) * kBasisSize + idx[2]] = series;
        } while (std::next_permutation(idx.begin(), idx.end()));
      }
    }
  }

  const auto& ginv = ring::shared_pairing().ginv;
  contracted_.assign(n3, NovikovSeries(bounds_));
  for (int i = 0; i < kBasisSize; ++i) {
    for (int j = 0; j < kBasisSize; ++j) {
      for (int e = 0; e < kBasisSize; ++e) {
        const auto& p = phi3_[(i * kBasisSize + j) * kBasisSize + e];
        if (p.is_zero()) continue;
        for (int f = 0; f < kBasisSize; ++f) {
          if (ginv[e][f] == 0) continue;
          contracted_[(i * kBasisSize + j) * kBasisSize + f] += p * ginv[e][f];
        }
      }
    }
  }

  basis_products_.assign(kBasisSize * kBasisSize, QuantumElement::zero(d_max));
  for (int u = 0; u < kBasisSize; ++u) {
    for (int v = 0; v < kBasisSize; ++v) {
      auto& prod = basis_products_[u * kBasisSize + v];
      for (int f = 0; f < kBasisSize; ++f) {
        for (const auto& [e, c] : contracted_[(u * kBasisSize + v) * kBasisSize + f].terms()) {
          if (e.p == 0 && e.s == 0 && e.theta == 0) prod.components[e.d][BasisIndex::from_flat(f)] += c;
        }
      }
    }
  }
}

const NovikovSeries& QuantumCohomology::phi3(BasisIndex u, BasisIndex v, BasisIndex w) const {
  return phi3_[triple_index(u, v, w)];
}

const QuantumElement& QuantumCohomology::basis_product(BasisIndex u, BasisIndex v) const {
  return basis_products_[u.flat() * kBasisSize + v.flat()];
}

QuantumElement QuantumCohomology::product(const QuantumElement& x, const QuantumElement& y) const {
  const int top = std::min({x.d_max(), y.d_max(), d_max()});
  QuantumElement out = QuantumElement::zero(top);
  for (int a = 0; a <= top; ++a) {
    for (int b = 0; a + b <= top; ++b) {
      for (int u = 0; u < kBasisSize; ++u) {
        const Rational& xu = x.components[a].coefficients()[u];
        if (xu == 0) continue;
        for (int v = 0; v < kBasisSize; ++v) {
          const Rational& yv = y.components[b].coefficients()[v];
          if (yv == 0) continue;
          const auto& tuv = basis_products_[u * kBasisSize + v];
          for (int c = 0; a + b + c <= top; ++c) out.components[a + b + c] += tuv.components[c] * (xu * yv);
        }
      }
    }
  }
  return out;
}

NovikovSeries QuantumCohomology::wdvv_defect(BasisIndex i, BasisIndex j, BasisIndex k, BasisIndex l) const {
  NovikovSeries defect(bounds_);
  for (int f = 0; f < kBasisSize; ++f) {
    const auto bf = BasisIndex::from_flat(f);
    const auto& left = contracted(i, j, bf);
    if (!left.is_zero()) defect += left * phi3(bf, k, l);
    const auto& right = contracted(i, k, bf);
    if (!right.is_zero()) defect -= right * phi3(bf, j, l);
  }
  return defect;
}

QuantumElement quantum_product(const QuantumElement& x, const QuantumElement& y, int d_max, gw::MemoTable& memo) {
  return QuantumCohomology(d_max, memo).product(x, y);
}

bool wdvv_pairing_check(BasisIndex i, BasisIndex j, BasisIndex k, BasisIndex l, int d_max, gw::MemoTable& memo) {
  return QuantumCohomology(d_max, memo).wdvv_holds(i, j, k, l);
}

// ---------------------------------------------------------------------------
// Reduced WDVV equation

namespace {

// sum_{e,f} Phi0_{ABe} delta^{ef} T_f.
CohClass classical_contraction(const CohClass& x, const CohClass& y, const ring::Matrix12& delta) {
  CohClass out;
  for (int e = 0; e < kBasisSize; ++e) {
    const Rational phi = phi3_classical(x, y, CohClass::basis(BasisIndex::from_flat(e)));
    if (phi == 0) continue;
    for (int f = 0; f < kBasisSize; ++f) {
      if (delta[e][f] != 0) out += CohClass::basis(BasisIndex::from_flat(f)) * (phi * delta[e][f]);
    }
  }
  return out;
}

}  // namespace

Wdvv1Structure derive_wdvv1_structure() {
  const auto delta = ring::diagonal().delta;
  Wdvv1Structure st;
  for (int e = 0; e < kBasisSize; ++e) {
    for (int f = 0; f < kBasisSize; ++f) {
      const auto be = BasisIndex::from_flat(e);
      const auto bf = BasisIndex::from_flat(f);
      if (delta[e][f] != 0 && be.j > 0 && bf.j > 0) st.quantum_pairs.push_back({be, bf, delta[e][f]});
    }
  }
  const CohClass h = CohClass::basis(0, 1);
  const CohClass h2 = CohClass::basis(0, 2);
  st.lhs_left = classical_contraction(h, h, delta);
  st.lhs_right = classical_contraction(h2, h2, delta);
  st.rhs_left = classical_contraction(h, h2, delta);
  st.rhs_right = classical_contraction(h2, h, delta);
  return st;
}

bool Wdvv1Structure::matches_reduced_form() const {
  std::vector<std::tuple<BasisIndex, BasisIndex, Rational>> got;
  for (const auto& p : quantum_pairs) got.emplace_back(p.e, p.f, p.coeff);
  std::vector<std::tuple<BasisIndex, BasisIndex, Rational>> want;
  for (int i = 0; i <= 3; ++i) want.emplace_back(BasisIndex{i, 1}, BasisIndex{3 - i, 1}, Rational(1));
  std::sort(got.begin(), got.end());
  std::sort(want.begin(), want.end());

  const CohClass h3 = CohClass::basis(1, 2) - CohClass::basis(2, 1) + CohClass::basis(3, 0);
  return got == want && lhs_left == CohClass::basis(0, 2) && lhs_right.is_zero() && rhs_left == h3 &&
         rhs_right == h3;
}

Wdvv1Report wdvv1_coefficient_identity(const gw::GWKey& key, gw::MemoTable& memo) {
  gw::validate(key);
  if (!key.balanced()) throw std::invalid_argument("wdvv1: key (" + gw::to_string(key) + ") is not balanced");
  if (key.r < 3) throw std::invalid_argument("wdvv1: needs r >= 3, got (" + gw::to_string(key) + ")");
  const auto [d, r, s, theta] = key;

  Wdvv1Report report;
  report.key = key;
  report.structure_ok = derive_wdvv1_structure().matches_reduced_form();
  report.table_value = gw::n_planar(key, memo);

  // Everything is multiplied through by u^3 so that no u-exponent is negative.
  const NovikovSeries psi = planar_potential({d, r, s, theta + 3}, memo);
  const NovikovSeries p020202 = psi.d_t02(3).times_u(3);
  const NovikovSeries p0101 = psi.d_t01(3);              // Phi_{01,01,i1}
  const NovikovSeries p0202 = psi.d_t01(1).d_t02(2);     // Phi_{k1,02,02}
  const NovikovSeries p0102 = psi.d_t01(2).d_t02(1);     // Phi_{01,02,i1}
  const NovikovSeries p12 = psi.d_t01(1).d_t02(2).times_u(2);  // Phi_{01,02,12}
  const NovikovSeries p21 = psi.d_t01(2).d_t02(1).times_u(1);  // Phi_{01,02,21}

  const NovikovSeries lhs_split = p0101 * p0202;
  const NovikovSeries rhs_split = p0102 * p0102;
  const NovikovSeries rhs_total = (p12 - p21) * Rational(2) + rhs_split - lhs_split;

  const SeriesExponent target{d, r - 3, s, theta + 3};
  const Rational scale = factorial(r - 3) * factorial(s);
  report.lhs = p020202.coefficient(target) * scale;
  report.rhs = rhs_total.coefficient(target) * scale;
  report.ok = report.structure_ok && report.lhs == report.rhs && report.lhs == report.table_value;
  return report;
}

}  // namespace planar_gw::qh
