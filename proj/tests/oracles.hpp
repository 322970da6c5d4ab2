#pragma once

// Independent reference computations for the test suites. Nothing here calls
// into the eigensolver or the entry-level formulas it is used to check.

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "dqd/hermitian_core.hpp"
#include "dqd/model.hpp"

namespace oracle {

using dqd::Matrix4;
using Matrix2 = std::array<std::array<double, 2>, 2>;

inline constexpr Matrix2 kI2{{{1, 0}, {0, 1}}};
inline constexpr Matrix2 kSx{{{0, 1}, {1, 0}}};
inline constexpr Matrix2 kSz{{{1, 0}, {0, -1}}};
// sigma_y = i J with J real antisymmetric, so sigma_y (x) sigma_y = -(J (x) J).
inline constexpr Matrix2 kJ{{{0, -1}, {1, 0}}};

inline Matrix4 kron(const Matrix2& a, const Matrix2& b) {
  Matrix4 k{};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int r = 0; r < 2; ++r)
        for (int s = 0; s < 2; ++s) k[2 * i + r][2 * j + s] = a[i][j] * b[r][s];
  return k;
}

inline Matrix4 sy_sy() {
  Matrix4 m = kron(kJ, kJ);
  for (auto& row : m)
    for (double& x : row) x = -x;
  return m;
}

inline Matrix4 add(const Matrix4& a, const Matrix4& b, double sb = 1.0) {
  Matrix4 c{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) c[i][j] = a[i][j] + sb * b[i][j];
  return c;
}

inline double trace_product(const dqd::SymMatrix4& rho, const Matrix4& op) {
  double t = 0.0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) t += rho(i, j) * op[j][i];
  return t;
}

// H assembled from its Pauli-sum form.
inline Matrix4 hamiltonian_from_paulis(double omega, double da, double db, double v) {
  Matrix4 h{};
  h = add(h, kron(kSz, kI2), omega);
  h = add(h, kron(kI2, kSz), omega);
  h = add(h, kron(kSx, kI2), da);
  h = add(h, kron(kI2, kSx), db);
  h = add(h, kron(kSz, kSz), v);
  return h;
}

// Bloch coefficients by tr(rho sigma_i (x) sigma_j).
struct TraceCoefficients {
  double a1, a2, b1, b2, t11, t22, t33, t13, t31;
};

inline TraceCoefficients trace_coefficients(const dqd::SymMatrix4& rho) {
  return {trace_product(rho, kron(kSx, kI2)), trace_product(rho, kron(kSz, kI2)),
          trace_product(rho, kron(kI2, kSx)), trace_product(rho, kron(kI2, kSz)),
          trace_product(rho, kron(kSx, kSx)), trace_product(rho, sy_sy()),
          trace_product(rho, kron(kSz, kSz)), trace_product(rho, kron(kSx, kSz)),
          trace_product(rho, kron(kSz, kSx))};
}

// Characteristic polynomial det(lambda I - A) = l^4 + c[3] l^3 + c[2] l^2 +
// c[1] l + c[0] by Faddeev-LeVerrier in long double.
inline std::array<long double, 4> char_poly(const Matrix4& a) {
  using LM = std::array<std::array<long double, 4>, 4>;
  LM m{};
  LM al{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) al[i][j] = a[i][j];
  std::array<long double, 5> c{};
  c[4] = 1.0L;
  for (int k = 1; k <= 4; ++k) {
    LM next{};
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) {
        for (int l = 0; l < 4; ++l) next[i][j] += al[i][l] * m[l][j];
        if (i == j) next[i][j] += c[4 - k + 1];
      }
    m = next;
    long double tr = 0.0L;
    for (int i = 0; i < 4; ++i)
      for (int l = 0; l < 4; ++l) tr += al[i][l] * m[l][i];
    c[4 - k] = -tr / k;
  }
  return {c[0], c[1], c[2], c[3]};
}

inline long double poly_eval(const std::array<long double, 4>& c, long double x) {
  return (((x + c[3]) * x + c[2]) * x + c[1]) * x + c[0];
}

// Simple roots of the characteristic polynomial, ascending, by sign-change
// scan over the Gershgorin interval followed by bisection to full long double
// resolution. Only valid for matrices with four distinct eigenvalues.
inline std::vector<double> eigenvalues_by_bisection(const Matrix4& a) {
  const auto c = char_poly(a);
  long double lo = 0, hi = 0;
  for (int i = 0; i < 4; ++i) {
    long double r = 0;
    for (int j = 0; j < 4; ++j)
      if (j != i) r += std::fabs(static_cast<long double>(a[i][j]));
    lo = std::min(lo, a[i][i] - r);
    hi = std::max(hi, a[i][i] + r);
  }
  lo -= 1;
  hi += 1;
  std::vector<double> roots;
  const int kScan = 200000;
  long double x0 = lo;
  long double f0 = poly_eval(c, x0);
  for (int s = 1; s <= kScan; ++s) {
    const long double x1 = lo + (hi - lo) * s / kScan;
    const long double f1 = poly_eval(c, x1);
    if (f0 == 0.0L) {
      roots.push_back(static_cast<double>(x0));
    } else if ((f0 < 0) != (f1 < 0) && f1 != 0.0L) {
      long double a0 = x0, b0 = x1, fa = f0;
      for (int it = 0; it < 200 && b0 - a0 > 0; ++it) {
        const long double m = 0.5L * (a0 + b0);
        if (m <= a0 || m >= b0) break;
        const long double fm = poly_eval(c, m);
        if ((fm < 0) == (fa < 0)) {
          a0 = m;
          fa = fm;
        } else {
          b0 = m;
        }
      }
      roots.push_back(static_cast<double>(0.5L * (a0 + b0)));
    }
    x0 = x1;
    f0 = f1;
  }
  return roots;
}

// Closed-form concurrence of an X state (nonzero entries on the diagonal and
// antidiagonal only).
inline double x_state_concurrence(const dqd::SymMatrix4& r) {
  const double c1 = std::abs(r(1, 2)) - std::sqrt(r(0, 0) * r(3, 3));
  const double c2 = std::abs(r(0, 3)) - std::sqrt(r(1, 1) * r(2, 2));
  return 2.0 * std::max({0.0, c1, c2});
}

// Pure-state concurrence |<psi|sy sy|psi*>| for real psi.
inline double pure_state_concurrence(const dqd::Vec4& psi) {
  return 2.0 * std::abs(psi[0] * psi[3] - psi[1] * psi[2]);
}

// Total and local l1 coherence, entry by entry in 1-indexed form.
struct CoherenceTriple {
  double total, local, correlated;
};

inline CoherenceTriple coherence_by_entries(const dqd::SymMatrix4& rho) {
  auto r = [&](int m, int n) { return rho(m - 1, n - 1); };
  const double total = 2 * (std::abs(r(1, 2)) + std::abs(r(1, 3)) + std::abs(r(1, 4)) +
                            std::abs(r(2, 3)) + std::abs(r(2, 4)) + std::abs(r(3, 4)));
  const double local = 2 * (std::abs(r(1, 3) + r(2, 4)) + std::abs(r(1, 2) + r(3, 4)));
  const double correlated = 2 * (std::abs(r(1, 2)) + std::abs(r(1, 3)) + std::abs(r(1, 4)) +
                                 std::abs(r(2, 3)) + std::abs(r(2, 4)) + std::abs(r(3, 4)) -
                                 (std::abs(r(1, 3) + r(2, 4)) + std::abs(r(1, 2) + r(3, 4))));
  return {total, local, correlated};
}

// Eigenvalues of a real symmetric 3x3 by the trigonometric cubic solution,
// ascending.
inline std::array<double, 3> sym3_eigenvalues(const std::array<std::array<double, 3>, 3>& a) {
  const double p1 = a[0][1] * a[0][1] + a[0][2] * a[0][2] + a[1][2] * a[1][2];
  const double q = (a[0][0] + a[1][1] + a[2][2]) / 3.0;
  std::array<double, 3> e{};
  if (p1 == 0.0) {
    e = {a[0][0], a[1][1], a[2][2]};
    std::sort(e.begin(), e.end());
    return e;
  }
  const double p2 = (a[0][0] - q) * (a[0][0] - q) + (a[1][1] - q) * (a[1][1] - q) +
                    (a[2][2] - q) * (a[2][2] - q) + 2.0 * p1;
  const double p = std::sqrt(p2 / 6.0);
  std::array<std::array<double, 3>, 3> b{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) b[i][j] = (a[i][j] - (i == j ? q : 0.0)) / p;
  const double det_b = b[0][0] * (b[1][1] * b[2][2] - b[1][2] * b[2][1]) -
                       b[0][1] * (b[1][0] * b[2][2] - b[1][2] * b[2][0]) +
                       b[0][2] * (b[1][0] * b[2][1] - b[1][1] * b[2][0]);
  const double r = std::clamp(det_b / 2.0, -1.0, 1.0);
  const double phi = std::acos(r) / 3.0;
  e[2] = q + 2.0 * p * std::cos(phi);
  e[0] = q + 2.0 * p * std::cos(phi + 2.0 * std::numbers::pi / 3.0);
  e[1] = 3.0 * q - e[0] - e[2];
  std::sort(e.begin(), e.end());
  return e;
}

// Symmetric-sector gap from the explicit 3x3 block of H in the basis
// (|ll>, (|lr>+|rl>)/sqrt2, |rr>).
inline double symmetric_sector_gap(double omega, double da, double db, double v) {
  const double s = (da + db) / std::sqrt(2.0);
  const std::array<std::array<double, 3>, 3> block{{
      {v + 2 * omega, s, 0.0},
      {s, -v, s},
      {0.0, s, v - 2 * omega},
  }};
  const auto e = sym3_eigenvalues(block);
  return e[1] - e[0];
}

// ---- random generators (fixed seeds at the call sites) ----

inline dqd::SymMatrix4 random_symmetric(std::mt19937_64& rng, double bound) {
  std::uniform_real_distribution<double> u(-bound, bound);
  dqd::SymMatrix4 m;
  for (int i = 0; i < 4; ++i)
    for (int j = i; j < 4; ++j) m.set(i, j, u(rng));
  return m;
}

// W W^T / tr for a random real W: a generic full-rank real density matrix.
inline dqd::SymMatrix4 random_density(std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  Matrix4 w{};
  for (auto& row : w)
    for (double& x : row) x = g(rng);
  Matrix4 rho{};
  double tr = 0.0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      for (int k = 0; k < 4; ++k) rho[i][j] += w[i][k] * w[j][k];
      if (i == j) tr += rho[i][i];
    }
  for (auto& row : rho)
    for (double& x : row) x /= tr;
  return dqd::SymMatrix4::from_rows(rho);
}

// Random real X state: positive populations, coherences inside the
// positivity bounds |r14| <= sqrt(r11 r44), |r23| <= sqrt(r22 r33).
inline dqd::SymMatrix4 random_x_state(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::array<double, 4> p{};
  double s = 0.0;
  for (double& x : p) {
    x = u(rng) + 1e-3;
    s += x;
  }
  for (double& x : p) x /= s;
  const double sign14 = u(rng) < 0.5 ? -1.0 : 1.0;
  const double sign23 = u(rng) < 0.5 ? -1.0 : 1.0;
  dqd::SymMatrix4 m = dqd::SymMatrix4::diagonal(p);
  m.set(0, 3, sign14 * u(rng) * std::sqrt(p[0] * p[3]));
  m.set(1, 2, sign23 * u(rng) * std::sqrt(p[1] * p[2]));
  return m;
}

inline dqd::ModelParams random_params(std::mt19937_64& rng, double max_energy, double t_lo,
                                      double t_hi) {
  std::uniform_real_distribution<double> e(0.0, max_energy);
  std::uniform_real_distribution<double> logt(std::log(t_lo), std::log(t_hi));
  dqd::ModelParams p;
  p.omega = e(rng);
  p.delta_a = e(rng);
  p.delta_b = e(rng);
  p.coulomb = e(rng);
  p.temperature = std::exp(logt(rng));
  return p;
}

inline dqd::SymMatrix4 bell_projector() {
  // (|l_A r_B> + |r_A l_B>)/sqrt2
  dqd::SymMatrix4 m;
  m.set(1, 1, 0.5);
  m.set(2, 2, 0.5);
  m.set(1, 2, 0.5);
  return m;
}

inline dqd::SymMatrix4 product_state(const dqd::SymMatrix2& a, const dqd::SymMatrix2& b) {
  dqd::SymMatrix4 m;
  for (int i = 0; i < 2; ++i)
    for (int r = 0; r < 2; ++r)
      for (int j = 0; j < 2; ++j)
        for (int s = 0; s < 2; ++s) {
          const int row = 2 * i + r;
          const int col = 2 * j + s;
          if (row <= col) m.set(row, col, a(i, j) * b(r, s));
        }
  return m;
}

}  // namespace oracle
