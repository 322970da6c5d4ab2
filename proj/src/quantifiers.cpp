#include "dqd/quantifiers.hpp"

#include <algorithm>
#include <functional>

namespace dqd {

namespace {

// sy (x) sy in the real local basis: antidiagonal (-1, 1, 1, -1).
constexpr std::array<double, 4> kFlipSign{-1.0, 1.0, 1.0, -1.0};

}  // namespace

CoherenceDecomposition coherence_decomposition(const SymMatrix4& rho) {
  auto r = [&rho](int m, int n) { return rho(m - 1, n - 1); };
  CoherenceDecomposition c;
  c.total = l1_coherence(rho);
  c.local = 2.0 * (std::abs(r(1, 3) + r(2, 4)) + std::abs(r(1, 2) + r(3, 4)));
  c.correlated = c.total - c.local;
  return c;
}

SymMatrix4 spin_flipped(const SymMatrix4& rho) {
  // (Y rho Y)_ij = s_i s_j rho_{3-i, 3-j}
  SymMatrix4 out;
  for (int i = 0; i < 4; ++i)
    for (int j = i; j < 4; ++j) out.set(i, j, kFlipSign[i] * kFlipSign[j] * rho(3 - i, 3 - j));
  return out;
}

double concurrence_from_factor(const Matrix4& w) {
  // tau = W^T Y W
  Matrix4 yw{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) yw[i][j] = kFlipSign[i] * w[3 - i][j];
  const SymMatrix4 tau = SymMatrix4::from_rows(multiply(transpose(w), yw));

  Vec4 s = eigvals_sym4(tau);
  for (double& x : s) x = std::abs(x);
  std::sort(s.begin(), s.end(), std::greater<>());
  const double c = s[0] - s[1] - s[2] - s[3];
  return std::clamp(c, 0.0, 1.0);
}

double concurrence(const SymMatrix4& rho) { return concurrence_from_factor(sqrt_psd4(rho).rows()); }

double concurrence(const ThermalState& state) {
  Matrix4 w{};
  for (int k = 0; k < 4; ++k) {
    const double amp = std::sqrt(state.populations[k]);
    for (int i = 0; i < 4; ++i) w[i][k] = state.eigen.vectors[i][k] * amp;
  }
  return concurrence_from_factor(w);
}

QuantifierRecord evaluate_point(const ModelParams& p) {
  const ThermalState st = thermal_state(p);
  const CoherenceDecomposition coh = coherence_decomposition(st.rho);
  QuantifierRecord rec;
  rec.params = p;
  rec.populations = st.populations;
  rec.c_total = coh.total;
  rec.c_local = coh.local;
  rec.c_correlated = coh.correlated;
  rec.concurrence = concurrence(st);
  return rec;
}

}  // namespace dqd
