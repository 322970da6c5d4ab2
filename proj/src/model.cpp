#include "dqd/model.hpp"

#include <algorithm>
#include <string>

namespace dqd {

namespace {

void require_nonnegative(double v, const char* name) {
  if (!std::isfinite(v) || v < 0.0) {
    throw DomainError(std::string("ModelParams: ") + name +
                      " must be finite and >= 0 (got " + std::to_string(v) + ")");
  }
}

double norm1(const Matrix4& a) {
  double best = 0.0;
  for (int j = 0; j < 4; ++j) {
    double col = 0.0;
    for (int i = 0; i < 4; ++i) col += std::abs(a[i][j]);
    best = std::max(best, col);
  }
  return best;
}

Matrix4 scaled(const Matrix4& a, double s) {
  Matrix4 out = a;
  for (auto& row : out)
    for (double& x : row) x *= s;
  return out;
}

double trace(const Matrix4& a) { return a[0][0] + a[1][1] + a[2][2] + a[3][3]; }

struct ScaledSeries {
  Matrix4 exp_small{};  // exp(-beta h / 2^k)
  int squarings = 0;
};

ScaledSeries taylor_scaled(const SymMatrix4& h, double beta) {
  constexpr int kTerms = 20;
  constexpr double kTargetNorm = 0.5;

  Matrix4 a = scaled(h.rows(), -beta);
  ScaledSeries out;
  const double n = norm1(a);
  if (n > kTargetNorm) out.squarings = static_cast<int>(std::ceil(std::log2(n / kTargetNorm)));
  a = scaled(a, std::ldexp(1.0, -out.squarings));

  Matrix4 term{};
  for (int i = 0; i < 4; ++i) term[i][i] = 1.0;
  out.exp_small = term;
  for (int k = 1; k <= kTerms; ++k) {
    term = scaled(multiply(term, a), 1.0 / k);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) out.exp_small[i][j] += term[i][j];
  }
  return out;
}

}  // namespace

void validate_hamiltonian_params(const ModelParams& p) {
  require_nonnegative(p.omega, "omega");
  require_nonnegative(p.delta_a, "delta_a");
  require_nonnegative(p.delta_b, "delta_b");
  require_nonnegative(p.coulomb, "coulomb");
}

void validate(const ModelParams& p) {
  validate_hamiltonian_params(p);
  if (!std::isfinite(p.temperature) || p.temperature < kMinTemperature) {
    throw DomainError("ModelParams: temperature must be finite and >= " +
                      std::to_string(kMinTemperature) + " (got " + std::to_string(p.temperature) +
                      "); use ground_state() for the T -> 0 projector");
  }
}

std::string_view basis_name(BasisLabel b) {
  switch (b) {
    case BasisLabel::LL: return "|l_A l_B>";
    case BasisLabel::LR: return "|l_A r_B>";
    case BasisLabel::RL: return "|r_A l_B>";
    case BasisLabel::RR: return "|r_A r_B>";
  }
  return "?";
}

SymMatrix4 build_hamiltonian(const ModelParams& p) {
  validate_hamiltonian_params(p);
  SymMatrix4 h;
  h.set(0, 0, p.coulomb + 2.0 * p.omega);
  h.set(1, 1, -p.coulomb);
  h.set(2, 2, -p.coulomb);
  h.set(3, 3, p.coulomb - 2.0 * p.omega);
  h.set(0, 1, p.delta_b);
  h.set(2, 3, p.delta_b);
  h.set(0, 2, p.delta_a);
  h.set(1, 3, p.delta_a);
  return h;
}

ThermalState thermal_state(const ModelParams& p) {
  validate(p);
  ThermalState st;
  st.eigen = eigen_sym4(build_hamiltonian(p));
  st.populations = boltzmann_weights(st.eigen.values, 1.0 / p.temperature).populations;
  for (int k = 0; k < 4; ++k) {
    if (st.populations[k] > 0.0) st.rho += outer(st.eigen.vector(k), st.populations[k]);
  }
  return st;
}

ThermalState ground_state(const ModelParams& p) {
  const SymMatrix4 h = build_hamiltonian(p);
  ThermalState st;
  st.eigen = eigen_sym4(h);
  const double tol = 1e-12 * (1.0 + h.frobenius_norm());
  int degeneracy = 0;
  while (degeneracy < 4 && st.eigen.values[degeneracy] - st.eigen.values[0] <= tol) ++degeneracy;
  for (int k = 0; k < degeneracy; ++k) {
    st.populations[k] = 1.0 / degeneracy;
    st.rho += outer(st.eigen.vector(k), st.populations[k]);
  }
  return st;
}

SymMatrix4 matrix_exp_taylor(const SymMatrix4& h, double beta) {
  ScaledSeries s = taylor_scaled(h, beta);
  for (int i = 0; i < s.squarings; ++i) s.exp_small = multiply(s.exp_small, s.exp_small);
  return SymMatrix4::from_rows(s.exp_small);
}

SymMatrix4 gibbs_state_taylor(const SymMatrix4& h, double beta) {
  ScaledSeries s = taylor_scaled(h, beta);
  Matrix4 e = scaled(s.exp_small, 1.0 / trace(s.exp_small));
  for (int i = 0; i < s.squarings; ++i) {
    e = multiply(e, e);
    e = scaled(e, 1.0 / trace(e));
  }
  return SymMatrix4::from_rows(e);
}

PauliCoefficients pauli_coefficients(const SymMatrix4& rho) {
  // r(m, n) is the 1-indexed entry rho_mn.
  auto r = [&rho](int m, int n) { return rho(m - 1, n - 1); };
  PauliCoefficients c;
  c.a1 = 2 * r(1, 3) + 2 * r(2, 4);
  c.a2 = r(1, 1) + r(2, 2) - r(3, 3) - r(4, 4);
  c.b1 = 2 * r(1, 2) + 2 * r(3, 4);
  c.b2 = r(1, 1) - r(2, 2) + r(3, 3) - r(4, 4);
  c.t11 = 2 * r(1, 4) + 2 * r(2, 3);
  c.t22 = 2 * r(2, 3) - 2 * r(1, 4);
  c.t33 = r(1, 1) - r(2, 2) - r(3, 3) + r(4, 4);
  c.t13 = 2 * r(1, 3) - 2 * r(2, 4);
  c.t31 = 2 * r(1, 2) - 2 * r(3, 4);
  return c;
}

SymMatrix4 reconstruct_from_pauli(const PauliCoefficients& c) {
  SymMatrix4 m;
  m.set(0, 0, 0.25 * (1 + c.a2 + c.b2 + c.t33));
  m.set(1, 1, 0.25 * (1 + c.a2 - c.b2 - c.t33));
  m.set(2, 2, 0.25 * (1 - c.a2 + c.b2 - c.t33));
  m.set(3, 3, 0.25 * (1 - c.a2 - c.b2 + c.t33));
  m.set(0, 1, 0.25 * (c.b1 + c.t31));
  m.set(2, 3, 0.25 * (c.b1 - c.t31));
  m.set(0, 2, 0.25 * (c.a1 + c.t13));
  m.set(1, 3, 0.25 * (c.a1 - c.t13));
  m.set(0, 3, 0.25 * (c.t11 - c.t22));
  m.set(1, 2, 0.25 * (c.t11 + c.t22));
  return m;
}

SymMatrix2 reduce_subsystem(const SymMatrix4& rho, Subsystem keep) {
  // Index i = 2 * a + b, with a the A-qubit and b the B-qubit (0 = l, 1 = r).
  SymMatrix2 out;
  for (int x = 0; x < 2; ++x) {
    for (int y = x; y < 2; ++y) {
      double s = 0.0;
      for (int k = 0; k < 2; ++k) {
        s += keep == Subsystem::A ? rho(2 * x + k, 2 * y + k) : rho(2 * k + x, 2 * k + y);
      }
      out.set(x, y, s);
    }
  }
  return out;
}

LevelPopulations populations(const ModelParams& p) {
  const ThermalState st = thermal_state(p);
  return {st.eigen.values, st.populations};
}

}  // namespace dqd
