#include "dqd/hermitian_core.hpp"

#include <algorithm>
#include <numeric>

namespace dqd {

namespace {

double off_diagonal_norm(const Matrix4& a) {
  double s = 0.0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (i != j) s += a[i][j] * a[i][j];
  return std::sqrt(s);
}

// One rotation annihilating a[p][q]. Writes both triangles so `a` stays
// exactly symmetric.
void rotate(Matrix4& a, Matrix4& v, int p, int q) {
  const double apq = a[p][q];
  const double theta = (a[q][q] - a[p][p]) / (2.0 * apq);
  double t;
  if (std::abs(theta) > 1e150) {
    t = 0.5 / theta;
  } else {
    t = std::copysign(1.0, theta) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
  }
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  const double s = t * c;

  for (int k = 0; k < 4; ++k) {
    if (k == p || k == q) continue;
    const double akp = a[k][p];
    const double akq = a[k][q];
    a[k][p] = a[p][k] = c * akp - s * akq;
    a[k][q] = a[q][k] = s * akp + c * akq;
  }
  a[p][p] -= t * apq;
  a[q][q] += t * apq;
  a[p][q] = a[q][p] = 0.0;

  for (int k = 0; k < 4; ++k) {
    const double vkp = v[k][p];
    const double vkq = v[k][q];
    v[k][p] = c * vkp - s * vkq;
    v[k][q] = s * vkp + c * vkq;
  }
}

EigenSystem4 sorted(const Matrix4& a, const Matrix4& v) {
  std::array<int, 4> order{};
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int i, int j) { return a[i][i] < a[j][j]; });
  EigenSystem4 es;
  for (int k = 0; k < 4; ++k) {
    es.values[k] = a[order[k]][order[k]];
    for (int i = 0; i < 4; ++i) es.vectors[i][k] = v[i][order[k]];
  }
  return es;
}

}  // namespace

EigenSystem4 eigen_sym4(const SymMatrix4& m) {
  Matrix4 a = m.rows();
  Matrix4 v{};
  for (int i = 0; i < 4; ++i) v[i][i] = 1.0;

  const double threshold = kJacobiTolerance * (1.0 + m.frobenius_norm());
  for (int sweep = 0; sweep <= kJacobiMaxSweeps; ++sweep) {
    if (off_diagonal_norm(a) <= threshold) return sorted(a, v);
    if (sweep == kJacobiMaxSweeps) break;
    for (int p = 0; p < 3; ++p) {
      for (int q = p + 1; q < 4; ++q) {
        if (a[p][q] != 0.0) rotate(a, v, p, q);
      }
    }
  }
  throw NumericalError("eigen_sym4: Jacobi iteration did not converge in " +
                       std::to_string(kJacobiMaxSweeps) + " sweeps");
}

Vec4 eigvals_sym4(const SymMatrix4& m) { return eigen_sym4(m).values; }

BoltzmannWeights boltzmann_weights(const Vec4& energies, double beta) {
  if (!(beta > 0.0) || !std::isfinite(beta)) {
    throw DomainError("boltzmann_weights: beta must be positive and finite");
  }
  for (double e : energies) {
    if (!std::isfinite(e)) throw DomainError("boltzmann_weights: non-finite energy");
  }
  const double e_min = *std::min_element(energies.begin(), energies.end());

  BoltzmannWeights out;
  for (int i = 0; i < 4; ++i) {
    out.weights[i] = std::exp(-beta * (energies[i] - e_min));
    out.z += out.weights[i];
  }
  for (int i = 0; i < 4; ++i) out.populations[i] = out.weights[i] / out.z;
  return out;
}

SymMatrix4 sqrt_psd4(const SymMatrix4& m) {
  const EigenSystem4 es = eigen_sym4(m);
  SymMatrix4 root;
  for (int k = 0; k < 4; ++k) {
    double lambda = es.values[k];
    if (lambda < -kPsdTolerance) {
      throw NumericalError("sqrt_psd4: matrix is not positive semidefinite (eigenvalue " +
                           std::to_string(lambda) + ")");
    }
    lambda = std::max(lambda, 0.0);
    if (lambda > 0.0) root += outer(es.vector(k), std::sqrt(lambda));
  }
  return root;
}

Matrix4 multiply(const Matrix4& a, const Matrix4& b) {
  Matrix4 c{};
  for (int i = 0; i < 4; ++i)
    for (int k = 0; k < 4; ++k)
      for (int j = 0; j < 4; ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

Matrix4 transpose(const Matrix4& a) {
  Matrix4 t{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) t[j][i] = a[i][j];
  return t;
}

SymMatrix4 outer(const Vec4& v, double weight) {
  SymMatrix4 m;
  for (int i = 0; i < 4; ++i)
    for (int j = i; j < 4; ++j) m.set(i, j, weight * v[i] * v[j]);
  return m;
}

double frobenius_distance(const SymMatrix4& a, const SymMatrix4& b) {
  return (a - b).frobenius_norm();
}

double max_abs_difference(const SymMatrix4& a, const SymMatrix4& b) {
  double d = 0.0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) d = std::max(d, std::abs(a(i, j) - b(i, j)));
  return d;
}

}  // namespace dqd
