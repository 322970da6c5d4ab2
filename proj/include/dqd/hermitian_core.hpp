#pragma once

// Dense real-symmetric linear algebra at the sizes this model needs (2x2, 4x4):
// storage types, a cyclic Jacobi eigensolver, PSD square root and shifted
// Boltzmann weighting.

#include <array>
#include <cmath>
#include <cstddef>
#include <string>

#include "dqd/errors.hpp"

namespace dqd {

template <std::size_t N>
using Vector = std::array<double, N>;

template <std::size_t N>
using Matrix = std::array<std::array<double, N>, N>;

using Vec4 = Vector<4>;
using Matrix4 = Matrix<4>;

// Real symmetric N x N matrix. Every mutation writes both (i,j) and (j,i),
// so symmetry holds bit-exactly; entries are always finite.
template <std::size_t N>
class SymMatrix {
 public:
  static constexpr std::size_t kSize = N;

  SymMatrix() = default;

  static SymMatrix identity() {
    SymMatrix m;
    for (std::size_t i = 0; i < N; ++i) m.m_[i][i] = 1.0;
    return m;
  }

  static SymMatrix diagonal(const Vector<N>& d) {
    SymMatrix m;
    for (std::size_t i = 0; i < N; ++i) m.set(i, i, d[i]);
    return m;
  }

  // Symmetrizes (A + A^T) / 2. Throws DomainError on non-finite input.
  static SymMatrix from_rows(const Matrix<N>& a) {
    SymMatrix m;
    for (std::size_t i = 0; i < N; ++i) {
      for (std::size_t j = i; j < N; ++j) {
        m.set(i, j, i == j ? a[i][i] : 0.5 * (a[i][j] + a[j][i]));
      }
    }
    return m;
  }

  double operator()(std::size_t i, std::size_t j) const { return m_[i][j]; }

  void set(std::size_t i, std::size_t j, double v) {
    if (!std::isfinite(v)) {
      throw DomainError("SymMatrix: non-finite entry at (" + std::to_string(i) + "," +
                        std::to_string(j) + ")");
    }
    m_[i][j] = v;
    m_[j][i] = v;
  }

  const Matrix<N>& rows() const { return m_; }

  double trace() const {
    double t = 0.0;
    for (std::size_t i = 0; i < N; ++i) t += m_[i][i];
    return t;
  }

  double frobenius_norm() const {
    double s = 0.0;
    for (const auto& row : m_)
      for (double x : row) s += x * x;
    return std::sqrt(s);
  }

  SymMatrix& operator+=(const SymMatrix& o) {
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j) m_[i][j] += o.m_[i][j];
    return *this;
  }
  SymMatrix& operator-=(const SymMatrix& o) {
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j) m_[i][j] -= o.m_[i][j];
    return *this;
  }
  SymMatrix& operator*=(double s) {
    for (auto& row : m_)
      for (double& x : row) x *= s;
    return *this;
  }

  friend SymMatrix operator+(SymMatrix a, const SymMatrix& b) { return a += b; }
  friend SymMatrix operator-(SymMatrix a, const SymMatrix& b) { return a -= b; }
  friend SymMatrix operator*(double s, SymMatrix a) { return a *= s; }
  friend SymMatrix operator*(SymMatrix a, double s) { return a *= s; }
  friend bool operator==(const SymMatrix&, const SymMatrix&) = default;

 private:
  Matrix<N> m_{};
};

using SymMatrix4 = SymMatrix<4>;
using SymMatrix2 = SymMatrix<2>;

// Eigenvalues ascending; column k of `vectors` (vectors[i][k]) is the unit
// eigenvector for values[k].
struct EigenSystem4 {
  Vec4 values{};
  Matrix4 vectors{};

  Vec4 vector(std::size_t k) const {
    return {vectors[0][k], vectors[1][k], vectors[2][k], vectors[3][k]};
  }
};

struct BoltzmannWeights {
  Vec4 weights{};      // exp(-beta (E_i - E_min)), so the largest weight is 1
  double z = 0.0;      // sum of shifted weights
  Vec4 populations{};  // weights / z
};

inline constexpr int kJacobiMaxSweeps = 100;
inline constexpr double kJacobiTolerance = 1e-14;
inline constexpr double kPsdTolerance = 1e-12;

// Cyclic Jacobi. Converged when the off-diagonal Frobenius norm is at most
// kJacobiTolerance * (1 + ||m||_F); throws NumericalError after
// kJacobiMaxSweeps sweeps.
EigenSystem4 eigen_sym4(const SymMatrix4& m);

Vec4 eigvals_sym4(const SymMatrix4& m);

// Throws DomainError unless beta > 0 and all energies are finite.
BoltzmannWeights boltzmann_weights(const Vec4& energies, double beta);

// Principal square root. Eigenvalues in [-kPsdTolerance, 0) are clipped to 0;
// anything below throws NumericalError.
SymMatrix4 sqrt_psd4(const SymMatrix4& m);

// Helpers shared by the model and the tests.
Matrix4 multiply(const Matrix4& a, const Matrix4& b);
Matrix4 transpose(const Matrix4& a);
SymMatrix4 outer(const Vec4& v, double weight = 1.0);
double frobenius_distance(const SymMatrix4& a, const SymMatrix4& b);
double max_abs_difference(const SymMatrix4& a, const SymMatrix4& b);

}  // namespace dqd
