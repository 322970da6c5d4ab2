#pragma once

#include <cmath>
#include <cstddef>

#include "dqd/hermitian_core.hpp"
#include "dqd/model.hpp"

namespace dqd {

struct CoherenceDecomposition {
  double total = 0.0;
  double local = 0.0;
  double correlated = 0.0;  // total - local, >= 0 by the triangle inequality
};

struct QuantifierRecord {
  ModelParams params;
  Vec4 populations{};  // ascending-energy order
  double c_total = 0.0;
  double c_local = 0.0;
  double c_correlated = 0.0;
  double concurrence = 0.0;

  friend bool operator==(const QuantifierRecord&, const QuantifierRecord&) = default;
};

// Sum of |rho_ij| over i != j.
template <std::size_t N>
double l1_coherence(const SymMatrix<N>& rho) {
  double s = 0.0;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j)
      if (i != j) s += std::abs(rho(i, j));
  return s;
}

// Total l1 coherence, local part |a1| + |b1| (= C(rho_A) + C(rho_B)), and
// their difference.
CoherenceDecomposition coherence_decomposition(const SymMatrix4& rho);

// (sy (x) sy) rho (sy (x) sy); for real rho the conjugation is a no-op.
SymMatrix4 spin_flipped(const SymMatrix4& rho);

// Wootters concurrence. With rho = W W^T, the spectrum of R = rho rho~ equals
// that of the symmetric PSD matrix W^T rho~ W = tau^2, tau = W^T (sy(x)sy) W,
// so sqrt(lambda_i) = |eig_i(tau)|. This overload takes W = sqrt(rho).
double concurrence(const SymMatrix4& rho);

// Same quantity with W = V diag(sqrt(p)) taken from the eigensystem of H.
// Avoids the square root of rho's roundoff-level eigenvalues, which matters
// for near-pure states.
double concurrence(const ThermalState& state);

// Concurrence from any real factor W with rho = W W^T.
double concurrence_from_factor(const Matrix4& w);

QuantifierRecord evaluate_point(const ModelParams& p);

}  // namespace dqd
