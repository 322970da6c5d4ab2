#pragma once

// Two capacitively coupled double quantum dots, one electron per DQD, driven
// by a stimulus of frequency omega. Units: hbar = k_B = 1, all energies
// dimensionless.
//
// Local basis order (index 0..3):
//   |l_A l_B>, |l_A r_B>, |r_A l_B>, |r_A r_B>
// i.e. subsystem A is the leading tensor factor, and |l> is the +1
// eigenstate of sigma_z. Every entry-level formula in this library
// (Pauli coefficients, partial traces, coherence sums) assumes this order.

#include <array>
#include <string_view>

#include "dqd/hermitian_core.hpp"

namespace dqd {

inline constexpr double kMinTemperature = 1e-4;

struct ModelParams {
  double omega = 0.0;        // stimulus transition frequency
  double delta_a = 0.0;      // tunneling in DQD A
  double delta_b = 0.0;      // tunneling in DQD B
  double coulomb = 0.0;      // inter-dot Coulomb coupling V
  double temperature = 1.0;  // T >= kMinTemperature

  friend bool operator==(const ModelParams&, const ModelParams&) = default;
};

// Throws DomainError on negative or non-finite omega/deltas/coulomb.
void validate_hamiltonian_params(const ModelParams& p);
// As above, plus temperature >= kMinTemperature.
void validate(const ModelParams& p);

enum class BasisLabel { LL = 0, LR = 1, RL = 2, RR = 3 };

std::string_view basis_name(BasisLabel b);

enum class Subsystem { A, B };

struct ThermalState {
  SymMatrix4 rho;
  EigenSystem4 eigen;  // of H, ascending energies
  Vec4 populations{};  // Boltzmann weight of eigen.vector(k)
};

// Nonvanishing Bloch-tensor coefficients of a real two-qubit state.
// tij multiplies sigma_i (x) sigma_j with 1 = x, 2 = y, 3 = z.
struct PauliCoefficients {
  double a1 = 0, a2 = 0;  // sx (x) I, sz (x) I
  double b1 = 0, b2 = 0;  // I (x) sx, I (x) sz
  double t11 = 0, t22 = 0, t33 = 0;
  double t13 = 0, t31 = 0;
};

struct LevelPopulations {
  Vec4 energies{};       // ascending
  Vec4 probabilities{};  // matching energies
};

// H = omega (sz(x)I + I(x)sz) + delta_a sx(x)I + delta_b I(x)sx + V sz(x)sz,
// i.e. diagonal (V + 2w, -V, -V, V - 2w), H01 = H23 = delta_b,
// H02 = H13 = delta_a.
SymMatrix4 build_hamiltonian(const ModelParams& p);

// Gibbs state exp(-H/T)/Z through the eigendecomposition of H.
ThermalState thermal_state(const ModelParams& p);

// T -> 0 limit: uniform mixture over the (numerically) degenerate ground
// level. p.temperature is ignored.
ThermalState ground_state(const ModelParams& p);

// exp(-beta h) by scaling and squaring of a 20-term Taylor series, scaled so
// that ||beta h||_1 / 2^k <= 0.5. Independent check on thermal_state; not
// used by any production path. Overflows for large beta ||h||.
SymMatrix4 matrix_exp_taylor(const SymMatrix4& h, double beta);

// Same series, but renormalized to unit trace after every squaring, which
// gives exp(-beta h) / Z without overflow at any temperature.
SymMatrix4 gibbs_state_taylor(const SymMatrix4& h, double beta);

PauliCoefficients pauli_coefficients(const SymMatrix4& rho);
SymMatrix4 reconstruct_from_pauli(const PauliCoefficients& c);

// Partial trace over the complementary subsystem.
SymMatrix2 reduce_subsystem(const SymMatrix4& rho, Subsystem keep);

LevelPopulations populations(const ModelParams& p);

}  // namespace dqd
