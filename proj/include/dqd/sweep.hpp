#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "dqd/model.hpp"
#include "dqd/quantifiers.hpp"

namespace dqd {

enum class SweepVariable { Temperature, Coulomb, Tunneling, Omega };

std::string_view to_string(SweepVariable v);
// Accepts the canonical names plus "temp" and "delta".
std::optional<SweepVariable> parse_sweep_variable(std::string_view name);

inline constexpr int kDefaultSweepSteps = 201;
inline constexpr double kDefaultCrossingTolerance = 1e-6;
inline constexpr double kDefaultSuddenDeathTolerance = 1e-4;
// Concurrence above this counts as entangled.
inline constexpr double kEntanglementThreshold = 1e-10;

struct SweepSpec {
  SweepVariable variable = SweepVariable::Temperature;
  double start = 0.0;
  double stop = 1.0;
  int steps = kDefaultSweepSteps;
  ModelParams base;
  // Tunneling sweeps move delta_a only unless set, in which case
  // delta_a = delta_b = grid value.
  bool tie_deltas = false;
};

struct SweepResult {
  SweepSpec spec;
  std::vector<double> grid;
  std::vector<QuantifierRecord> records;
};

// Throws DomainError if the spec is malformed or any grid point would be an
// invalid ModelParams.
void validate(const SweepSpec& spec);

std::vector<double> sweep_grid(const SweepSpec& spec);
ModelParams params_at(const SweepSpec& spec, double value);

// Worker count for run_sweep: DQD_THREADS if set (positive integer, else
// DomainError), otherwise hardware concurrency.
unsigned sweep_threads();

// Uniform grid, endpoints inclusive; records in grid order regardless of the
// thread count. Point failures are rethrown with the grid value attached.
SweepResult run_sweep(const SweepSpec& spec, unsigned threads);
SweepResult run_sweep(const SweepSpec& spec);

// Bisection on the indicator concurrence(T) > kEntanglementThreshold.
// Requires an entangled t_lo and a separable t_hi; otherwise throws
// NumericalError. Returns the bracket midpoint once its width is below tol.
double find_sudden_death(const ModelParams& base, double t_lo, double t_hi, double tol);

// Gap between the two lowest levels of H restricted to the exchange-symmetric
// subspace {|ll>, (|lr> + |rl>)/sqrt2, |rr>}. The antisymmetric state is an
// exact eigenvector at -V whenever delta_a = delta_b and never takes part in
// the crossing, so it is projected out.
double low_level_gap(const ModelParams& p);

struct LevelCrossing {
  double coulomb = 0.0;  // V_c
  double gap = 0.0;      // low_level_gap at V_c
};

// Golden-section minimization of low_level_gap over V in [v_lo, v_hi]. At
// zero tunneling the minimum is the exact crossing V = omega; with tunneling
// it is the avoided-crossing center. Throws NumericalError when the minimum
// sits on the bracket boundary.
LevelCrossing find_level_crossing(const ModelParams& base, double v_lo, double v_hi, double tol);

}  // namespace dqd
