#include "dqd/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cstdlib>
#include <exception>
#include <string>
#include <thread>

namespace dqd {

namespace {

std::string describe_point(const SweepSpec& spec, double value) {
  return std::string(to_string(spec.variable)) + " = " + std::to_string(value);
}

bool entangled(const ModelParams& base, double temperature) {
  ModelParams p = base;
  p.temperature = temperature;
  return concurrence(thermal_state(p)) > kEntanglementThreshold;
}

}  // namespace

std::string_view to_string(SweepVariable v) {
  switch (v) {
    case SweepVariable::Temperature: return "temperature";
    case SweepVariable::Coulomb: return "coulomb";
    case SweepVariable::Tunneling: return "tunneling";
    case SweepVariable::Omega: return "omega";
  }
  return "?";
}

std::optional<SweepVariable> parse_sweep_variable(std::string_view name) {
  if (name == "temperature" || name == "temp") return SweepVariable::Temperature;
  if (name == "coulomb") return SweepVariable::Coulomb;
  if (name == "tunneling" || name == "delta") return SweepVariable::Tunneling;
  if (name == "omega") return SweepVariable::Omega;
  return std::nullopt;
}

ModelParams params_at(const SweepSpec& spec, double value) {
  ModelParams p = spec.base;
  switch (spec.variable) {
    case SweepVariable::Temperature: p.temperature = value; break;
    case SweepVariable::Coulomb: p.coulomb = value; break;
    case SweepVariable::Omega: p.omega = value; break;
    case SweepVariable::Tunneling:
      p.delta_a = value;
      if (spec.tie_deltas) p.delta_b = value;
      break;
  }
  return p;
}

void validate(const SweepSpec& spec) {
  if (spec.steps < 2) throw DomainError("sweep: steps must be >= 2");
  if (!std::isfinite(spec.start) || !std::isfinite(spec.stop) || !(spec.start < spec.stop)) {
    throw DomainError("sweep: need finite start < stop");
  }
  // Every parameter is either constant or monotone along the grid, so
  // checking both endpoints covers the whole sweep.
  for (double v : {spec.start, spec.stop}) {
    try {
      validate(params_at(spec, v));
    } catch (const DomainError& e) {
      throw DomainError("sweep at " + describe_point(spec, v) + ": " + e.what());
    }
  }
}

std::vector<double> sweep_grid(const SweepSpec& spec) {
  std::vector<double> grid(static_cast<std::size_t>(spec.steps));
  const double h = (spec.stop - spec.start) / (spec.steps - 1);
  for (int i = 0; i < spec.steps; ++i) grid[i] = spec.start + i * h;
  grid.back() = spec.stop;
  return grid;
}

unsigned sweep_threads() {
  if (const char* env = std::getenv("DQD_THREADS")) {
    const std::string_view s(env);
    unsigned n = 0;
    const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), n);
    if (ec != std::errc{} || end != s.data() + s.size() || n == 0) {
      throw DomainError("DQD_THREADS must be a positive integer (got '" + std::string(s) + "')");
    }
    return n;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

SweepResult run_sweep(const SweepSpec& spec) { return run_sweep(spec, sweep_threads()); }

SweepResult run_sweep(const SweepSpec& spec, unsigned threads) {
  validate(spec);
  SweepResult result{spec, sweep_grid(spec), {}};
  const std::size_t n = result.grid.size();
  result.records.resize(n);
  std::vector<std::exception_ptr> errors(n);

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < n; i = next++) {
      try {
        result.records[i] = evaluate_point(params_at(spec, result.grid[i]));
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };

  const unsigned workers = std::clamp<unsigned>(threads, 1u, static_cast<unsigned>(n));
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned t = 0; t < workers; ++t) pool.emplace_back(worker);
  }

  for (std::size_t i = 0; i < n; ++i) {
    if (!errors[i]) continue;
    const std::string where = "sweep point " + describe_point(spec, result.grid[i]) + ": ";
    try {
      std::rethrow_exception(errors[i]);
    } catch (const DomainError& e) {
      throw DomainError(where + e.what());
    } catch (const NumericalError& e) {
      throw NumericalError(where + e.what());
    }
  }
  return result;
}

double find_sudden_death(const ModelParams& base, double t_lo, double t_hi, double tol) {
  validate_hamiltonian_params(base);
  if (!(tol > 0.0)) throw DomainError("find_sudden_death: tol must be > 0");
  if (!(t_lo < t_hi) || !(t_lo >= kMinTemperature) || !std::isfinite(t_hi)) {
    throw DomainError("find_sudden_death: need kMinTemperature <= t_lo < t_hi");
  }
  if (!entangled(base, t_lo) || entangled(base, t_hi)) {
    throw NumericalError("find_sudden_death: no sudden death in bracket [" +
                         std::to_string(t_lo) + ", " + std::to_string(t_hi) + "]");
  }
  double lo = t_lo;
  double hi = t_hi;
  while (hi - lo >= tol) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    (entangled(base, mid) ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

double low_level_gap(const ModelParams& p) {
  const SymMatrix4 h = build_hamiltonian(p);
  const double r = 1.0 / std::sqrt(2.0);

  // Basis (|ll>, |s>, |rr>) with |s> = (|lr> + |rl>)/sqrt2; slot 3 is left
  // decoupled so the 4x4 solver can be reused.
  SymMatrix4 block;
  block.set(0, 0, h(0, 0));
  block.set(1, 1, 0.5 * (h(1, 1) + h(2, 2)) + h(1, 2));
  block.set(2, 2, h(3, 3));
  block.set(0, 1, r * (h(0, 1) + h(0, 2)));
  block.set(1, 2, r * (h(1, 3) + h(2, 3)));
  block.set(0, 2, h(0, 3));
  block.set(3, 3, 0.0);

  const EigenSystem4 es = eigen_sym4(block);
  std::array<double, 3> levels{};
  int n = 0;
  for (int k = 0; k < 4; ++k) {
    if (std::abs(es.vectors[3][k]) < 0.5) levels[n++] = es.values[k];
  }
  return levels[1] - levels[0];
}

LevelCrossing find_level_crossing(const ModelParams& base, double v_lo, double v_hi, double tol) {
  validate_hamiltonian_params(base);
  if (!(tol > 0.0)) throw DomainError("find_level_crossing: tol must be > 0");
  if (!(v_lo >= 0.0) || !(v_lo < v_hi) || !std::isfinite(v_hi)) {
    throw DomainError("find_level_crossing: need 0 <= v_lo < v_hi");
  }

  auto gap = [&base](double v) {
    ModelParams p = base;
    p.coulomb = v;
    return low_level_gap(p);
  };

  const double inv_phi = 0.5 * (std::sqrt(5.0) - 1.0);
  double a = v_lo;
  double b = v_hi;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = gap(c);
  double fd = gap(d);
  while (b - a > tol) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = gap(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = gap(d);
    }
  }

  const double v = 0.5 * (a + b);
  if (v - v_lo <= tol || v_hi - v <= tol) {
    throw NumericalError("find_level_crossing: gap has no interior minimum in [" +
                         std::to_string(v_lo) + ", " + std::to_string(v_hi) + "]");
  }
  return {v, gap(v)};
}

}  // namespace dqd
