#include "dqd/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <fmt/format.h>

#include "CLI11.hpp"
#include "json.hpp"

namespace dqd::cli {

namespace {

std::string num(double x) { return fmt::format("{:.17g}", x); }

std::string_view command_name(Command c) {
  switch (c) {
    case Command::Point: return "point";
    case Command::Sweep: return "sweep";
    case Command::SuddenDeath: return "tc";
    case Command::Crossing: return "crossing";
  }
  return "?";
}

nlohmann::ordered_json to_json(const QuantifierRecord& r, std::string_view variable) {
  nlohmann::ordered_json j;
  j["variable"] = variable;
  j["omega"] = r.params.omega;
  j["delta_a"] = r.params.delta_a;
  j["delta_b"] = r.params.delta_b;
  j["coulomb"] = r.params.coulomb;
  j["temperature"] = r.params.temperature;
  j["p1"] = r.populations[0];
  j["p2"] = r.populations[1];
  j["p3"] = r.populations[2];
  j["p4"] = r.populations[3];
  j["c_total"] = r.c_total;
  j["c_local"] = r.c_local;
  j["c_correlated"] = r.c_correlated;
  j["concurrence"] = r.concurrence;
  return j;
}

}  // namespace

RunConfig parse_args(const std::vector<std::string>& args) {
  CLI::App app{"Thermal coherence and entanglement of two coupled double quantum dots", "dqd"};
  app.set_config("--config", "", "File of `key = value` lines (# comments); flags override it");
  app.require_subcommand(1, 1);

  auto* point = app.add_subcommand("point", "Evaluate one parameter point")->fallthrough();
  auto* sweep = app.add_subcommand("sweep", "Uniform 1-D parameter sweep")->fallthrough();
  auto* tc = app.add_subcommand("tc", "Entanglement sudden-death temperature")->fallthrough();
  auto* crossing = app.add_subcommand("crossing", "Level-crossing Coulomb coupling")->fallthrough();

  RunConfig cfg;
  auto* o_omega = app.add_option("--omega", cfg.params.omega, "Stimulus transition frequency");
  auto* o_da = app.add_option("--delta-a", cfg.params.delta_a, "Tunneling strength of DQD A");
  auto* o_db = app.add_option("--delta-b", cfg.params.delta_b, "Tunneling strength of DQD B");
  auto* o_v = app.add_option("--coulomb", cfg.params.coulomb, "Coulomb coupling V");
  auto* o_t = app.add_option("--temp", cfg.params.temperature, "Temperature (k_B = 1)");

  std::string var_name;
  auto* o_var = app.add_option("--var", var_name, "Swept variable: temp|coulomb|tunneling|omega");
  auto* o_from = app.add_option("--from", cfg.sweep.start, "Sweep start");
  auto* o_to = app.add_option("--to", cfg.sweep.stop, "Sweep stop");
  app.add_option("--steps", cfg.sweep.steps, "Grid points, endpoints included")
      ->capture_default_str();
  app.add_flag("--tie-deltas", cfg.sweep.tie_deltas, "Sweep delta_a = delta_b together");

  auto* o_tlo = app.add_option("--t-lo", cfg.lo, "Sudden-death bracket, entangled end");
  auto* o_thi = app.add_option("--t-hi", cfg.hi, "Sudden-death bracket, separable end");
  auto* o_vlo = app.add_option("--v-lo", cfg.lo, "Crossing bracket lower Coulomb value");
  auto* o_vhi = app.add_option("--v-hi", cfg.hi, "Crossing bracket upper Coulomb value");
  auto* o_tol = app.add_option("--tol", cfg.tol, "Search tolerance");

  app.add_option("-o,--output", cfg.output, "Output path (default: standard output)");
  std::string format = "csv";
  app.add_option("--format", format, "csv|json")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    throw HelpRequested(app.help());
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  if (point->parsed()) cfg.command = Command::Point;
  if (sweep->parsed()) cfg.command = Command::Sweep;
  if (tc->parsed()) cfg.command = Command::SuddenDeath;
  if (crossing->parsed()) cfg.command = Command::Crossing;
  cfg.format = format == "json" ? OutputFormat::Json : OutputFormat::Csv;

  auto need = [&cfg](const CLI::Option* opt) {
    if (opt->count() == 0) {
      throw UsageError(std::string(command_name(cfg.command)) + ": missing required " + opt->get_name());
    }
  };

  std::optional<SweepVariable> swept;
  if (cfg.command == Command::Sweep) {
    need(o_var);
    swept = parse_sweep_variable(var_name);
    if (!swept) throw UsageError("--var: unknown sweep variable '" + var_name + "'");
    need(o_from);
    need(o_to);
    cfg.sweep.variable = *swept;
  }

  auto swept_here = [&](SweepVariable v) { return swept && *swept == v; };
  if (!swept_here(SweepVariable::Omega)) need(o_omega);
  if (!swept_here(SweepVariable::Tunneling)) need(o_da);
  if (!swept_here(SweepVariable::Tunneling) || !cfg.sweep.tie_deltas) need(o_db);
  if (!swept_here(SweepVariable::Coulomb) && cfg.command != Command::Crossing) need(o_v);
  if (!swept_here(SweepVariable::Temperature) && cfg.command != Command::SuddenDeath) need(o_t);

  try {
    switch (cfg.command) {
      case Command::Point:
        validate(cfg.params);
        break;
      case Command::Sweep:
        cfg.sweep.base = cfg.params;
        validate(cfg.sweep);
        break;
      case Command::SuddenDeath:
        need(o_tlo);
        need(o_thi);
        if (o_tol->count() == 0) cfg.tol = kDefaultSuddenDeathTolerance;
        validate_hamiltonian_params(cfg.params);
        if (!(cfg.lo >= kMinTemperature) || !(cfg.lo < cfg.hi)) {
          throw UsageError("--t-lo/--t-hi: need " + std::to_string(kMinTemperature) + " <= t-lo < t-hi");
        }
        break;
      case Command::Crossing:
        need(o_vlo);
        need(o_vhi);
        if (o_tol->count() == 0) cfg.tol = kDefaultCrossingTolerance;
        validate(cfg.params);
        if (!(cfg.lo >= 0.0) || !(cfg.lo < cfg.hi)) {
          throw UsageError("--v-lo/--v-hi: need 0 <= v-lo < v-hi");
        }
        break;
    }
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
  if (!(cfg.tol >= 0.0) || (cfg.tol == 0.0 && (cfg.command == Command::SuddenDeath ||
                                               cfg.command == Command::Crossing))) {
    throw UsageError("--tol: must be > 0");
  }
  return cfg;
}

void write_csv(std::ostream& out, std::span<const QuantifierRecord> records, std::string_view variable) {
  out << kCsvHeader << '\n';
  for (const QuantifierRecord& r : records) {
    out << variable << ',' << num(r.params.omega) << ',' << num(r.params.delta_a) << ','
        << num(r.params.delta_b) << ',' << num(r.params.coulomb) << ',' << num(r.params.temperature);
    for (double p : r.populations) out << ',' << num(p);
    out << ',' << num(r.c_total) << ',' << num(r.c_local) << ',' << num(r.c_correlated) << ','
        << num(r.concurrence) << '\n';
  }
}

void write_json(std::ostream& out, std::span<const QuantifierRecord> records, std::string_view variable,
                bool as_array) {
  if (as_array) {
    auto arr = nlohmann::ordered_json::array();
    for (const QuantifierRecord& r : records) arr.push_back(to_json(r, variable));
    out << arr.dump(2) << '\n';
  } else {
    for (const QuantifierRecord& r : records) out << to_json(r, variable).dump(2) << '\n';
  }
}

int emit_records(std::span<const QuantifierRecord> records, std::string_view variable, bool as_array,
                 OutputFormat format, const std::string& sink, std::ostream& data, std::ostream& diag) {
  std::ostringstream buf;
  if (format == OutputFormat::Csv) {
    write_csv(buf, records, variable);
  } else {
    write_json(buf, records, variable, as_array);
  }

  if (sink.empty() || sink == "-") {
    data << buf.str();
    data.flush();
    if (!data) {
      diag << "dqd: failed writing to standard output\n";
      return kExitIo;
    }
    return kExitOk;
  }
  std::ofstream file(sink, std::ios::binary | std::ios::trunc);
  if (!file) {
    diag << "dqd: cannot open '" << sink << "' for writing\n";
    return kExitIo;
  }
  file << buf.str();
  file.close();
  if (!file) {
    diag << "dqd: failed writing '" << sink << "'\n";
    return kExitIo;
  }
  return kExitOk;
}

int run(const RunConfig& config, std::ostream& data, std::ostream& diag) {
  std::vector<QuantifierRecord> records;
  std::string variable(command_name(config.command));
  bool as_array = false;

  switch (config.command) {
    case Command::Point:
      records.push_back(evaluate_point(config.params));
      break;
    case Command::Sweep: {
      SweepResult result = run_sweep(config.sweep);
      records = std::move(result.records);
      variable = to_string(config.sweep.variable);
      as_array = true;
      break;
    }
    case Command::SuddenDeath: {
      ModelParams p = config.params;
      p.temperature = find_sudden_death(p, config.lo, config.hi, config.tol);
      records.push_back(evaluate_point(p));
      break;
    }
    case Command::Crossing: {
      ModelParams p = config.params;
      p.coulomb = find_level_crossing(p, config.lo, config.hi, config.tol).coulomb;
      records.push_back(evaluate_point(p));
      break;
    }
  }
  return emit_records(records, variable, as_array, config.format, config.output, data, diag);
}

int run_cli(const std::vector<std::string>& args, std::ostream& data, std::ostream& diag) {
  RunConfig config;
  try {
    config = parse_args(args);
  } catch (const HelpRequested& e) {
    data << e.what();
    return kExitOk;
  } catch (const UsageError& e) {
    diag << "dqd: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    return run(config, data, diag);
  } catch (const DomainError& e) {
    diag << "dqd: " << e.what() << '\n';
    return kExitUsage;
  } catch (const NumericalError& e) {
    diag << "dqd: " << e.what() << '\n';
    return kExitNumerical;
  }
}

}  // namespace dqd::cli
