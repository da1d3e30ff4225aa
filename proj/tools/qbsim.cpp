// Command-line front end: charge/discharge runs, parameter sweeps, and the
// built-in validation suite, with CSV output and optional gnuplot scripts.

#include <exception>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qbsim/qbsim.hpp"

namespace {

namespace fs = std::filesystem;

// Exit codes: 0 success, 1 configuration/usage error, 2 simulation failure,
// 3 validation-suite failure.
constexpr int kExitOk = 0;
constexpr int kExitConfig = 1;
constexpr int kExitSimulation = 2;
constexpr int kExitValidate = 3;

struct RunFlags {
  std::string config_file;
  std::optional<std::string> protocol;
  std::optional<double> omega0;
  std::optional<double> width;
  std::optional<double> tau;
  std::vector<double> eps;
  std::optional<double> dt;
  std::optional<double> t_start;
  std::optional<double> t_end;
  std::string out = ".";
  bool plot = false;
  std::optional<std::string> param;
  std::vector<double> values;
};

void add_run_options(CLI::App* cmd, RunFlags& f) {
  cmd->add_option("--config", f.config_file,
                  "flat 'key = value' config file; flags override it")
      ->check(CLI::ExistingFile);
  cmd->add_option("--protocol", f.protocol, "stirap or cdstirap");
  cmd->add_option("--omega0", f.omega0, "peak pump/Stokes amplitude");
  cmd->add_option("--width", f.width, "Gaussian pulse width T");
  cmd->add_option("--tau", f.tau, "pulse-center offset (default 0.7*width)");
  cmd->add_option("--eps", f.eps, "level energies e1,e2,e3")
      ->delimiter(',')
      ->expected(3);
  cmd->add_option("--dt", f.dt, "integrator step (default width/2000)");
  cmd->add_option("--t-start", f.t_start,
                  "window start (default -(tau + 4*width))");
  cmd->add_option("--t-end", f.t_end, "window end (default tau + 4*width)");
  cmd->add_option("--out", f.out, "output directory (default .)");
  cmd->add_flag("--plot", f.plot, "also write a gnuplot script");
}

qbsim::ConfigDocument document_from_flags(const RunFlags& f) {
  qbsim::ConfigDocument doc;
  if (f.protocol) doc.protocol = qbsim::parse_protocol(*f.protocol);
  if (f.omega0) doc.omega0 = *f.omega0;
  if (f.width) doc.width = *f.width;
  if (f.tau) doc.tau = *f.tau;
  if (f.eps.size() == 3) doc.eps = qbsim::Spectrum{f.eps[0], f.eps[1], f.eps[2]};
  if (f.dt) doc.dt = *f.dt;
  if (f.t_start) doc.t_start = *f.t_start;
  if (f.t_end) doc.t_end = *f.t_end;
  if (f.param) doc.sweep_param = qbsim::parse_sweep_parameter(*f.param);
  if (!f.values.empty()) doc.sweep_values = f.values;
  return doc;
}

qbsim::ConfigDocument load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw qbsim::ConfigError("cannot read config file '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return qbsim::parse_config(text.str());
}

// Config file first, then flags on top.
qbsim::ConfigDocument merged_document(const RunFlags& f) {
  qbsim::ConfigDocument doc;
  if (!f.config_file.empty()) doc = load_config_file(f.config_file);
  doc.merge_from(document_from_flags(f));
  return doc;
}

fs::path prepare_output_dir(const std::string& out) {
  fs::path dir(out);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec)
    throw qbsim::ConfigError("cannot create output directory '" + out + "'");
  return dir;
}

void write_text_file(const fs::path& path, const std::string& content) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw qbsim::ConfigError("cannot write '" + path.string() + "'");
  os << content;
  if (!os.good())
    throw qbsim::ConfigError("write failed for '" + path.string() + "'");
}

std::string trajectory_plot_script(const std::string& csv_name,
                                   const std::string& png_name,
                                   bool discharge) {
  std::ostringstream os;
  os << "# Render with: gnuplot " << (discharge ? "discharge" : "charge")
     << ".gp\n"
     << "set datafile separator ','\n"
     << "set terminal pngcairo size 1000,700\n"
     << "set output '" << png_name << "'\n"
     << "set key noenhanced\n"
     << "set xlabel 'time'\n"
     << "set multiplot layout 2,1\n"
     << "plot '" << csv_name << "' skip 1 using 1:2 with lines title 'P1', \\\n"
     << "     '' skip 1 using 1:3 with lines title 'P2', \\\n"
     << "     '' skip 1 using 1:4 with lines title 'P3'\n"
     << "plot '" << csv_name << "' skip 1 using 1:6 with lines title 'ergotropy', \\\n"
     << "     '' skip 1 using 1:" << (discharge ? 10 : 7)
     << " with lines title '" << (discharge ? "discharge power" : "power")
     << "'\n"
     << "unset multiplot\n";
  return os.str();
}

std::string sweep_plot_script(const std::string& csv_name,
                              const std::string& param) {
  std::ostringstream os;
  os << "# Render with: gnuplot sweep.gp\n"
     << "set datafile separator ','\n"
     << "set terminal pngcairo size 1000,700\n"
     << "set output 'sweep.png'\n"
     << "set key noenhanced\n"
     << "set xlabel '" << param << "'\n"
     << "plot '" << csv_name
     << "' skip 1 using 2:(strcol(3) eq 'stirap' ? column(4) : 1/0) "
        "with linespoints title 'stirap C_max', \\\n"
     << "     '' skip 1 using 2:(strcol(3) eq 'cdstirap' ? column(4) : 1/0) "
        "with linespoints title 'cdstirap C_max'\n";
  return os.str();
}

int run_trajectory(const RunFlags& flags, qbsim::Direction direction) {
  qbsim::ConfigDocument doc = merged_document(flags);
  doc.direction = direction;
  const qbsim::ProtocolConfig cfg = qbsim::resolve_config(doc);
  const Eigen::Vector3cd psi0 = doc.initial_level
                                    ? qbsim::level_state(*doc.initial_level)
                                    : qbsim::initial_state(cfg);
  const fs::path dir = prepare_output_dir(flags.out);

  qbsim::Trajectory traj;
  try {
    traj = qbsim::evolve_pure(psi0, cfg);
  } catch (const qbsim::ConfigError&) {
    throw;
  } catch (const std::exception& e) {
    std::cerr << "simulation failed: " << e.what() << "\n";
    return kExitSimulation;
  }

  const bool discharge = direction == qbsim::Direction::Discharge;
  const std::string base = discharge ? "discharge" : "charge";
  std::ostringstream csv;
  qbsim::write_trajectory_csv(csv, traj);
  write_text_file(dir / (base + ".csv"), csv.str());
  if (flags.plot)
    write_text_file(dir / (base + ".gp"),
                    trajectory_plot_script(base + ".csv", base + ".png",
                                           discharge));

  const qbsim::TrajectorySample& last = traj.samples.back();
  std::cout << "protocol " << qbsim::to_string(cfg.protocol) << ", "
            << qbsim::to_string(cfg.direction) << "\n"
            << "final energy        " << qbsim::format_double(last.energy)
            << "\n"
            << "final ergotropy     " << qbsim::format_double(last.ergotropy)
            << "\n";
  if (discharge) {
    double peak = 0.0;
    for (const qbsim::TrajectorySample& s : traj.samples)
      peak = std::max(peak, s.discharge_power);
    std::cout << "peak discharge power " << qbsim::format_double(peak) << "\n";
  } else {
    const qbsim::TrajectoryExtrema ext = qbsim::trajectory_maxima(traj);
    std::cout << "peak ergotropy      " << qbsim::format_double(ext.c_max)
              << "\n"
              << "peak power          " << qbsim::format_double(ext.p_max)
              << "\n";
  }
  std::cout << "wrote " << (dir / (base + ".csv")).string() << "\n";
  return kExitOk;
}

int run_sweep_command(const RunFlags& flags) {
  qbsim::ConfigDocument doc = merged_document(flags);
  doc.direction = qbsim::Direction::Charge;

  qbsim::SweepSpec spec;
  spec.parameter = doc.sweep_param.value_or(qbsim::SweepParameter::Tau);
  // The swept key must not also pin the base configuration.
  qbsim::ConfigDocument base_doc = doc;
  if (spec.parameter == qbsim::SweepParameter::Tau) {
    base_doc.tau.reset();
  } else {
    base_doc.omega0.reset();
  }
  spec.base = qbsim::resolve_config(base_doc);
  spec.values = doc.sweep_values.value_or(
      spec.parameter == qbsim::SweepParameter::Tau
          ? qbsim::default_tau_grid(spec.base.width)
          : qbsim::default_omega0_grid());
  if (doc.protocol) spec.protocols = {*doc.protocol};

  const fs::path dir = prepare_output_dir(flags.out);
  const qbsim::SweepResult result = qbsim::run_sweep(spec);

  std::size_t ok = 0;
  for (const qbsim::SweepRow& row : result.rows) {
    if (row.ok) {
      ++ok;
    } else {
      std::cerr << "row " << qbsim::to_string(spec.parameter) << " = "
                << qbsim::format_double(row.value) << " ("
                << qbsim::to_string(row.protocol) << ") failed: " << row.error
                << "\n";
    }
  }

  std::ostringstream csv;
  qbsim::write_sweep_csv(csv, result);
  write_text_file(dir / "sweep.csv", csv.str());
  if (flags.plot)
    write_text_file(dir / "sweep.gp",
                    sweep_plot_script("sweep.csv",
                                      qbsim::to_string(spec.parameter)));

  std::cout << "wrote " << (dir / "sweep.csv").string() << " ("
            << result.rows.size() << " rows, " << ok << " ok)\n";
  if (ok == 0) {
    std::cerr << "every sweep row failed\n";
    return kExitSimulation;
  }
  return kExitOk;
}

int run_validate(double cd_scale, double dt_override) {
  qbsim::SelfCheckOptions opts;
  opts.cd_field_scale = cd_scale;
  opts.dt_override = dt_override;
  const std::vector<qbsim::CheckResult> results = qbsim::run_self_checks(opts);
  std::size_t failed = 0;
  for (const qbsim::CheckResult& r : results) {
    std::cout << (r.passed ? "[ OK ] " : "[FAIL] ") << r.name << ": "
              << r.detail << "\n";
    if (!r.passed) ++failed;
  }
  if (failed == 0) {
    std::cout << "all checks passed\n";
    return kExitOk;
  }
  std::cout << failed << " check(s) failed\n";
  return kExitValidate;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Driven three-level battery simulator"};
  app.require_subcommand(1);

  RunFlags charge_flags;
  CLI::App* charge = app.add_subcommand(
      "charge", "run a charging protocol and write a trajectory CSV");
  add_run_options(charge, charge_flags);

  RunFlags discharge_flags;
  CLI::App* discharge = app.add_subcommand(
      "discharge", "run a discharging protocol and write a trajectory CSV");
  add_run_options(discharge, discharge_flags);

  RunFlags sweep_flags;
  CLI::App* sweep =
      app.add_subcommand("sweep", "scan tau or omega0 over a grid of values");
  add_run_options(sweep, sweep_flags);
  sweep->add_option("--param", sweep_flags.param,
                    "swept parameter: tau or omega0 (default tau)");
  sweep->add_option("--values", sweep_flags.values,
                    "comma-separated grid (default: built-in grid)")
      ->delimiter(',');

  double cd_scale = 1.0;
  double dt_override = 0.0;
  CLI::App* validate =
      app.add_subcommand("validate", "run the built-in self checks");
  validate->add_option("--cd-scale", cd_scale,
                       "fault-injection knob: scale the auxiliary drive in "
                       "the frame-decoupling check");
  validate->add_option("--dt", dt_override,
                       "fault-injection knob: integrator step for the "
                       "conservation checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.get_name() << ": " << e.what() << "\n";
    return kExitConfig;
  }

  try {
    if (charge->parsed())
      return run_trajectory(charge_flags, qbsim::Direction::Charge);
    if (discharge->parsed())
      return run_trajectory(discharge_flags, qbsim::Direction::Discharge);
    if (sweep->parsed()) return run_sweep_command(sweep_flags);
    if (validate->parsed()) return run_validate(cd_scale, dt_override);
  } catch (const qbsim::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "simulation failed: " << e.what() << "\n";
    return kExitSimulation;
  }
  return kExitOk;
}
