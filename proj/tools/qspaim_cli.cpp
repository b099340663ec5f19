// Command-line front end: compile QSP phase sequences into drive-pulse
// schedules, simulate them, and emit CSV/JSON artifacts.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qspaim/aim.hpp"
#include "qspaim/compile_direct.hpp"
#include "qspaim/compile_double.hpp"
#include "qspaim/dynamics.hpp"
#include "qspaim/qsp.hpp"
#include "qspaim/schedule_io.hpp"

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitDivergent = 3;
constexpr int kExitNumeric = 4;

using namespace qspaim;

std::string fmt(double v) {
  if (std::isnan(v)) return "nan";
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

PhaseSequence parse_phases(const std::string& spec) {
  if (spec == "bb1" || spec.rfind("chebyshev:", 0) == 0)
    return reference_sequence(spec);
  PhaseSequence seq;
  std::stringstream ss(spec);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) throw DomainError("bad phase list: " + spec);
    seq.phases.push_back(std::stod(tok));
  }
  if (seq.phases.size() < 2)
    throw DomainError("phase list needs at least two entries");
  return seq;
}

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  return out;
}

int cmd_curve(const std::string& phases, int grid, const std::string& output) {
  const PhaseSequence seq = parse_phases(phases);
  std::optional<int> cheb_degree;
  bool is_bb1 = false;
  if (phases == "bb1") is_bb1 = true;
  if (phases.rfind("chebyshev:", 0) == 0) cheb_degree = seq.degree();
  bool all_zero = true;
  for (double p : seq.phases) all_zero &= (p == 0.0);
  if (all_zero) cheb_degree = seq.degree();

  auto out = open_output(output);
  const bool closed_form = is_bb1 || cheb_degree.has_value();
  out << "theta,a,P_ideal";
  if (closed_form) out << ",M_poly";
  out << "\n";
  for (double theta : linspace(0.0, 2.0 * M_PI, grid)) {
    const double a = std::cos(theta / 2.0);
    out << fmt(theta) << ',' << fmt(a) << ','
        << fmt(ideal_response(seq, theta));
    if (is_bb1)
      out << ',' << fmt(bb1_polynomial(a));
    else if (cheb_degree)
      out << ',' << fmt(chebyshev_value(*cheb_degree, a));
    out << "\n";
  }
  out << "# P_ideal = 1 - |<0|U|0>|^2 (flip probability from the adiabatic "
         "ground state)\n";
  return 0;
}

int cmd_compile(const std::string& phases, const std::string& mode,
                double theta, double amplitude, const std::string& output,
                const std::string& trace) {
  const PhaseSequence seq = parse_phases(phases);
  QubitParams q{1.0, amplitude};
  PulseSchedule sched;
  if (mode == "direct") {
    sched = build_direct_schedule({seq, theta, q});
  } else {
    sched = build_double_schedule(seq, theta, q);
  }
  save_schedule(sched, output);
  if (!trace.empty()) {
    auto out = open_output(trace);
    out << "t_Tr,epsilon\n";
    const double total = sched.total_duration();
    const double t_r = q.resonant_period();
    for (double t : linspace(0.0, total, 2001))
      out << fmt(t / t_r) << ',' << fmt(sched.epsilon_at(t)) << "\n";
  }
  std::cout << "wrote " << output << " (" << sched.segments.size()
            << " segments, " << fmt(schedule_duration(sched)) << " T_r)\n";
  return 0;
}

int cmd_simulate(const std::string& input, double dt_max,
                 const std::string& trajectory, bool diabatic) {
  const PulseSchedule sched = load_schedule(input);
  const double eps0 = sched.level_at_start(0);
  const auto basis =
      diabatic ? PopulationBasis::Diabatic : PopulationBasis::Adiabatic;
  const Trajectory traj =
      propagate(sched, adiabatic_ground(sched.qubit, eps0), dt_max, basis,
                trajectory.empty() ? 0 : 40);
  if (!trajectory.empty()) {
    auto out = open_output(trajectory);
    out << "t_Tr,P_minus\n";
    for (std::size_t i = 0; i < traj.times.size(); ++i)
      out << fmt(traj.times[i]) << ',' << fmt(traj.p_minus[i]) << "\n";
  }
  std::cout << "P_minus = " << fmt(traj.p_minus.back())
            << "  norm_drift = " << fmt(traj.max_norm_drift)
            << "  duration_Tr = " << fmt(schedule_duration(sched)) << "\n";
  if (traj.max_norm_drift > 1e-9) return kExitNumeric;
  return 0;
}

int cmd_sweep(const std::string& phases, const std::string& mode_str,
              double amplitude, int grid, double theta_min, double theta_max,
              bool both, double dt_max, const std::string& output) {
  const PhaseSequence seq = parse_phases(phases);
  QubitParams q{1.0, amplitude};
  SweepMode mode = SweepMode::Ideal;
  if (mode_str == "direct") mode = SweepMode::Direct;
  else if (mode_str == "double") mode = SweepMode::Double;

  const auto grid_vals = linspace(theta_min, theta_max, grid);
  const SweepResult res = sweep_response(seq, mode, q, grid_vals, dt_max);
  std::optional<SweepResult> other;
  if (both) {
    const auto other_mode =
        mode == SweepMode::Direct ? SweepMode::Double : SweepMode::Direct;
    other = sweep_response(seq, other_mode, q, grid_vals, dt_max);
  }

  auto out = open_output(output);
  out << "theta,P_ideal,P_sim,abs_err,duration_Tr";
  if (both) out << (mode == SweepMode::Direct ? ",duration_double_Tr"
                                              : ",duration_direct_Tr");
  out << ",reason\n";
  for (std::size_t i = 0; i < res.points.size(); ++i) {
    const auto& pt = res.points[i];
    out << fmt(pt.theta) << ',' << fmt(pt.p_ideal) << ',' << fmt(pt.p_sim)
        << ',' << fmt(pt.abs_err) << ',' << fmt(pt.duration_tr);
    if (both) out << ',' << fmt(other->points[i].duration_tr);
    out << ',' << pt.failure << "\n";
  }
  out << "# max_abs_err = " << fmt(res.max_abs_err) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"QSP-to-pulse compiler via the adiabatic-impulse model"};
  app.require_subcommand(1);

  std::string phases = "bb1", output, trace, mode = "direct", input,
              trajectory;
  int grid = 101;
  double theta = M_PI / 2, amplitude = 3.0, theta_min = 0.4, theta_max = 2.7,
         dt_max = 1e9;
  bool both = false, diabatic = false;

  auto* curve = app.add_subcommand("curve", "ideal response curve (CSV)");
  curve->add_option("--phases", phases, "preset (bb1, chebyshev:d) or list");
  curve->add_option("--grid", grid, "number of theta points");
  curve->add_option("-o,--output", output, "output CSV")->required();

  auto* compile = app.add_subcommand("compile", "compile a schedule (JSON)");
  compile->add_option("--phases", phases);
  compile->add_option("--mode", mode)->check(CLI::IsMember({"direct", "double"}));
  compile->add_option("--theta", theta, "W rotation angle (rad)");
  compile->add_option("--amplitude", amplitude, "drive amplitude A/Delta");
  compile->add_option("-o,--output", output)->required();
  compile->add_option("--emit-trace", trace, "also write eps(t) samples (CSV)");

  auto* simulate = app.add_subcommand("simulate", "propagate a schedule JSON");
  simulate->add_option("input", input, "schedule JSON")->required();
  simulate->add_option("--dt-max", dt_max, "integrator step override");
  simulate->add_option("--trajectory", trajectory, "trajectory CSV");
  simulate->add_flag("--diabatic", diabatic, "report diabatic populations");

  auto* sweep = app.add_subcommand("sweep", "theta sweep (CSV)");
  sweep->add_option("--phases", phases);
  sweep->add_option("--mode", mode)
      ->check(CLI::IsMember({"direct", "double", "ideal"}));
  sweep->add_option("--amplitude", amplitude);
  sweep->add_option("--grid", grid);
  sweep->add_option("--theta-min", theta_min);
  sweep->add_option("--theta-max", theta_max);
  sweep->add_option("--dt-max", dt_max);
  sweep->add_flag("--both", both, "emit durations for both compile modes");
  sweep->add_option("-o,--output", output)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (curve->parsed()) return cmd_curve(phases, grid, output);
    if (compile->parsed())
      return cmd_compile(phases, mode, theta, amplitude, output, trace);
    if (simulate->parsed())
      return cmd_simulate(input, dt_max, trajectory, diabatic);
    if (sweep->parsed())
      return cmd_sweep(phases, mode, amplitude, grid, theta_min, theta_max,
                       both, dt_max, output);
  } catch (const qspaim::DivergentScheduleError& e) {
    std::cerr << "compile divergence: " << e.what() << "\n";
    return kExitDivergent;
  } catch (const qspaim::DomainError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumeric;
  }
  return 0;
}
