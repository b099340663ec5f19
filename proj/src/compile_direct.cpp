#include "qspaim/compile_direct.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace qspaim {

namespace {
constexpr double pi = std::numbers::pi;

double mod_2pi(double x) {
  double r = std::fmod(x, 2.0 * pi);
  if (r < 0.0) r += 2.0 * pi;
  return r;
}
}  // namespace

DivergentScheduleError::DivergentScheduleError(Limit lim, double th)
    : std::runtime_error(
          lim == Limit::ProbabilityZero
              ? "theta too close to 0: P -> 0, omega -> 0, duration diverges"
              : "theta too close to pi: P -> 1, omega diverges"),
      limit(lim),
      theta(th) {}

double omega_for_theta(double theta, const QubitParams& q, double theta_min) {
  if (theta <= theta_min)
    throw DivergentScheduleError(DivergentScheduleError::Limit::ProbabilityZero,
                                 theta);
  if (theta >= pi - theta_min)
    throw DivergentScheduleError(DivergentScheduleError::Limit::ProbabilityOne,
                                 theta);
  const double p = std::sin(theta / 2.0) * std::sin(theta / 2.0);
  return -pi * q.delta * q.delta /
         (2.0 * hbar * q.amplitude * std::log(p));
}

PhaseSolution solve_phase_durations(const DirectCompileRequest& req) {
  const int d = req.seq.degree();
  if (d < 1) throw DomainError("direct compile needs degree >= 1");
  const double omega = omega_for_theta(req.theta, req.qubit, req.theta_min);
  const AimCharacterization ch = characterize(req.qubit, omega);

  const DriveSegment cosine =
      DriveSegment::half_cosine(omega, CrossDirection::Down);
  const double zc = adiabatic_phase(req.qubit, cosine);

  const auto& phi = req.seq.phases;
  PhaseSolution sol;
  sol.omega = omega;
  sol.zeta_cos = zc;
  sol.stokes = ch.stokes;
  sol.theta_negated = true;
  sol.t_const.resize(static_cast<std::size_t>(d) + 1);

  // Plateau k in time order realizes the z-phase paired with phi_{d-k}
  // (the QSP product applies S(phi_d) first). The ends carry a single
  // half-cosine phase and a pi/2 Stokes offset from splitting N into
  // rotations; interior plateaus sit between two crossings and absorb a
  // full zeta_cos on each side plus the parity pi. The first crossing
  // (downward, from the +A start) is the inverse one.
  auto minimal_wait = [&](double needed_two_zeta) {
    return mod_2pi(needed_two_zeta) / ch.omega_larmor;
  };
  sol.t_const[0] =
      minimal_wait(-2.0 * phi[static_cast<std::size_t>(d)] - ch.stokes +
                   pi / 2.0 - zc);
  for (int k = 1; k < d; ++k)
    sol.t_const[static_cast<std::size_t>(k)] = minimal_wait(
        -2.0 * phi[static_cast<std::size_t>(d - k)] - 2.0 * ch.stokes - pi -
        2.0 * zc);
  const double end_offset = (d % 2 == 1) ? 3.0 * pi / 2.0 : pi / 2.0;
  sol.t_const[static_cast<std::size_t>(d)] =
      minimal_wait(-2.0 * phi[0] - ch.stokes + end_offset - zc);

  sol.t_start = sol.t_const[0];
  double total = d * (pi / omega);
  for (double t : sol.t_const) total += t;
  sol.total_duration = total;
  return sol;
}

PulseSchedule build_direct_schedule(const DirectCompileRequest& req) {
  const PhaseSolution sol = solve_phase_durations(req);
  const int d = req.seq.degree();
  const double a = req.qubit.amplitude;

  PulseSchedule s;
  s.qubit = req.qubit;
  s.segments.push_back(DriveSegment::constant(a, sol.t_const[0]));
  s.annotations.push_back("pre-wait");
  double level = a;
  for (int k = 1; k <= d; ++k) {
    const auto dir = level > 0 ? CrossDirection::Down : CrossDirection::Up;
    s.segments.push_back(DriveSegment::half_cosine(sol.omega, dir));
    s.annotations.push_back("transition");
    level = -level;
    s.segments.push_back(
        DriveSegment::constant(level, sol.t_const[static_cast<std::size_t>(k)]));
    s.annotations.push_back(k == d ? "post-wait" : "mid-wait");
  }
  return s;
}

}  // namespace qspaim
