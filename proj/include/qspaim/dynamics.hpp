#ifndef QSPAIM_DYNAMICS_HPP
#define QSPAIM_DYNAMICS_HPP

#include <optional>
#include <string>
#include <vector>

#include "qspaim/qsp.hpp"
#include "qspaim/schedule.hpp"
#include "qspaim/unitary2.hpp"

namespace qspaim {

/// Two-component state in the diabatic (sigma_z) basis.
struct StateVector {
  cplx c_up{1.0, 0.0};
  cplx c_down{0.0, 0.0};

  double norm2() const {
    return std::norm(c_up) + std::norm(c_down);
  }
  void renormalize();
};

/// Instantaneous eigenbasis at drive level epsilon. Smooth in epsilon
/// across the anti-crossing (mixing angle chi = atan2(Delta, epsilon)).
StateVector adiabatic_excited(const QubitParams& q, double epsilon);
StateVector adiabatic_ground(const QubitParams& q, double epsilon);

struct Trajectory {
  std::vector<double> times;     ///< in T_r units
  std::vector<StateVector> states;
  std::vector<double> p_minus;   ///< adiabatic excited population
  StateVector final_state;
  double max_norm_drift = 0.0;   ///< before the single final renormalization
};

/// Basis used when reporting P_- along / at the end of a trajectory.
enum class PopulationBasis { Adiabatic, Diabatic };

/// Fixed-step RK4 propagation of i hbar dpsi/dt = H(t) psi with
/// H = Delta/2 X + eps(t)/2 Z. Step <= min(dt_max, T_L/400, T_seg/400
/// on cosine segments); the state is renormalized once at the end.
Trajectory propagate(const PulseSchedule& schedule, const StateVector& psi0,
                     double dt_max,
                     PopulationBasis basis = PopulationBasis::Adiabatic,
                     int samples_per_segment = 0);

/// Total schedule duration in T_r = 2 pi / Delta units.
double schedule_duration(const PulseSchedule& schedule);

enum class SweepMode { Direct, Double, Ideal };

struct SweepPoint {
  double theta;
  double a;
  double p_ideal;
  double p_sim;
  double abs_err;
  double duration_tr;
  std::string failure;  ///< empty on success
};

struct SweepResult {
  std::vector<SweepPoint> points;
  double max_abs_err = 0.0;  ///< over successful points
};

/// Per theta: compile for the requested mode (or evaluate algebraically
/// for Ideal), propagate from the schedule's initial adiabatic ground
/// state, and record P_-. The ideal reference is the flip probability
/// 1 - |<0|U_{Phi,a}|0>|^2. Compilation failures mark the point, they do
/// not abort the sweep. Grid points run in parallel, capped by
/// QSPAIM_THREADS.
SweepResult sweep_response(const PhaseSequence& seq, SweepMode mode,
                           const QubitParams& q,
                           const std::vector<double>& theta_grid,
                           double dt_max = 1e9);

/// Ideal flip probability for a sequence at angle theta.
double ideal_response(const PhaseSequence& seq, double theta);

std::vector<double> linspace(double lo, double hi, int n);

}  // namespace qspaim

#endif
