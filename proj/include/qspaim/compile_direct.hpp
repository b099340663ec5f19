#ifndef QSPAIM_COMPILE_DIRECT_HPP
#define QSPAIM_COMPILE_DIRECT_HPP

#include <stdexcept>
#include <vector>

#include "qspaim/aim.hpp"
#include "qspaim/qsp.hpp"
#include "qspaim/schedule.hpp"

namespace qspaim {

/// Raised when the requested rotation angle sits at a singular limit of
/// the frequency map (P -> 0 gives omega -> 0, P -> 1 gives omega -> inf).
struct DivergentScheduleError : std::runtime_error {
  enum class Limit { ProbabilityZero, ProbabilityOne };
  Limit limit;
  double theta;
  DivergentScheduleError(Limit lim, double th);
};

struct DirectCompileRequest {
  PhaseSequence seq;
  double theta = M_PI / 2;  ///< shared W rotation angle
  QubitParams qubit;
  double theta_min = 0.05;  ///< guard width at both singular ends
};

/// Solved plateau durations for the piecewise drive of the direct scheme.
struct PhaseSolution {
  double omega;
  double t_start;                ///< T_s, the initial +A wait (= t_const[0])
  std::vector<double> t_const;   ///< d+1 plateau durations
  double zeta_cos;               ///< adiabatic phase of one full half-cosine
  double stokes;
  double total_duration;
  bool theta_negated;            ///< compiled W uses R_x(-theta) (always)
};

/// omega = -pi Delta^2 / (2 hbar A ln sin^2(theta/2)). Throws
/// DivergentScheduleError outside (theta_min, pi - theta_min).
double omega_for_theta(double theta, const QubitParams& q,
                       double theta_min = 0.05);

/// Solve the per-plateau phase-matching conditions for the minimal
/// non-negative durations (winding number chosen per plateau).
PhaseSolution solve_phase_durations(const DirectCompileRequest& req);

/// Emit the drive: +A plateau, then alternating half-cosine transitions
/// and plateaus at the opposite level, d transitions in total.
PulseSchedule build_direct_schedule(const DirectCompileRequest& req);

}  // namespace qspaim

#endif
