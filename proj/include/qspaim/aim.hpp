#ifndef QSPAIM_AIM_HPP
#define QSPAIM_AIM_HPP

#include "qspaim/qsp.hpp"
#include "qspaim/schedule.hpp"
#include "qspaim/unitary2.hpp"

namespace qspaim {

/// Per-transition LZSM bundle at a working point (Delta, A, omega).
/// Immutable after construction.
struct AimCharacterization {
  double sweep_speed;   ///< v = A omega at the anti-crossing
  double delta_adb;     ///< adiabaticity delta = Delta^2 / (4 hbar v)
  double stokes;        ///< Stokes phase phi_S
  double p;             ///< LZSM excitation probability
  double t_coef;        ///< transmission sqrt(P)
  double r_coef;        ///< reflection sqrt(1 - P)
  double omega_larmor;  ///< Omega_L = sqrt(A^2 + Delta^2) / hbar
  double t_larmor;      ///< T_L = 2 pi / Omega_L
};

/// Lanczos-series complex log-gamma, valid for Re(z) > 0.
cplx log_gamma(cplx z);

/// phi_S = pi/4 + delta (ln delta - 1) + arg Gamma(1 - i delta).
/// The delta-dependent terms vanish at delta = 0.
double stokes_phase(double delta_adb);

/// Populate the full bundle for a half-cosine transition at frequency
/// omega. Throws DomainError for omega <= 0.
AimCharacterization characterize(const QubitParams& q, double omega);

/// Larmor frequency sqrt(eps^2 + Delta^2)/hbar at a plateau level.
double larmor_frequency(const QubitParams& q, double epsilon);

/// Free-evolution phase zeta = (1 / 2 hbar) int sqrt(eps(t)^2 + Delta^2) dt
/// over [t_from, t_to] inside the segment (times local to the segment).
/// Closed form on plateaus, adaptive Simpson (abs tol 1e-10) on cosines.
double adiabatic_phase(const QubitParams& q, const DriveSegment& seg,
                       double t_from, double t_to);

/// Adiabatic phase over a whole segment.
double adiabatic_phase(const QubitParams& q, const DriveSegment& seg);

/// Adiabatic evolution U(zeta) = diag(e^{-i zeta}, e^{i zeta}) in the
/// (excited, ground) adiabatic ordering.
Unitary2 adiabatic_evolution(double zeta);

/// Impulse transition matrix N, or its transpose for the inverse
/// crossing. In the drive convention used here the upward crossing
/// (-A -> +A) is the forward one; downward crossings take N^T.
Unitary2 transition_matrix(const AimCharacterization& ch, bool inverse);

inline bool crossing_is_inverse(CrossDirection dir) {
  return dir == CrossDirection::Down;
}

/// U(zeta_2) N U(zeta_1): one LZSM passage with its adiabatic wings.
Unitary2 single_lzsm_unitary(const AimCharacterization& ch, double zeta1,
                             double zeta2, bool inverse);

/// Rotation form of the same passage,
///   R_z(2 zeta_2 + phi_S + s pi/2) R_x(theta) R_z(2 zeta_1 + phi_S - s pi/2)
/// with sin^2(theta/2) = P and s = +1 (forward) or -1 (inverse).
/// Equals single_lzsm_unitary exactly, not just up to phase.
Unitary2 single_lzsm_rotation_form(const AimCharacterization& ch, double zeta1,
                                   double zeta2, bool inverse);

/// AIM-algebra playback of a full schedule: adiabatic phases on plateaus
/// and cosine halves, impulse matrices at each anti-crossing. The result
/// lives in the adiabatic frame, ordering (excited, ground).
Unitary2 aim_playback(const PulseSchedule& schedule);

}  // namespace qspaim

#endif
