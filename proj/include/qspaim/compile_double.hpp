#ifndef QSPAIM_COMPILE_DOUBLE_HPP
#define QSPAIM_COMPILE_DOUBLE_HPP

#include "qspaim/aim.hpp"
#include "qspaim/qsp.hpp"
#include "qspaim/schedule.hpp"

namespace qspaim {

/// P = 1/2 working point at a given amplitude:
/// omega_x = pi Delta^2 / (2 hbar A ln 2).
double half_probability_omega(const QubitParams& q);

/// Parameters of one R_x(theta) double-transition block. All waits are
/// the minimal non-negative realizations of the phase targets.
struct DoubleBlockParams {
  double phi_in;   ///< plateau phase before the first transition
  double phi_ad;   ///< tunable inter-transition phase
  double phi_fin;  ///< plateau phase after the second transition
  double t_in, t_ad, t_fin;  ///< corresponding waits
  double t_mid;              ///< t_in + t_fin, the merged inter-block wait
  double zeta_half;          ///< adiabatic phase of half a transition
  double stueckelberg;       ///< phi_St = phi_S + zeta_cos at the working point
  AimCharacterization ch;
};

/// Double-transition interferometer matrix
///   Xi = U(z3 + phi_fin) N^T U(z2 + phi_ad) N U(z1 + phi_in),
/// first crossing forward, second inverse. Matches the closed-form
/// entries
///   Xi11 = [R^2 e^{-i(2 phi_S + 2 z2 + 2 phi_ad)} + T^2]
///          e^{i(phi_ad + z2 - phi_in - z1 - phi_fin - z3)}
///   Xi12 = R T [1 - e^{-i(2 phi_S + 2 z2 + 2 phi_ad)}]
///          e^{i(phi_S + phi_ad + z2 + phi_in + z1 - phi_fin - z3)}.
/// `swap_directions` flips both crossing matrices (breaks the R_x
/// synthesis; kept for negative-control tests).
Unitary2 xi_matrix(const AimCharacterization& ch, double zeta1, double zeta2,
                   double zeta3, double phi_ad, double phi_in, double phi_fin,
                   bool swap_directions = false);

/// Choose the block phases so that Xi = R_x(theta) up to global phase.
/// Valid for any real theta; total on the angle (no divergent limit).
/// At an idealized working point with phi_St = pi/2 the phases reduce to
/// phi_in = phi_fin = pi/4 (mod pi), phi_ad = theta/2 + pi/2 (mod pi),
/// t_in = t_fin = T_L/4 and t_ad = {(theta + pi)/2 pi} T_L.
DoubleBlockParams rx_block(double theta, const QubitParams& q);

/// Full QSP schedule from double-transition blocks: starts at -A, one
/// block per W operator (up-transition, t_ad plateau at +A,
/// down-transition), with z-phase plateaus at -A realizing each
/// R_z(-2 phi_k) and the t_in/t_fin padding around every block.
PulseSchedule build_double_schedule(const PhaseSequence& seq, double theta,
                                    const QubitParams& q);

}  // namespace qspaim

#endif
