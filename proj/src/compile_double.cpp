#include "qspaim/compile_double.hpp"

#include <cmath>
#include <numbers>

namespace qspaim {

namespace {
constexpr double pi = std::numbers::pi;

double mod_2pi(double x) {
  double r = std::fmod(x, 2.0 * pi);
  if (r < 0.0) r += 2.0 * pi;
  return r;
}

// A pi shift on any block phase only flips the global sign, so waits are
// taken minimal modulo pi.
double mod_pi(double x) {
  double r = std::fmod(x, pi);
  if (r < 0.0) r += pi;
  return r;
}
}  // namespace

double half_probability_omega(const QubitParams& q) {
  return pi * q.delta * q.delta /
         (2.0 * hbar * q.amplitude * std::numbers::ln2);
}

Unitary2 xi_matrix(const AimCharacterization& ch, double zeta1, double zeta2,
                   double zeta3, double phi_ad, double phi_in, double phi_fin,
                   bool swap_directions) {
  const Unitary2 first = transition_matrix(ch, swap_directions);
  const Unitary2 second = transition_matrix(ch, !swap_directions);
  return adiabatic_evolution(zeta3 + phi_fin) * second *
         adiabatic_evolution(zeta2 + phi_ad) * first *
         adiabatic_evolution(zeta1 + phi_in);
}

DoubleBlockParams rx_block(double theta, const QubitParams& q) {
  const double omega = half_probability_omega(q);
  DoubleBlockParams b{.phi_in = 0,
                      .phi_ad = 0,
                      .phi_fin = 0,
                      .t_in = 0,
                      .t_ad = 0,
                      .t_fin = 0,
                      .t_mid = 0,
                      .zeta_half = 0,
                      .stueckelberg = 0,
                      .ch = characterize(q, omega)};

  const DriveSegment up = DriveSegment::half_cosine(omega, CrossDirection::Up);
  const double zeta_cos = adiabatic_phase(q, up);
  b.zeta_half = zeta_cos / 2.0;
  b.stueckelberg = mod_2pi(b.ch.stokes + zeta_cos);

  // Phase targets making Xi = R_x(theta) up to global phase. For the
  // idealized phi_St = pi/2 point these reduce to phi_in = phi_fin =
  // pi/4 and phi_ad = theta/2 + pi/2 (mod pi); a general working point
  // absorbs the phi_St offset here instead of retuning omega.
  b.phi_ad = mod_pi(theta / 2.0 - b.stueckelberg);
  b.phi_in = mod_pi((pi - b.ch.stokes) / 2.0 - b.zeta_half);
  b.phi_fin = b.phi_in;

  b.t_in = 2.0 * b.phi_in / b.ch.omega_larmor;
  b.t_ad = 2.0 * b.phi_ad / b.ch.omega_larmor;
  b.t_fin = 2.0 * b.phi_fin / b.ch.omega_larmor;
  b.t_mid = b.t_in + b.t_fin;
  return b;
}

PulseSchedule build_double_schedule(const PhaseSequence& seq, double theta,
                                    const QubitParams& q) {
  const int d = seq.degree();
  if (d < 1) throw DomainError("double compile needs degree >= 1");
  // W(a) = R_x(-theta); the block is total on the angle.
  const DoubleBlockParams b = rx_block(-theta, q);
  const double a = q.amplitude;
  const double omega_x = half_probability_omega(q);

  PulseSchedule s;
  s.qubit = q;
  auto z_wait = [&](double phi) {
    // R_z(-2 phi) at the -A resting level, minimal non-negative wait.
    return DriveSegment::constant(-a, mod_2pi(-2.0 * phi) / b.ch.omega_larmor);
  };

  const auto& phi = seq.phases;
  s.segments.push_back(z_wait(phi[static_cast<std::size_t>(d)]));
  s.annotations.push_back("pre-wait");
  for (int k = d; k >= 1; --k) {
    s.segments.push_back(DriveSegment::constant(-a, b.t_in));
    s.annotations.push_back("mid-wait");
    s.segments.push_back(DriveSegment::half_cosine(omega_x, CrossDirection::Up));
    s.annotations.push_back("transition");
    s.segments.push_back(DriveSegment::constant(a, b.t_ad));
    s.annotations.push_back("mid-wait");
    s.segments.push_back(
        DriveSegment::half_cosine(omega_x, CrossDirection::Down));
    s.annotations.push_back("transition");
    s.segments.push_back(DriveSegment::constant(-a, b.t_fin));
    s.annotations.push_back("mid-wait");
    s.segments.push_back(z_wait(phi[static_cast<std::size_t>(k - 1)]));
    s.annotations.push_back(k == 1 ? "post-wait" : "mid-wait");
  }
  return s;
}

}  // namespace qspaim
