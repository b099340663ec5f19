#include "qspaim/aim.hpp"

#include <cmath>
#include <numbers>

namespace qspaim {

namespace {
constexpr cplx I{0.0, 1.0};
constexpr double pi = std::numbers::pi;
}  // namespace

cplx log_gamma(cplx z) {
  // Lanczos approximation, g = 7. Valid for Re(z) > 0, which covers the
  // arguments 1 - i delta needed for the Stokes phase.
  static const double coef[] = {
      0.99999999999980993,  676.5203681218851,   -1259.1392167224028,
      771.32342877765313,   -176.61502916214059, 12.507343278686905,
      -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};
  const int g = 7;
  z -= 1.0;
  cplx x = coef[0];
  for (int i = 1; i < g + 2; ++i) x += coef[i] / (z + static_cast<double>(i));
  const cplx t = z + (g + 0.5);
  return 0.5 * std::log(2.0 * pi) + (z + 0.5) * std::log(t) - t + std::log(x);
}

double stokes_phase(double delta_adb) {
  if (delta_adb < 0.0) throw DomainError("stokes_phase requires delta >= 0");
  if (delta_adb == 0.0) return pi / 4.0;
  return pi / 4.0 + delta_adb * (std::log(delta_adb) - 1.0) +
         std::imag(log_gamma(cplx{1.0, -delta_adb}));
}

AimCharacterization characterize(const QubitParams& q, double omega) {
  if (omega <= 0.0) throw DomainError("characterize requires omega > 0");
  AimCharacterization ch;
  ch.sweep_speed = q.amplitude * omega;
  ch.delta_adb = q.delta * q.delta / (4.0 * hbar * ch.sweep_speed);
  ch.stokes = stokes_phase(ch.delta_adb);
  ch.p = std::exp(-pi * q.delta * q.delta / (2.0 * q.amplitude * hbar * omega));
  ch.t_coef = std::sqrt(ch.p);
  ch.r_coef = std::sqrt(1.0 - ch.p);
  ch.omega_larmor = std::hypot(q.amplitude, q.delta) / hbar;
  ch.t_larmor = 2.0 * pi / ch.omega_larmor;
  return ch;
}

double larmor_frequency(const QubitParams& q, double epsilon) {
  return std::hypot(epsilon, q.delta) / hbar;
}

namespace {

double gap_integrand(const QubitParams& q, const DriveSegment& seg, double t) {
  double eps;
  if (seg.kind == SegmentKind::Constant) {
    eps = seg.epsilon;
  } else {
    eps = q.amplitude * std::cos(seg.omega * t);
    if (seg.direction == CrossDirection::Up) eps = -eps;
  }
  return std::hypot(eps, q.delta) / (2.0 * hbar);
}

double simpson(double a, double b, double fa, double fm, double fb) {
  return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double adaptive_simpson(const QubitParams& q, const DriveSegment& seg,
                        double a, double b, double fa, double fm, double fb,
                        double whole, double tol, int depth) {
  const double m = 0.5 * (a + b);
  const double fl = gap_integrand(q, seg, 0.5 * (a + m));
  const double fr = gap_integrand(q, seg, 0.5 * (m + b));
  const double left = simpson(a, m, fa, fl, fm);
  const double right = simpson(m, b, fm, fr, fb);
  const double err = left + right - whole;
  if (depth <= 0 || std::abs(err) < 15.0 * tol)
    return left + right + err / 15.0;
  return adaptive_simpson(q, seg, a, m, fa, fl, fm, left, tol / 2.0,
                          depth - 1) +
         adaptive_simpson(q, seg, m, b, fm, fr, fb, right, tol / 2.0,
                          depth - 1);
}

}  // namespace

double adiabatic_phase(const QubitParams& q, const DriveSegment& seg,
                       double t_from, double t_to) {
  const double dur = seg.seg_duration();
  if (t_from < -1e-12 || t_to > dur + 1e-12 || t_from > t_to)
    throw DomainError("adiabatic_phase interval outside segment");
  if (t_from == t_to) return 0.0;
  if (seg.kind == SegmentKind::Constant)
    return larmor_frequency(q, seg.epsilon) * (t_to - t_from) / 2.0;
  const double fa = gap_integrand(q, seg, t_from);
  const double fb = gap_integrand(q, seg, t_to);
  const double fm = gap_integrand(q, seg, 0.5 * (t_from + t_to));
  const double whole = simpson(t_from, t_to, fa, fm, fb);
  return adaptive_simpson(q, seg, t_from, t_to, fa, fm, fb, whole, 1e-10, 40);
}

double adiabatic_phase(const QubitParams& q, const DriveSegment& seg) {
  return adiabatic_phase(q, seg, 0.0, seg.seg_duration());
}

Unitary2 adiabatic_evolution(double zeta) {
  return {std::exp(-I * zeta), 0.0, 0.0, std::exp(I * zeta)};
}

Unitary2 transition_matrix(const AimCharacterization& ch, bool inverse) {
  Unitary2 n{ch.r_coef * std::exp(-I * ch.stokes), -ch.t_coef, ch.t_coef,
             ch.r_coef * std::exp(I * ch.stokes)};
  return inverse ? n.transpose() : n;
}

Unitary2 single_lzsm_unitary(const AimCharacterization& ch, double zeta1,
                             double zeta2, bool inverse) {
  return adiabatic_evolution(zeta2) * transition_matrix(ch, inverse) *
         adiabatic_evolution(zeta1);
}

Unitary2 single_lzsm_rotation_form(const AimCharacterization& ch, double zeta1,
                                   double zeta2, bool inverse) {
  const double theta = 2.0 * std::asin(ch.t_coef);
  const double s = inverse ? -1.0 : 1.0;
  return rotation_gate(Axis::Z, 2.0 * zeta2 + ch.stokes + s * pi / 2.0) *
         rotation_gate(Axis::X, theta) *
         rotation_gate(Axis::Z, 2.0 * zeta1 + ch.stokes - s * pi / 2.0);
}

Unitary2 aim_playback(const PulseSchedule& schedule) {
  Unitary2 u = Unitary2::identity();
  const QubitParams& q = schedule.qubit;
  for (const auto& seg : schedule.segments) {
    if (seg.kind == SegmentKind::Constant) {
      u = adiabatic_evolution(adiabatic_phase(q, seg)) * u;
      continue;
    }
    // Anti-crossing at the segment midpoint: accumulate the leading
    // half adiabatically, apply N (or N^T), then the trailing half.
    const double mid = 0.5 * seg.seg_duration();
    const AimCharacterization ch = characterize(q, seg.omega);
    u = adiabatic_evolution(adiabatic_phase(q, seg, 0.0, mid)) * u;
    u = transition_matrix(ch, crossing_is_inverse(seg.direction)) * u;
    u = adiabatic_evolution(
            adiabatic_phase(q, seg, mid, seg.seg_duration())) * u;
  }
  return u;
}

}  // namespace qspaim
