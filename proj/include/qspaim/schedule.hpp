#ifndef QSPAIM_SCHEDULE_HPP
#define QSPAIM_SCHEDULE_HPP

#include <cmath>
#include <string>
#include <vector>

namespace qspaim {

inline constexpr double hbar = 1.0;  // fixed unit system

/// Qubit working parameters. Energies in units of the gap, hbar = 1;
/// times in 1/Delta. T_r = 2 pi / Delta is the reporting unit.
struct QubitParams {
  double delta = 1.0;      ///< minimal gap Delta (> 0)
  double amplitude = 3.0;  ///< drive amplitude A (> Delta)

  double resonant_period() const { return 2.0 * M_PI / delta; }
  bool valid() const { return delta > 0.0 && amplitude > delta; }
};

enum class SegmentKind { Constant, HalfCosine };
enum class CrossDirection { Down, Up };  // Down: +A -> -A, Up: -A -> +A

/// One drive segment. Constant plateaus carry an epsilon level and a
/// duration; half-cosine transitions carry omega and a direction, their
/// duration is pi/omega exactly.
struct DriveSegment {
  SegmentKind kind = SegmentKind::Constant;
  double epsilon = 0.0;   // constant level (plateaus)
  double duration = 0.0;  // plateaus only
  double omega = 0.0;     // half-cosine angular frequency
  CrossDirection direction = CrossDirection::Down;

  static DriveSegment constant(double epsilon, double duration) {
    DriveSegment s;
    s.kind = SegmentKind::Constant;
    s.epsilon = epsilon;
    s.duration = duration;
    return s;
  }
  static DriveSegment half_cosine(double omega, CrossDirection dir) {
    DriveSegment s;
    s.kind = SegmentKind::HalfCosine;
    s.omega = omega;
    s.direction = dir;
    return s;
  }

  double seg_duration() const {
    return kind == SegmentKind::Constant ? duration : M_PI / omega;
  }
};

/// Compiled drive schedule: ordered segments plus per-segment role tags
/// (pre-wait, transition, mid-wait, post-wait).
struct PulseSchedule {
  QubitParams qubit;
  std::vector<DriveSegment> segments;
  std::vector<std::string> annotations;

  double total_duration() const {
    double t = 0.0;
    for (const auto& s : segments) t += s.seg_duration();
    return t;
  }

  /// Drive level at the start of segment index i.
  double level_at_start(std::size_t i) const;
  /// Drive level at the end of segment index i.
  double level_at_end(std::size_t i) const;

  /// Max |epsilon| jump across any internal boundary (0 when continuous).
  double continuity_defect() const;

  /// epsilon(t) for t within the schedule, t measured from the start.
  double epsilon_at(double t) const;
};

}  // namespace qspaim

#endif
