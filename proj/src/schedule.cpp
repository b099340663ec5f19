#include "qspaim/schedule.hpp"

#include <algorithm>
#include <cmath>

namespace qspaim {

namespace {
double cosine_level(const DriveSegment& s, double t_local, double amplitude) {
  // Down: +A -> -A is A cos(w t); Up is the negative.
  const double v = amplitude * std::cos(s.omega * t_local);
  return s.direction == CrossDirection::Down ? v : -v;
}
}  // namespace

double PulseSchedule::level_at_start(std::size_t i) const {
  const auto& s = segments[i];
  if (s.kind == SegmentKind::Constant) return s.epsilon;
  return cosine_level(s, 0.0, qubit.amplitude);
}

double PulseSchedule::level_at_end(std::size_t i) const {
  const auto& s = segments[i];
  if (s.kind == SegmentKind::Constant) return s.epsilon;
  return cosine_level(s, M_PI / s.omega, qubit.amplitude);
}

double PulseSchedule::continuity_defect() const {
  double worst = 0.0;
  for (std::size_t i = 0; i + 1 < segments.size(); ++i)
    worst = std::max(worst,
                     std::abs(level_at_end(i) - level_at_start(i + 1)));
  return worst;
}

double PulseSchedule::epsilon_at(double t) const {
  double acc = 0.0;
  for (std::size_t i = 0; i < segments.size(); ++i) {
    const double dur = segments[i].seg_duration();
    if (t <= acc + dur || i + 1 == segments.size()) {
      const auto& s = segments[i];
      if (s.kind == SegmentKind::Constant) return s.epsilon;
      return cosine_level(s, std::clamp(t - acc, 0.0, dur), qubit.amplitude);
    }
    acc += dur;
  }
  return 0.0;
}

}  // namespace qspaim
