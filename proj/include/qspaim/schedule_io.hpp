#ifndef QSPAIM_SCHEDULE_IO_HPP
#define QSPAIM_SCHEDULE_IO_HPP

#include <string>

#include "qspaim/schedule.hpp"

namespace qspaim {

/// JSON text for a schedule. Durations are in hbar/Delta units; the
/// "units" field records the convention. Round-trips exactly (doubles
/// serialized losslessly).
std::string schedule_to_json(const PulseSchedule& s);
PulseSchedule schedule_from_json(const std::string& text);

void save_schedule(const PulseSchedule& s, const std::string& path);
PulseSchedule load_schedule(const std::string& path);

}  // namespace qspaim

#endif
