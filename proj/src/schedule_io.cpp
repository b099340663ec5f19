#include "qspaim/schedule_io.hpp"

#include <fstream>
#include <stdexcept>

#include <json.hpp>

namespace qspaim {

using nlohmann::json;

std::string schedule_to_json(const PulseSchedule& s) {
  json j;
  j["units"] = "hbar=1; energies in Delta, times in hbar/Delta";
  j["delta"] = s.qubit.delta;
  j["amplitude"] = s.qubit.amplitude;
  j["segments"] = json::array();
  for (const auto& seg : s.segments) {
    json e;
    if (seg.kind == SegmentKind::Constant) {
      e["kind"] = "const";
      e["epsilon"] = seg.epsilon;
      e["duration"] = seg.duration;
    } else {
      e["kind"] = "half_cosine";
      e["omega"] = seg.omega;
      e["direction"] = seg.direction == CrossDirection::Down ? "down" : "up";
    }
    j["segments"].push_back(e);
  }
  j["annotations"] = s.annotations;
  return j.dump(2) + "\n";
}

PulseSchedule schedule_from_json(const std::string& text) {
  const json j = json::parse(text);
  PulseSchedule s;
  s.qubit.delta = j.at("delta").get<double>();
  s.qubit.amplitude = j.at("amplitude").get<double>();
  for (const auto& e : j.at("segments")) {
    const std::string kind = e.at("kind").get<std::string>();
    if (kind == "const") {
      s.segments.push_back(DriveSegment::constant(
          e.at("epsilon").get<double>(), e.at("duration").get<double>()));
    } else if (kind == "half_cosine") {
      const std::string dir = e.at("direction").get<std::string>();
      s.segments.push_back(DriveSegment::half_cosine(
          e.at("omega").get<double>(),
          dir == "down" ? CrossDirection::Down : CrossDirection::Up));
    } else {
      throw std::runtime_error("unknown segment kind: " + kind);
    }
  }
  if (j.contains("annotations"))
    s.annotations = j["annotations"].get<std::vector<std::string>>();
  return s;
}

void save_schedule(const PulseSchedule& s, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << schedule_to_json(s);
}

PulseSchedule load_schedule(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::string text((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  return schedule_from_json(text);
}

}  // namespace qspaim
