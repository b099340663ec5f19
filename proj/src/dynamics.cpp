#include "qspaim/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <limits>
#include <numbers>
#include <thread>

#include "qspaim/aim.hpp"
#include "qspaim/compile_direct.hpp"
#include "qspaim/compile_double.hpp"

namespace qspaim {

namespace {
constexpr cplx I{0.0, 1.0};
constexpr double pi = std::numbers::pi;
}  // namespace

void StateVector::renormalize() {
  const double n = std::sqrt(norm2());
  if (n > 0.0) {
    c_up /= n;
    c_down /= n;
  }
}

StateVector adiabatic_excited(const QubitParams& q, double epsilon) {
  const double chi = std::atan2(q.delta, epsilon);
  return {std::cos(chi / 2.0), std::sin(chi / 2.0)};
}

StateVector adiabatic_ground(const QubitParams& q, double epsilon) {
  const double chi = std::atan2(q.delta, epsilon);
  return {-std::sin(chi / 2.0), std::cos(chi / 2.0)};
}

namespace {

struct Deriv {
  cplx du, dd;
};

// dpsi/dt = -i H psi, H = Delta/2 X + eps/2 Z (hbar = 1).
inline Deriv rhs(double delta, double eps, cplx u, cplx d) {
  return {-I * (0.5 * eps * u + 0.5 * delta * d),
          -I * (0.5 * delta * u - 0.5 * eps * d)};
}

double excited_population(const QubitParams& q, double eps,
                          const StateVector& psi, PopulationBasis basis) {
  if (basis == PopulationBasis::Diabatic) return std::norm(psi.c_up);
  const StateVector e = adiabatic_excited(q, eps);
  const cplx amp = std::conj(e.c_up) * psi.c_up + std::conj(e.c_down) * psi.c_down;
  return std::norm(amp);
}

}  // namespace

Trajectory propagate(const PulseSchedule& schedule, const StateVector& psi0,
                     double dt_max, PopulationBasis basis,
                     int samples_per_segment) {
  if (dt_max <= 0.0) throw DomainError("propagate requires dt_max > 0");
  if (schedule.segments.empty()) throw DomainError("empty schedule");

  const QubitParams& q = schedule.qubit;
  const double t_larmor =
      2.0 * pi / larmor_frequency(q, schedule.qubit.amplitude);
  const double t_r = q.resonant_period();

  Trajectory traj;
  StateVector psi = psi0;
  double t_abs = 0.0;

  auto record = [&](double eps) {
    traj.times.push_back(t_abs / t_r);
    traj.states.push_back(psi);
    traj.p_minus.push_back(excited_population(q, eps, psi, basis));
  };
  record(schedule.level_at_start(0));

  for (const auto& seg : schedule.segments) {
    const double dur = seg.seg_duration();
    if (dur == 0.0) continue;
    if (dur < 10.0 * std::numeric_limits<double>::epsilon())
      throw DomainError("schedule segment shorter than 10 eps: step underflow");

    double step_cap = std::min(dt_max, t_larmor / 400.0);
    if (seg.kind == SegmentKind::HalfCosine)
      step_cap = std::min(step_cap, dur / 400.0);
    const long n = std::max(4L, static_cast<long>(std::ceil(dur / step_cap)));
    const double dt = dur / static_cast<double>(n);

    const long sample_every =
        samples_per_segment > 0 ? std::max(1L, n / samples_per_segment) : 0;

    auto eps_at = [&](double tl) {
      if (seg.kind == SegmentKind::Constant) return seg.epsilon;
      const double v = q.amplitude * std::cos(seg.omega * tl);
      return seg.direction == CrossDirection::Down ? v : -v;
    };

    for (long i = 0; i < n; ++i) {
      const double tl = dt * static_cast<double>(i);
      const double e0 = eps_at(tl);
      const double em = eps_at(tl + dt / 2.0);
      const double e1 = eps_at(tl + dt);
      const Deriv k1 = rhs(q.delta, e0, psi.c_up, psi.c_down);
      const Deriv k2 = rhs(q.delta, em, psi.c_up + 0.5 * dt * k1.du,
                           psi.c_down + 0.5 * dt * k1.dd);
      const Deriv k3 = rhs(q.delta, em, psi.c_up + 0.5 * dt * k2.du,
                           psi.c_down + 0.5 * dt * k2.dd);
      const Deriv k4 = rhs(q.delta, e1, psi.c_up + dt * k3.du,
                           psi.c_down + dt * k3.dd);
      psi.c_up += dt / 6.0 * (k1.du + 2.0 * k2.du + 2.0 * k3.du + k4.du);
      psi.c_down += dt / 6.0 * (k1.dd + 2.0 * k2.dd + 2.0 * k3.dd + k4.dd);
      t_abs += dt;
      traj.max_norm_drift =
          std::max(traj.max_norm_drift, std::abs(std::sqrt(psi.norm2()) - 1.0));
      if (sample_every > 0 && (i + 1) % sample_every == 0) record(e1);
    }
  }

  const double eps_final = schedule.level_at_end(schedule.segments.size() - 1);
  psi.renormalize();  // once, at the end only
  traj.final_state = psi;
  if (traj.times.empty() || traj.times.back() != t_abs / t_r) record(eps_final);
  return traj;
}

double schedule_duration(const PulseSchedule& schedule) {
  return schedule.total_duration() / schedule.qubit.resonant_period();
}

double ideal_response(const PhaseSequence& seq, double theta) {
  const Unitary2 u = qsp_unitary(seq, std::cos(theta / 2.0));
  return 1.0 - std::norm(u.u11);
}

namespace {

int thread_budget(std::size_t jobs) {
  unsigned hw = std::thread::hardware_concurrency();
  if (hw == 0) hw = 1;
  if (const char* env = std::getenv("QSPAIM_THREADS")) {
    const long cap = std::strtol(env, nullptr, 10);
    if (cap > 0) hw = std::min<unsigned>(hw, static_cast<unsigned>(cap));
  }
  return static_cast<int>(std::min<std::size_t>(hw, jobs));
}

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn) {
  const int workers = thread_budget(n);
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t i = static_cast<std::size_t>(w); i < n;
           i += static_cast<std::size_t>(workers))
        fn(i);
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace

SweepResult sweep_response(const PhaseSequence& seq, SweepMode mode,
                           const QubitParams& q,
                           const std::vector<double>& theta_grid,
                           double dt_max) {
  SweepResult res;
  res.points.resize(theta_grid.size());

  parallel_for(theta_grid.size(), [&](std::size_t i) {
    const double theta = theta_grid[i];
    SweepPoint& pt = res.points[i];
    pt.theta = theta;
    pt.a = std::cos(theta / 2.0);
    pt.p_ideal = ideal_response(seq, theta);
    pt.p_sim = std::numeric_limits<double>::quiet_NaN();
    pt.abs_err = std::numeric_limits<double>::quiet_NaN();
    pt.duration_tr = std::numeric_limits<double>::quiet_NaN();
    try {
      if (mode == SweepMode::Ideal) {
        pt.p_sim = pt.p_ideal;
        pt.duration_tr = 0.0;
      } else {
        PulseSchedule sched;
        if (mode == SweepMode::Direct) {
          sched = build_direct_schedule({seq, theta, q});
        } else {
          sched = build_double_schedule(seq, theta, q);
        }
        const double eps0 = sched.level_at_start(0);
        const Trajectory traj =
            propagate(sched, adiabatic_ground(q, eps0), dt_max);
        pt.p_sim = traj.p_minus.back();
        pt.duration_tr = schedule_duration(sched);
      }
      pt.abs_err = std::abs(pt.p_sim - pt.p_ideal);
    } catch (const std::exception& e) {
      pt.failure = e.what();
    }
  });

  for (const auto& pt : res.points)
    if (pt.failure.empty() && std::isfinite(pt.abs_err))
      res.max_abs_err = std::max(res.max_abs_err, pt.abs_err);
  return res;
}

std::vector<double> linspace(double lo, double hi, int n) {
  std::vector<double> g(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    g[static_cast<std::size_t>(i)] =
        n == 1 ? lo : lo + (hi - lo) * i / (n - 1);
  return g;
}

}  // namespace qspaim
