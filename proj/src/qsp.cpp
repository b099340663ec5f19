#include "qspaim/qsp.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace qspaim {

namespace {
constexpr cplx I{0.0, 1.0};
}

SignalPoint SignalPoint::from_theta(double theta) {
  return {theta, std::cos(theta / 2.0)};
}

SignalPoint SignalPoint::from_a(double a) {
  if (std::abs(a) > 1.0) throw DomainError("signal parameter |a| > 1");
  // principal branch, theta in [0, 2 pi]
  return {2.0 * std::acos(a), a};
}

Unitary2 rotation_gate(Axis axis, double angle) {
  const double c = std::cos(angle / 2.0);
  const double s = std::sin(angle / 2.0);
  if (axis == Axis::X) return {c, -I * s, -I * s, c};
  return {std::exp(-I * (angle / 2.0)), 0.0, 0.0, std::exp(I * (angle / 2.0))};
}

Unitary2 qsp_operator(QspOperator kind, double arg) {
  if (kind == QspOperator::W) {
    if (std::abs(arg) > 1.0) throw DomainError("W(a) requires |a| <= 1");
    const double s = std::sqrt(1.0 - arg * arg);
    return {arg, I * s, I * s, arg};
  }
  return {std::exp(I * arg), 0.0, 0.0, std::exp(-I * arg)};
}

Unitary2 qsp_unitary(const PhaseSequence& seq, double a) {
  if (std::abs(a) > 1.0) throw DomainError("qsp_unitary requires |a| <= 1");
  Unitary2 u = qsp_operator(QspOperator::S, seq.phases.at(0));
  const Unitary2 w = qsp_operator(QspOperator::W, a);
  for (std::size_t k = 1; k < seq.phases.size(); ++k)
    u = u * w * qsp_operator(QspOperator::S, seq.phases[k]);
  return u;
}

PhaseSequence chebyshev_sequence(int d) {
  if (d < 1) throw DomainError("chebyshev sequence requires d >= 1");
  return {std::vector<double>(static_cast<std::size_t>(d) + 1, 0.0)};
}

PhaseSequence bb1_sequence() {
  const double eta = 0.5 * std::acos(-0.25);
  return {{std::numbers::pi / 2.0, -eta, 2.0 * eta, 0.0, -2.0 * eta, eta}};
}

PhaseSequence reference_sequence(const std::string& name) {
  if (name == "bb1") return bb1_sequence();
  if (name.rfind("chebyshev:", 0) == 0) {
    const int d = std::stoi(name.substr(10));
    return chebyshev_sequence(d);
  }
  throw DomainError("unknown reference sequence: " + name);
}

double chebyshev_value(int d, double a) {
  if (d < 0) throw DomainError("chebyshev_value requires d >= 0");
  double tm = 1.0, t = a;
  if (d == 0) return tm;
  for (int k = 2; k <= d; ++k) {
    const double tn = 2.0 * a * t - tm;
    tm = t;
    t = tn;
  }
  return t;
}

double bb1_polynomial(double a) {
  const double a2 = a * a;
  return 0.125 * a2 * ((((3.0 * a2 - 15.0) * a2 + 35.0) * a2 - 45.0) * a2 + 30.0);
}

namespace {

// Coefficients of T_j in the power basis, accumulated into out with
// weight c.
void add_chebyshev_in_power_basis(int j, double c, std::vector<double>& out) {
  std::vector<double> tm{1.0}, t{0.0, 1.0};
  if (j == 0) {
    out[0] += c;
    return;
  }
  for (int k = 2; k <= j; ++k) {
    std::vector<double> tn(static_cast<std::size_t>(k) + 1, 0.0);
    for (std::size_t i = 0; i < t.size(); ++i) tn[i + 1] = 2.0 * t[i];
    for (std::size_t i = 0; i < tm.size(); ++i) tn[i] -= tm[i];
    tm = std::move(t);
    t = std::move(tn);
  }
  for (std::size_t i = 0; i < t.size(); ++i) out[i] += c * t[i];
}

// Exact least squares in the Chebyshev basis via discrete orthogonality
// at first-kind nodes; returns power-basis coefficients up to deg.
std::vector<double> fit_power_coeffs(const std::vector<double>& nodes,
                                     const std::vector<double>& values,
                                     int deg) {
  const std::size_t m = nodes.size();
  std::vector<double> power(static_cast<std::size_t>(deg) + 1, 0.0);
  for (int j = 0; j <= deg; ++j) {
    double s = 0.0;
    for (std::size_t i = 0; i < m; ++i)
      s += values[i] * chebyshev_value(j, nodes[i]);
    const double c = (j == 0 ? s / m : 2.0 * s / m);
    add_chebyshev_in_power_basis(j, c, power);
  }
  return power;
}

double eval_poly(const std::vector<double>& c, double a) {
  double v = 0.0;
  for (std::size_t i = c.size(); i-- > 0;) v = v * a + c[i];
  return v;
}

}  // namespace

PolynomialReport extract_polynomial(const PhaseSequence& seq, int grid_size) {
  const int d = seq.degree();
  if (grid_size < 2 * (d + 1))
    throw DomainError("extract_polynomial grid too small");

  // First-kind Chebyshev nodes; all interior, so the Q division by
  // sqrt(1 - a^2) stays well away from zero.
  std::vector<double> nodes(static_cast<std::size_t>(grid_size));
  for (int i = 0; i < grid_size; ++i)
    nodes[static_cast<std::size_t>(i)] =
        std::cos(std::numbers::pi * (i + 0.5) / grid_size);

  std::vector<double> mre(nodes.size()), mim(nodes.size()), qre(nodes.size()),
      qim(nodes.size());
  std::vector<Unitary2> us(nodes.size());
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const double a = nodes[i];
    const Unitary2 u = qsp_unitary(seq, a);
    us[i] = u;
    mre[i] = u.u11.real();
    mim[i] = u.u11.imag();
    const double root = std::sqrt(1.0 - a * a);
    if (root * root < 1e-6) {
      qre[i] = qim[i] = 0.0;  // excluded region guard; unreachable here
    } else {
      const cplx q = u.u12 / (I * root);
      qre[i] = q.real();
      qim[i] = q.imag();
    }
  }

  PolynomialReport rep;
  rep.m_real = fit_power_coeffs(nodes, mre, d);
  rep.m_imag = fit_power_coeffs(nodes, mim, d);
  rep.q_real = fit_power_coeffs(nodes, qre, std::max(d - 1, 0));
  rep.q_imag = fit_power_coeffs(nodes, qim, std::max(d - 1, 0));
  rep.even_parity = (d % 2 == 0);

  double parity = 0.0;
  for (int i = 0; i <= d; ++i) {
    if ((i % 2) != (d % 2)) {
      parity = std::max(parity, std::abs(rep.m_real[static_cast<std::size_t>(i)]));
      parity = std::max(parity, std::abs(rep.m_imag[static_cast<std::size_t>(i)]));
    }
  }
  for (int i = 0; i < d; ++i) {
    if ((i % 2) == (d % 2)) {  // Q has opposite parity to M
      parity = std::max(parity, std::abs(rep.q_real[static_cast<std::size_t>(i)]));
      parity = std::max(parity, std::abs(rep.q_imag[static_cast<std::size_t>(i)]));
    }
  }
  rep.parity_residual = parity;

  double fit = 0.0, norm = 0.0;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const double a = nodes[i];
    const cplx mfit{eval_poly(rep.m_real, a), eval_poly(rep.m_imag, a)};
    const cplx qfit{eval_poly(rep.q_real, a), eval_poly(rep.q_imag, a)};
    fit = std::max(fit, std::abs(mfit - us[i].u11));
    norm = std::max(norm, std::abs(std::norm(mfit) +
                                   (1.0 - a * a) * std::norm(qfit) - 1.0));
  }
  rep.fit_residual = fit;
  rep.normalization_residual = norm;
  rep.ill_conditioned = fit > 1e-6;
  return rep;
}

}  // namespace qspaim
