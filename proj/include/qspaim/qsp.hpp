#ifndef QSPAIM_QSP_HPP
#define QSPAIM_QSP_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "qspaim/unitary2.hpp"

namespace qspaim {

enum class Axis { X, Z };
enum class QspOperator { W, S };

/// Ordered QSP phases (phi_0 ... phi_d); degree d = size() - 1.
struct PhaseSequence {
  std::vector<double> phases;
  int degree() const { return static_cast<int>(phases.size()) - 1; }
};

/// A point of the signal parameter: a = cos(theta/2), theta = 2 acos(a).
struct SignalPoint {
  double theta;
  double a;
  static SignalPoint from_theta(double theta);
  static SignalPoint from_a(double a);
};

struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

/// R_x(alpha) or R_z(beta): exp(-i angle/2 * Pauli).
Unitary2 rotation_gate(Axis axis, double angle);

/// W(a) (signal rotation) or S(phi) (signal processing).
/// W(a) = R_x(-theta(a)), S(phi) = R_z(-2 phi).
Unitary2 qsp_operator(QspOperator kind, double arg);

/// Full QSP product S(phi_0) W(a) S(phi_1) ... W(a) S(phi_d).
Unitary2 qsp_unitary(const PhaseSequence& seq, double a);

/// All-zero sequence of degree d (Chebyshev T_d response).
PhaseSequence chebyshev_sequence(int d);

/// BB1 composite-pulse phases (pi/2, -eta, 2eta, 0, -2eta, eta),
/// eta = acos(-1/4)/2.
PhaseSequence bb1_sequence();

/// Lookup by name: "chebyshev:<d>" or "bb1". Throws on unknown names.
PhaseSequence reference_sequence(const std::string& name);

/// T_d(a) by the two-term recurrence.
double chebyshev_value(int d, double a);

/// The closed-form BB1 response polynomial
/// a^2 [3a^8 - 15a^6 + 35a^4 - 45a^2 + 30] / 8.
/// Note: this evaluates to |<0|U_BB1|0>|^2, not the amplitude itself;
/// see PolynomialReport tests for the numeric comparison.
double bb1_polynomial(double a);

/// Power-basis coefficients of the fitted upper row of the QSP unitary.
struct PolynomialReport {
  std::vector<double> m_real;  ///< Re M(a) coefficients, degree <= d
  std::vector<double> m_imag;  ///< Im M(a) coefficients
  std::vector<double> q_real;  ///< Re Q(a) coefficients, degree <= d-1
  std::vector<double> q_imag;  ///< Im Q(a) coefficients
  bool even_parity;            ///< parity of M (matches parity of d)
  double parity_residual;      ///< max wrong-parity coefficient magnitude
  double normalization_residual;  ///< max |M|^2 + (1-a^2)|Q|^2 - 1 on grid
  double fit_residual;            ///< max fit error on the node grid
  bool ill_conditioned;           ///< fit_residual > 1e-6
};

/// Least-squares fit of u11 and u12/(i sqrt(1-a^2)) at gridSize Chebyshev
/// nodes. Requires gridSize >= 2 (d + 1).
PolynomialReport extract_polynomial(const PhaseSequence& seq, int grid_size);

}  // namespace qspaim

#endif
