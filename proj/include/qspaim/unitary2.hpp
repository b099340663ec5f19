#ifndef QSPAIM_UNITARY2_HPP
#define QSPAIM_UNITARY2_HPP

#include <complex>

namespace qspaim {

using cplx = std::complex<double>;

/// Complex 2x2 matrix. Holds gates, transition matrices and composed
/// evolutions; value type, no dynamic allocation.
struct Unitary2 {
  cplx u11{1.0, 0.0};
  cplx u12{0.0, 0.0};
  cplx u21{0.0, 0.0};
  cplx u22{1.0, 0.0};

  static Unitary2 identity() { return {}; }

  Unitary2 adjoint() const {
    return {std::conj(u11), std::conj(u21), std::conj(u12), std::conj(u22)};
  }
  Unitary2 transpose() const { return {u11, u21, u12, u22}; }
  cplx det() const { return u11 * u22 - u12 * u21; }
};

inline Unitary2 operator*(const Unitary2& a, const Unitary2& b) {
  return {a.u11 * b.u11 + a.u12 * b.u21, a.u11 * b.u12 + a.u12 * b.u22,
          a.u21 * b.u11 + a.u22 * b.u21, a.u21 * b.u12 + a.u22 * b.u22};
}

inline Unitary2 operator*(cplx s, const Unitary2& m) {
  return {s * m.u11, s * m.u12, s * m.u21, s * m.u22};
}

double frobenius_distance(const Unitary2& a, const Unitary2& b);

/// Frobenius distance after aligning b's global phase to a.
/// Two unitaries differing by a unit-modulus scalar compare as equal.
double phase_aligned_distance(const Unitary2& a, const Unitary2& b);

/// Max entrywise deviation of U U^dagger from the identity.
double unitarity_defect(const Unitary2& u);

}  // namespace qspaim

#endif
