#include "qspaim/unitary2.hpp"

#include <algorithm>
#include <cmath>

namespace qspaim {

double frobenius_distance(const Unitary2& a, const Unitary2& b) {
  return std::sqrt(std::norm(a.u11 - b.u11) + std::norm(a.u12 - b.u12) +
                   std::norm(a.u21 - b.u21) + std::norm(a.u22 - b.u22));
}

double phase_aligned_distance(const Unitary2& a, const Unitary2& b) {
  // tr(a^dagger b) picks the optimal alignment phase.
  cplx tr = std::conj(a.u11) * b.u11 + std::conj(a.u12) * b.u12 +
            std::conj(a.u21) * b.u21 + std::conj(a.u22) * b.u22;
  cplx phase = std::abs(tr) > 1e-300 ? tr / std::abs(tr) : cplx{1.0, 0.0};
  return frobenius_distance(phase * a, b);
}

double unitarity_defect(const Unitary2& u) {
  Unitary2 g = u * u.adjoint();
  double d = std::abs(g.u11 - cplx{1.0, 0.0});
  d = std::max(d, std::abs(g.u12));
  d = std::max(d, std::abs(g.u21));
  d = std::max(d, std::abs(g.u22 - cplx{1.0, 0.0}));
  return d;
}

}  // namespace qspaim
