#include <cmath>
#include <numbers>
#include <random>

#include <doctest.h>

#include "qspaim/qsp.hpp"

using namespace qspaim;

namespace {
constexpr double pi = std::numbers::pi;
constexpr cplx I{0.0, 1.0};

// Rotation-operator form of the QSP product:
// R_z(-2 phi_0) prod_k R_x(-theta) R_z(-2 phi_k).
Unitary2 qsp_rotation_form(const PhaseSequence& seq, double theta) {
  Unitary2 u = rotation_gate(Axis::Z, -2.0 * seq.phases[0]);
  for (std::size_t k = 1; k < seq.phases.size(); ++k)
    u = u * rotation_gate(Axis::X, -theta) *
        rotation_gate(Axis::Z, -2.0 * seq.phases[k]);
  return u;
}

PhaseSequence random_sequence(std::mt19937& rng, int d) {
  std::uniform_real_distribution<double> ang(-pi, pi);
  PhaseSequence s;
  for (int i = 0; i <= d; ++i) s.phases.push_back(ang(rng));
  return s;
}
}  // namespace

TEST_CASE("rotation gates at special angles") {
  const Unitary2 id = rotation_gate(Axis::X, 0.0);
  CHECK(frobenius_distance(id, Unitary2::identity()) < 1e-15);

  const Unitary2 xpi = rotation_gate(Axis::X, pi);
  CHECK(std::abs(xpi.u11) < 1e-15);
  CHECK(std::abs(xpi.u12 - (-I)) < 1e-15);
  CHECK(std::abs(xpi.u21 - (-I)) < 1e-15);
  CHECK(std::abs(xpi.u22) < 1e-15);

  const Unitary2 zpi = rotation_gate(Axis::Z, pi);
  CHECK(std::abs(zpi.u11 - (-I)) < 1e-15);
  CHECK(std::abs(zpi.u22 - I) < 1e-15);
  CHECK(std::abs(zpi.u12) < 1e-15);
}

TEST_CASE("signal and processing operators") {
  CHECK(frobenius_distance(qsp_operator(QspOperator::W, 1.0),
                           Unitary2::identity()) < 1e-15);

  const Unitary2 w0 = qsp_operator(QspOperator::W, 0.0);
  CHECK(std::abs(w0.u11) < 1e-15);
  CHECK(std::abs(w0.u12 - I) < 1e-15);
  CHECK(std::abs(w0.u21 - I) < 1e-15);

  const Unitary2 s = qsp_operator(QspOperator::S, pi / 2.0);
  CHECK(std::abs(s.u11 - I) < 1e-15);
  CHECK(std::abs(s.u22 - (-I)) < 1e-15);

  CHECK_THROWS_AS(qsp_operator(QspOperator::W, 1.5), DomainError);
}

TEST_CASE("operator identities against rotation gates") {
  for (double a : {-0.9, -0.3, 0.0, 0.4, 0.99}) {
    const double theta = 2.0 * std::acos(a);
    CHECK(frobenius_distance(qsp_operator(QspOperator::W, a),
                             rotation_gate(Axis::X, -theta)) < 1e-12);
  }
  for (double phi : {-1.2, 0.0, 0.7, 2.9}) {
    CHECK(frobenius_distance(qsp_operator(QspOperator::S, phi),
                             rotation_gate(Axis::Z, -2.0 * phi)) < 1e-12);
  }
}

TEST_CASE("signal point branch") {
  const SignalPoint p = SignalPoint::from_a(0.3);
  CHECK(p.theta == doctest::Approx(2.0 * std::acos(0.3)).epsilon(1e-14));
  CHECK(std::abs(std::cos(p.theta / 2.0) - p.a) < 1e-12);
  CHECK_THROWS_AS(SignalPoint::from_a(1.2), DomainError);
}

TEST_CASE("qsp product matrix elements") {
  PhaseSequence d1{{0.0, 0.0}};
  CHECK(std::abs(qsp_unitary(d1, 0.37).u11 - cplx{0.37, 0.0}) < 1e-14);

  PhaseSequence d2{{0.0, 0.0, 0.0}};
  CHECK(qsp_unitary(d2, 0.5).u11.real() == doctest::Approx(-0.5).epsilon(1e-13));

  PhaseSequence d3{{0.0, 0.0, 0.0, 0.0}};
  CHECK(qsp_unitary(d3, 0.5).u11.real() == doctest::Approx(-1.0).epsilon(1e-13));

  CHECK_THROWS_AS(qsp_unitary(d1, 1.01), DomainError);
}

TEST_CASE("all-zero sequences reproduce Chebyshev responses") {
  for (int d = 1; d <= 3; ++d) {
    const PhaseSequence seq = chebyshev_sequence(d);
    for (int i = 0; i < 201; ++i) {
      const double a = -1.0 + 2.0 * i / 200.0;
      CHECK(std::abs(qsp_unitary(seq, a).u11 - cplx{chebyshev_value(d, a), 0.0})
            < 1e-12);
    }
  }
}

TEST_CASE("chebyshev recurrence values") {
  CHECK(chebyshev_value(0, 0.3) == doctest::Approx(1.0));
  CHECK(chebyshev_value(2, 0.5) == doctest::Approx(-0.5).epsilon(1e-14));
  CHECK(chebyshev_value(3, 1.0) == doctest::Approx(1.0).epsilon(1e-14));
  for (int d = 0; d <= 8; ++d)
    for (double a : {-0.8, -0.1, 0.33, 0.97})
      CHECK(std::abs(chebyshev_value(d, a) - std::cos(d * std::acos(a)))
            < 1e-12);
}

TEST_CASE("reference sequences") {
  const PhaseSequence c2 = reference_sequence("chebyshev:2");
  REQUIRE(c2.phases.size() == 3);
  for (double p : c2.phases) CHECK(p == 0.0);

  const PhaseSequence bb1 = reference_sequence("bb1");
  REQUIRE(bb1.phases.size() == 6);
  CHECK(bb1.degree() == 5);
  const double eta = 0.5 * std::acos(-0.25);
  CHECK(eta == doctest::Approx(0.9117382909684877).epsilon(1e-14));
  CHECK(bb1.phases[0] == doctest::Approx(pi / 2.0));
  CHECK(bb1.phases[1] == doctest::Approx(-eta));
  CHECK(bb1.phases[2] == doctest::Approx(2.0 * eta));
  CHECK(bb1.phases[3] == 0.0);
  CHECK(bb1.phases[4] == doctest::Approx(-2.0 * eta));
  CHECK(bb1.phases[5] == doctest::Approx(eta));

  CHECK_THROWS_AS(reference_sequence("nope"), DomainError);
}

TEST_CASE("bb1 closed-form response polynomial") {
  CHECK(bb1_polynomial(0.0) == 0.0);
  CHECK(bb1_polynomial(1.0) == doctest::Approx(1.0).epsilon(1e-14));
  // 1/8 * 1/4 * (3/256 - 15/64 + 35/16 - 45/4 + 30), exact dyadic value
  CHECK(bb1_polynomial(0.5) == doctest::Approx(0.6473388671875).epsilon(1e-14));
}

TEST_CASE("bb1 closed form equals the squared matrix element") {
  // The closed form evaluates |<0|U_BB1|0>|^2, not the amplitude itself;
  // the amplitude-vs-polynomial comparison deviates at the 0.25 level.
  const PhaseSequence bb1 = bb1_sequence();
  double amp_dev = 0.0;
  for (int i = 0; i < 101; ++i) {
    const double a = -1.0 + 2.0 * i / 100.0;
    const double m2 = std::norm(qsp_unitary(bb1, a).u11);
    CHECK(std::abs(m2 - bb1_polynomial(a)) < 1e-12);
    amp_dev = std::max(amp_dev, std::abs(std::abs(qsp_unitary(bb1, a).u11) -
                                         std::abs(bb1_polynomial(a))));
  }
  CHECK(amp_dev > 0.1);  // documents the amplitude-level mismatch
}

TEST_CASE("product form equals rotation form for random sequences") {
  std::mt19937 rng(12345);
  std::uniform_int_distribution<int> deg(1, 8);
  std::uniform_real_distribution<double> th(0.0, 2.0 * pi);
  for (int trial = 0; trial < 100; ++trial) {
    const PhaseSequence seq = random_sequence(rng, deg(rng));
    const double theta = th(rng);
    const double a = std::cos(theta / 2.0);
    const Unitary2 u = qsp_unitary(seq, a);
    CHECK(phase_aligned_distance(u, qsp_rotation_form(seq, theta)) < 1e-12);
    CHECK(unitarity_defect(u) < 1e-12);
    CHECK(std::abs(u.u22 - std::conj(u.u11)) < 1e-12);
    CHECK(std::abs(u.u21 + std::conj(u.u12)) < 1e-12);
    CHECK(std::abs(std::norm(u.u11) + std::norm(u.u12) - 1.0) < 1e-12);
  }
}

TEST_CASE("polynomial extraction recovers Chebyshev coefficients") {
  const PolynomialReport r3 = extract_polynomial(chebyshev_sequence(3), 32);
  REQUIRE(r3.m_real.size() == 4);
  CHECK(r3.m_real[0] == doctest::Approx(0.0).epsilon(1e-10));
  CHECK(r3.m_real[1] == doctest::Approx(-3.0).epsilon(1e-10));
  CHECK(r3.m_real[2] == doctest::Approx(0.0).epsilon(1e-10));
  CHECK(r3.m_real[3] == doctest::Approx(4.0).epsilon(1e-10));
  CHECK_FALSE(r3.ill_conditioned);

  const PolynomialReport r1 = extract_polynomial(chebyshev_sequence(1), 8);
  REQUIRE(r1.m_real.size() == 2);
  CHECK(r1.m_real[0] == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(r1.m_real[1] == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("polynomial extraction invariants for bb1") {
  const PolynomialReport rep = extract_polynomial(bb1_sequence(), 64);
  CHECK(rep.parity_residual <= 1e-9);
  CHECK(rep.normalization_residual <= 1e-9);
  CHECK(rep.fit_residual <= 1e-9);
  CHECK_FALSE(rep.ill_conditioned);
  CHECK_FALSE(rep.even_parity);  // degree 5
  CHECK_THROWS_AS(extract_polynomial(bb1_sequence(), 4), DomainError);
}
