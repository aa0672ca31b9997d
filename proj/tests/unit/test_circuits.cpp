#include <gtest/gtest.h>

#include <sstream>

#include "qlgca/circuits/basis_decomposition.hpp"
#include "qlgca/circuits/circuit_io.hpp"
#include "qlgca/circuits/collision_circuits.hpp"
#include "qlgca/circuits/collision_spec.hpp"
#include "qlgca/circuits/collision_unitaries.hpp"
#include "qlgca/circuits/verification.hpp"
#include "qlgca/lgca/cell.hpp"
#include "qlgca/qsim/simulator.hpp"

using namespace qlgca;
using namespace qlgca::circuits;

TEST(CollisionSpec, TransitionMatrices) {
  const auto d = d1q3_spec().transition_matrix();
  EXPECT_EQ(d(5, 2), 1.0);
  EXPECT_EQ(d(2, 5), 1.0);
  EXPECT_EQ(d(7, 7), 1.0);
  const auto f = fhp_spec(parse_fhp_selection("all")).transition_matrix();
  EXPECT_EQ(f(42, 21), 1.0);
  EXPECT_DOUBLE_EQ(f(18, 9), 0.5);
  EXPECT_DOUBLE_EQ(f(36, 9), 0.5);
  EXPECT_DOUBLE_EQ(f(9, 9), 0.0);
  for (Eigen::Index c = 0; c < 64; ++c) EXPECT_DOUBLE_EQ(f.col(c).sum(), 1.0);
}

TEST(CollisionSpec, SelectionParsing) {
  EXPECT_EQ(to_string(parse_fhp_selection("b234")), "B2,3,4");
  EXPECT_EQ(to_string(parse_fhp_selection("B2,4")), "B2,4");
  EXPECT_EQ(to_string(parse_fhp_selection("B3")), "B3");
  EXPECT_THROW(parse_fhp_selection("B5"), CircuitsError);
}

TEST(CollisionSpec, ValidationRejectsOverlaps) {
  CollisionSpec s = CollisionSpec::identity(3);
  s.deterministic_pairs.push_back({2, 5});
  EXPECT_THROW(s.validate(), CircuitsError);
}

TEST(CollisionUnitaries, StochasticBlockIsOrthogonal) {
  const auto b = stochastic_block(6, {9, 18, 36});
  EXPECT_LT((b.adjoint() * b - qsim::Matrix::Identity(64, 64)).cwiseAbs().maxCoeff(), 1e-14);
  EXPECT_NEAR(b(9, 9).real(), -1.0 / 3.0, 1e-15);
  EXPECT_NEAR(b(18, 9).real(), 2.0 / 3.0, 1e-15);
}

TEST(RotationCircuits, MatchClassicalRotation) {
  for (unsigned deg : {60u, 120u, 180u, 240u}) {
    const auto c = build_rotation_circuit(deg);
    for (lgca::Cell s = 0; s < 64; ++s) {
      const auto out = qsim::run_unitary(qsim::Statevector::basis(6, s), c);
      EXPECT_NEAR(std::norm(out[lgca::fhp_rotate(s, deg / 60)]), 1.0, 1e-15) << deg << ' ' << s;
    }
  }
  EXPECT_THROW(build_rotation_circuit(90), CircuitsError);
}

TEST(FhpCircuit, ReproducesTransitionMatrix) {
  const auto circuit = build_fhp_b234_circuit();
  const auto report = verify_collision_circuit(circuit, fhp_spec(parse_fhp_selection("all")));
  EXPECT_TRUE(report.pass);
  EXPECT_LE(report.max_total_variation, 1e-10);
  const auto& p = report.probabilities;
  EXPECT_NEAR(p(9, 18), 0.5, 1e-10);
  EXPECT_NEAR(p(9, 36), 0.5, 1e-10);
  EXPECT_NEAR(p(27, 45), 0.5, 1e-10);
  EXPECT_NEAR(p(27, 54), 0.5, 1e-10);
  EXPECT_NEAR(p(21, 42), 1.0, 1e-10);
  EXPECT_NEAR(p(42, 21), 1.0, 1e-10);
  for (int s : {0, 1, 3, 7, 63}) EXPECT_NEAR(p(s, s), 1.0, 1e-10);
}

TEST(D1Q3Circuit, ExchangesTwoAndFive) {
  const auto circuit = build_d1q3_qpe_collision_circuit();
  const auto report = verify_collision_circuit(circuit, d1q3_spec());
  EXPECT_TRUE(report.pass);
  EXPECT_NEAR(report.probabilities(2, 5), 1.0, 1e-10);
  EXPECT_NEAR(report.probabilities(5, 2), 1.0, 1e-10);
}

TEST(Verification, WrongSpecFailsWithRow) {
  const auto report = verify_collision_circuit(build_d1q3_qpe_collision_circuit(), CollisionSpec::identity(3));
  EXPECT_FALSE(report.pass);
  ASSERT_TRUE(report.first_failing_row.has_value());
  EXPECT_EQ(*report.first_failing_row, 2u);
}

TEST(Decomposition, FhpCircuitLowersToSmallBasis) {
  const auto lowered = decompose_to_basis(build_fhp_b234_circuit().circuit);
  EXPECT_TRUE(lowered.report.equivalent);
  EXPECT_LT(lowered.report.elementary_gate_count, 2000u);
  EXPECT_LE(lowered.report.max_deviation, kDecompositionTolerance);
  EXPECT_EQ(lowered.report.measurement_count, 1u);
  for (const auto& e : lowered.circuit.elements())
    if (const auto* g = std::get_if<qsim::Gate>(&e)) {
      EXPECT_TRUE(is_elementary(*g));
    }
}

TEST(Decomposition, ZyzReconstructs) {
  qsim::Matrix u(2, 2);
  const double t = 0.7;
  u << std::cos(t), -std::sin(t) * qsim::Complex(0, 1), -std::sin(t) * qsim::Complex(0, 1), std::cos(t);
  u *= std::polar(1.0, 0.4);
  const auto a = zyz_decompose(u);
  auto rz = [](double x) {
    qsim::Matrix m = qsim::Matrix::Zero(2, 2);
    m(0, 0) = std::polar(1.0, -x / 2);
    m(1, 1) = std::polar(1.0, x / 2);
    return m;
  };
  auto ry = [](double x) {
    qsim::Matrix m(2, 2);
    m << std::cos(x / 2), -std::sin(x / 2), std::sin(x / 2), std::cos(x / 2);
    return m;
  };
  const qsim::Matrix r = std::polar(1.0, a.alpha) * rz(a.beta) * ry(a.gamma) * rz(a.delta);
  EXPECT_LT((r - u).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(CircuitIo, RoundTripPreservesBehaviour) {
  const auto built = build_fhp_b234_circuit();
  std::stringstream ss;
  write_circuit(ss, built.circuit, &built.layout);
  const auto file = read_circuit(ss);
  ASSERT_TRUE(file.layout.has_value());
  EXPECT_EQ(file.layout->cell, built.layout.cell);
  EXPECT_EQ(file.layout->ancillas, built.layout.ancillas);
  EXPECT_TRUE(verify_collision_circuit({file.circuit, *file.layout}, fhp_spec(parse_fhp_selection("all"))).pass);
}

TEST(CircuitIo, CorruptedGateFailsVerification) {
  const auto built = build_d1q3_qpe_collision_circuit();
  std::stringstream ss;
  write_circuit(ss, built.circuit, &built.layout);
  std::string text = ss.str();
  const auto pos = text.find("X 0 |");
  ASSERT_NE(pos, std::string::npos);
  text.replace(pos, 5, "X 1 |");
  std::istringstream in(text);
  const auto file = read_circuit(in);
  const auto report = verify_collision_circuit({file.circuit, *file.layout}, d1q3_spec());
  EXPECT_FALSE(report.pass);
  EXPECT_TRUE(report.first_failing_row.has_value());
}

TEST(CircuitIo, MalformedInputReportsLine) {
  auto message = [](const std::string& text) {
    std::istringstream in(text);
    try {
      read_circuit(in);
    } catch (const std::exception& e) {
      return std::string(e.what());
    }
    return std::string("no error");
  };
  EXPECT_EQ(message("qubits 2\nX 5\n").rfind("line 2", 0), 0u);
  EXPECT_EQ(message("qubits 2\nH 0 | 1(2)\n").rfind("line 2", 0), 0u);
  EXPECT_EQ(message("qubits two\n").rfind("line 1", 0), 0u);
}
