#include "qlgca/circuits/verification.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

#include "qlgca/qsim/simulator.hpp"

namespace qlgca::circuits {

Eigen::MatrixXd cell_transition_matrix(const CollisionCircuit& cc) {
  const auto& layout = cc.layout;
  const unsigned v = static_cast<unsigned>(layout.cell.size());
  if (v == 0 || v > 16) throw CircuitsError("layout needs between 1 and 16 cell qubits");
  for (Qubit q : layout.cell)
    if (q >= cc.circuit.n_qubits()) throw CircuitsError("cell qubit outside the circuit");
  for (Qubit q : layout.ancillas)
    if (q >= cc.circuit.n_qubits()) throw CircuitsError("ancilla qubit outside the circuit");

  const auto dim = static_cast<Eigen::Index>(std::size_t{1} << v);
  Eigen::MatrixXd p = Eigen::MatrixXd::Zero(dim, dim);
  for (Eigen::Index s = 0; s < dim; ++s) {
    std::uint64_t index = 0;
    for (unsigned i = 0; i < v; ++i)
      if ((s >> i) & 1) index |= std::uint64_t{1} << layout.cell[i];
    const auto branches =
        qsim::run_circuit(qsim::Statevector::basis(cc.circuit.n_qubits(), index), cc.circuit);
    for (const auto& branch : branches) {
      const auto dist = qsim::measure_distribution(branch.state, layout.cell);
      for (const auto& [out, prob] : dist.support())
        p(s, static_cast<Eigen::Index>(out)) += branch.probability * prob;
    }
  }
  return p;
}

VerificationReport verify_collision_circuit(const CollisionCircuit& circuit,
                                            const CollisionSpec& spec, double tol) {
  if (circuit.layout.cell.size() != spec.v)
    throw CircuitsError("circuit cell register has " +
                        std::to_string(circuit.layout.cell.size()) +
                        " qubits, spec expects " + std::to_string(spec.v));
  const Eigen::MatrixXd expected = spec.transition_matrix();
  VerificationReport report;
  report.probabilities = cell_transition_matrix(circuit);
  report.pass = true;
  for (Eigen::Index r = 0; r < expected.rows(); ++r) {
    const double tv = 0.5 * (report.probabilities.row(r) - expected.row(r)).cwiseAbs().sum();
    report.row_total_variation.push_back(tv);
    report.max_total_variation = std::max(report.max_total_variation, tv);
    if (tv > tol && report.pass) {
      report.pass = false;
      report.first_failing_row = static_cast<std::size_t>(r);
    }
  }
  return report;
}

void write_probability_csv(std::ostream& out, const Eigen::MatrixXd& p) {
  out << "input";
  for (Eigen::Index c = 0; c < p.cols(); ++c) out << ",p" << c;
  out << '\n';
  char buf[64];
  for (Eigen::Index r = 0; r < p.rows(); ++r) {
    out << r;
    for (Eigen::Index c = 0; c < p.cols(); ++c) {
      double x = p(r, c);
      if (std::abs(x) < 1e-15) x = 0.0;
      std::snprintf(buf, sizeof buf, "%.17g", x);
      out << ',' << buf;
    }
    out << '\n';
  }
}

}  // namespace qlgca::circuits
