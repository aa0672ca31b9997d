#pragma once

#include <map>
#include <string>

#include "qlgca/qsim/circuit.hpp"

namespace qlgca::circuits {

/// Elementary means an uncontrolled single-qubit gate or a CNOT.
bool is_elementary(const qsim::Gate& gate);

struct DecompositionReport {
  std::size_t elementary_gate_count = 0;
  /// Keys: "x", "z", "h", "u" (other single-qubit), "cx".
  std::map<std::string, std::size_t> histogram;
  std::size_t measurement_count = 0;
  /// Clean work qubits appended after the original register.
  unsigned work_qubits = 0;
  /// Largest amplitude difference over all inputs with work qubits at |0>.
  double max_deviation = 0.0;
  bool equivalent = false;
};

struct Decomposition {
  qsim::Circuit circuit;
  DecompositionReport report;
};

inline constexpr double kDecompositionTolerance = 1e-9;

/**
 * Lowers every gate to {single-qubit, CNOT}. Open controls are conjugated by
 * X, k-controlled X uses a Toffoli ladder over k - 2 work qubits, controlled
 * SWAP is CNOT * Toffoli * CNOT, Toffoli is the 6-CNOT form and controlled
 * single-qubit gates use the ZYZ construction. Measurements are kept.
 * Throws if the lowered circuit is not equivalent to the source.
 */
Decomposition decompose_to_basis(const qsim::Circuit& circuit);

/// Matrix of a 2x2 unitary's ZYZ angles: U = e^{i alpha} Rz(beta) Ry(gamma) Rz(delta).
struct ZyzAngles {
  double alpha = 0.0;
  double beta = 0.0;
  double gamma = 0.0;
  double delta = 0.0;
};
ZyzAngles zyz_decompose(const qsim::Matrix& u);

}  // namespace qlgca::circuits
