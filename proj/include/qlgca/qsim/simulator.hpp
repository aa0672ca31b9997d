#pragma once

#include <cstdint>
#include <vector>

#include "qlgca/qsim/circuit.hpp"
#include "qlgca/qsim/sampling.hpp"
#include "qlgca/qsim/statevector.hpp"

namespace qlgca::qsim {

/// Applies `gate` in place. Throws on indices outside the state.
void apply_gate_inplace(Statevector& state, const Gate& gate);
Statevector apply_gate(Statevector state, const Gate& gate);

/// One path through the measurements of a circuit.
struct Branch {
  double probability = 1.0;
  Statevector state;
  /// One entry per Measurement element, in circuit order; bit j of an entry
  /// is the outcome of that measurement's qubits[j].
  std::vector<std::uint64_t> record;
};

enum class RunMode { kExactBranchTree, kSampled };

struct RunOptions {
  RunMode mode = RunMode::kExactBranchTree;
  std::uint64_t seed = 0;
};

/**
 * Runs `circuit` on `state`. In exact mode every measurement outcome with
 * non-negligible probability spawns a branch holding its probability and the
 * renormalized post-measurement state. In sampled mode a single branch is
 * drawn with the seeded generator.
 */
std::vector<Branch> run_circuit(const Statevector& state, const Circuit& circuit,
                                RunOptions options = {});

/// Applies only the gates of a measurement-free circuit.
Statevector run_unitary(Statevector state, const Circuit& circuit);

/// Product of the gate matrices in application order (column j = image of |j>).
Matrix unitary_of_circuit(const Circuit& circuit);

/**
 * Pushes a probability vector over basis states through a circuit made only
 * of (controlled) X and SWAP gates. No arithmetic is performed on the
 * probabilities, so dyadic inputs stay exact. Throws on any other element.
 */
std::vector<double> run_permutation(std::vector<double> distribution, const Circuit& circuit);

/// Marginal distribution of measuring `qubits` on `state`.
OutcomeDistribution measure_distribution(const Statevector& state,
                                         const std::vector<Qubit>& qubits);

/// Extracts bits qubits[0..k) of `index` into a k-bit outcome.
std::uint64_t gather_bits(std::uint64_t index, const std::vector<Qubit>& qubits);

}  // namespace qlgca::qsim
