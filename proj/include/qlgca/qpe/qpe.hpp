#pragma once

#include <vector>

#include "qlgca/qpe/phase_operator.hpp"
#include "qlgca/qsim/circuit.hpp"
#include "qlgca/qsim/sampling.hpp"
#include "qlgca/qsim/statevector.hpp"

namespace qlgca::qpe {

inline constexpr unsigned kDefaultAncillas = 3;

/// Gate-level inverse Fourier transform; qubits[0] is the least significant.
void append_inverse_qft(qsim::Circuit& circuit, const std::vector<qsim::Qubit>& qubits);

/// Dense inverse Fourier transform, F^dagger(y, j) = e^{-2 pi i j y / N} / sqrt(N).
Matrix inverse_qft_matrix(unsigned n);

/**
 * Cell register on qubits 0..v-1, ancilla k on qubit v + k. Each ancilla is
 * put in |+>, controls U^{2^k} (phases multiplied directly, not repeated),
 * and the ancillas are inverse-Fourier transformed.
 */
qsim::Circuit build_qpe_circuit(const PhaseOperator& u, unsigned n_ancillas);

/// Exact ancilla distribution for cell basis state s.
qsim::OutcomeDistribution qpe_distribution(const PhaseOperator& u, std::size_t s,
                                           unsigned n_ancillas = kDefaultAncillas);

/// Exact ancilla distribution for an arbitrary cell state.
qsim::OutcomeDistribution qpe_distribution(const PhaseOperator& u,
                                           const qsim::Statevector& cell_state,
                                           unsigned n_ancillas = kDefaultAncillas);

/// P(y) = |2^{-n} sum_j e^{2 pi i j (phi - y / 2^n)}|^2
std::vector<double> qpe_closed_form(double phi, unsigned n_ancillas);

}  // namespace qlgca::qpe
