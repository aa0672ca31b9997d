#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "qlgca/lgca/lattice.hpp"
#include "qlgca/qsim/statevector.hpp"
#include "qlgca/streaming/shift.hpp"

namespace qlgca::streaming {

/// Space on qubits 0..n-1, velocity on n (|0> right, |1> left), occupation
/// on n + 1.
struct SublinearLayout {
  unsigned n_space = 0;
  Qubit velocity() const { return n_space; }
  Qubit occupation() const { return n_space + 1; }
  unsigned n_qubits() const { return n_space + 2; }
  std::size_t n_cells() const { return std::size_t{1} << n_space; }
};

/// log2 of the field size; throws unless it is a power of two in [2, 2^10].
unsigned space_qubits_for(const lgca::Lattice1D& field);

/// One multi-controlled X onto the occupation qubit per occupied (x, v).
Circuit build_d1q2_loading(const lgca::Lattice1D& field);

/// Hadamards on space and velocity, then the loading block.
Circuit build_d1q2_initialization(const lgca::Lattice1D& field);

/// Right shift on |v> = |0>, then left shift on |v> = |1>.
void append_streaming_step(Circuit& c, unsigned n_space);

Circuit build_d1q2_sublinear_circuit(const lgca::Lattice1D& field, unsigned steps);

/**
 * Basis-state distribution after loading and `steps` streaming steps. The
 * Hadamard layer gives the dyadic value 2^-(n+1) on every (x, v); the rest of
 * the circuit is a permutation, so every entry is exact.
 */
std::vector<double> exact_distribution(const lgca::Lattice1D& field, unsigned steps);

/// 2N * sum_v P(x, v, n = 1) for every x.
std::vector<double> exact_density(const std::vector<double>& distribution, unsigned n_space);
std::vector<double> exact_density(const qsim::Statevector& state, unsigned n_space);

/// 2N * (#shots with n = 1 at x) / shots. Outcome keys are full basis
/// indices over the n_space + 2 qubits.
std::vector<double> estimate_density(const std::map<std::uint64_t, std::uint64_t>& counts,
                                     unsigned n_space, std::uint64_t shots);

/// Standard deviation of the density estimator at each x.
std::vector<double> density_sigma(const std::vector<double>& distribution, unsigned n_space,
                                  std::uint64_t shots);

struct D1Q2Run {
  /// Index t = 0..steps. Exact distribution path.
  std::vector<std::vector<double>> quantum_density;
  /// Same densities from the floating-point statevector.
  std::vector<std::vector<double>> statevector_density;
  std::vector<std::vector<double>> classical_density;
  std::vector<std::vector<double>> sampled_density;
  std::vector<std::vector<double>> sampled_sigma;
};

/// Step-by-step run; sampling (when `shots` is set) uses seed + t at step t.
D1Q2Run run_d1q2(const lgca::Lattice1D& field, unsigned steps,
                 std::optional<std::uint64_t> shots = std::nullopt,
                 std::uint64_t seed = 0);

}  // namespace qlgca::streaming
