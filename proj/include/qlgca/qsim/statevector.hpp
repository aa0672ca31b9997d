#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "qlgca/qsim/gate.hpp"

namespace qlgca::qsim {

/// Dense amplitude vector over n qubits (length 2^n).
class Statevector {
 public:
  /// |0...0>
  explicit Statevector(unsigned n_qubits);
  /// Takes ownership of `amplitudes`; length must be a power of two.
  explicit Statevector(std::vector<Complex> amplitudes);

  static Statevector basis(unsigned n_qubits, std::uint64_t index);

  unsigned n_qubits() const { return n_qubits_; }
  std::size_t dimension() const { return amplitudes_.size(); }

  std::span<const Complex> amplitudes() const { return amplitudes_; }
  std::span<Complex> amplitudes() { return amplitudes_; }
  Complex operator[](std::size_t i) const { return amplitudes_[i]; }
  Complex& operator[](std::size_t i) { return amplitudes_[i]; }

  double norm_squared() const;
  void normalize();

  /// Probability of each basis state.
  std::vector<double> probabilities() const;

  Vector to_eigen() const;

 private:
  unsigned n_qubits_;
  std::vector<Complex> amplitudes_;
};

}  // namespace qlgca::qsim
