#pragma once

#include <cstddef>
#include <variant>
#include <vector>

#include "qlgca/qsim/gate.hpp"

namespace qlgca::qsim {

/// Computational-basis measurement of `qubits`; outcome bit j is qubits[j].
struct Measurement {
  std::vector<Qubit> qubits;

  bool operator==(const Measurement&) const = default;
};

using Element = std::variant<Gate, Measurement>;

class Circuit {
 public:
  explicit Circuit(unsigned n_qubits) : n_qubits_(n_qubits) {}

  unsigned n_qubits() const { return n_qubits_; }
  const std::vector<Element>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  bool empty() const { return elements_.empty(); }

  Circuit& add(Gate gate);
  Circuit& measure(std::vector<Qubit> qubits);
  /// Appends `other`, which must not be wider than this circuit.
  Circuit& append(const Circuit& other);

  bool has_measurement() const;
  std::size_t gate_count() const;

  /// Gates in reverse order, each replaced by its adjoint. Measurement-free only.
  Circuit inverse() const;

  /// Same circuit on a register of `n_qubits` (>= current) qubits.
  Circuit widened(unsigned n_qubits) const;

  bool operator==(const Circuit& other) const;

 private:
  void check_qubit(Qubit q) const;

  unsigned n_qubits_;
  std::vector<Element> elements_;
};

}  // namespace qlgca::qsim
