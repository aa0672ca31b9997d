#include "qlgca/qsim/circuit.hpp"

#include <algorithm>
#include <string>

namespace qlgca::qsim {

void Circuit::check_qubit(Qubit q) const {
  if (q >= n_qubits_)
    throw QsimError("qubit index " + std::to_string(q) +
                    " out of range for a " + std::to_string(n_qubits_) +
                    "-qubit circuit");
}

Circuit& Circuit::add(Gate gate) {
  for (Qubit t : gate.targets()) check_qubit(t);
  for (const Control& c : gate.controls()) check_qubit(c.qubit);
  elements_.emplace_back(std::move(gate));
  return *this;
}

Circuit& Circuit::measure(std::vector<Qubit> qubits) {
  if (qubits.empty()) throw QsimError("measurement needs at least one qubit");
  for (Qubit q : qubits) check_qubit(q);
  elements_.emplace_back(Measurement{std::move(qubits)});
  return *this;
}

Circuit& Circuit::append(const Circuit& other) {
  if (other.n_qubits_ > n_qubits_)
    throw QsimError("cannot append a wider circuit");
  for (const Element& e : other.elements_) elements_.push_back(e);
  return *this;
}

bool Circuit::has_measurement() const {
  return std::any_of(elements_.begin(), elements_.end(), [](const Element& e) {
    return std::holds_alternative<Measurement>(e);
  });
}

std::size_t Circuit::gate_count() const {
  return static_cast<std::size_t>(
      std::count_if(elements_.begin(), elements_.end(), [](const Element& e) {
        return std::holds_alternative<Gate>(e);
      }));
}

Circuit Circuit::inverse() const {
  if (has_measurement()) throw QsimError("cannot invert a measured circuit");
  Circuit out(n_qubits_);
  for (auto it = elements_.rbegin(); it != elements_.rend(); ++it)
    out.add(std::get<Gate>(*it).adjoint());
  return out;
}

Circuit Circuit::widened(unsigned n_qubits) const {
  if (n_qubits < n_qubits_) throw QsimError("cannot narrow a circuit");
  Circuit out(n_qubits);
  out.elements_ = elements_;
  return out;
}

bool Circuit::operator==(const Circuit& other) const {
  return n_qubits_ == other.n_qubits_ && elements_ == other.elements_;
}

}  // namespace qlgca::qsim
