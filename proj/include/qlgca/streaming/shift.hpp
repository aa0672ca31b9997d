#pragma once

#include <stdexcept>
#include <vector>

#include "qlgca/qsim/circuit.hpp"

namespace qlgca::streaming {

using qsim::Circuit;
using qsim::Control;
using qsim::Qubit;

class StreamingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Direction { kRight, kLeft };

/// x -> x + 1 mod 2^n as a ripple of multi-controlled X gates, highest bit
/// first; `space[0]` is the least significant bit.
void append_increment(Circuit& c, const std::vector<Qubit>& space,
                      const std::vector<Control>& controls = {});
/// x -> x - 1 mod 2^n.
void append_decrement(Circuit& c, const std::vector<Qubit>& space,
                      const std::vector<Control>& controls = {});

/**
 * Shift of the space register (qubits 0..n-1) controlled on the velocity
 * qubit n: right fires on |v> = |0>, left on |v> = |1>. The circuit spans
 * n + 2 qubits so the occupation qubit n + 1 is carried along.
 */
Circuit controlled_shift(Direction direction, unsigned n_space);

}  // namespace qlgca::streaming
