#pragma once

#include <iosfwd>
#include <optional>

#include "qlgca/circuits/collision_circuits.hpp"

namespace qlgca::circuits {

/**
 * Line-oriented circuit text:
 *
 *   qubits 8
 *   cell 0 1 2 3 4 5
 *   ancilla 6 7
 *   X 5 | 4(1)
 *   SWAP 0 3 | 6(1)
 *   U 0 | 3(0) @ re:im re:im re:im re:im
 *   MEASURE 7
 *
 * Controls are written q(1) for filled and q(0) for open. Generic blocks list
 * their entries row-major after '@'. '#' starts a comment line.
 */
struct CircuitFile {
  Circuit circuit{0};
  std::optional<RegisterLayout> layout;
};

void write_circuit(std::ostream& out, const Circuit& circuit,
                   const RegisterLayout* layout = nullptr);
CircuitFile read_circuit(std::istream& in);

}  // namespace qlgca::circuits
