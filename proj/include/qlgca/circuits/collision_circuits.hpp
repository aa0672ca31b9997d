#pragma once

#include <vector>

#include "qlgca/qsim/circuit.hpp"

namespace qlgca::circuits {

using qsim::Circuit;
using qsim::Control;
using qsim::Qubit;

/// Which qubits hold the cell (cell[i] = n_i) and which are ancillas.
struct RegisterLayout {
  std::vector<Qubit> cell;
  std::vector<Qubit> ancillas;
};

struct CollisionCircuit {
  Circuit circuit;
  RegisterLayout layout;
};

/**
 * Cell n_0..n_2 on qubits 0..2, z_0 on 3, z_1 on 4. The discrimination
 * operators ZIZ and ZZI are read into z_0 and z_1 by Hadamard-sandwiched
 * controlled-Z gates; the cell is inverted when z_1 = 1 and z_0 = 0.
 */
CollisionCircuit build_d1q3_qpe_collision_circuit();

/// Appends the swap network moving bit cell[i] to cell[(i + degrees/60) mod 6].
void append_rotation(Circuit& circuit, const std::vector<Qubit>& cell, unsigned degrees,
                     const std::vector<Control>& controls = {});

/// Six-qubit rotation circuit; degrees in {60, 120, 180, 240}.
Circuit build_rotation_circuit(unsigned degrees);

/**
 * FHP zero-momentum collisions on cell qubits 0..5 with ancillas b = 6 and
 * a = 7. B3 is flagged into b and rotated by 180 degrees; the B2/B4 class is
 * flagged into b, rotated by 120 degrees, and a measured coin a = H b decides
 * a further 120 degrees. b is left dirty.
 */
CollisionCircuit build_fhp_b234_circuit();

}  // namespace qlgca::circuits
