#pragma once

#include <vector>

#include "qlgca/circuits/collision_spec.hpp"
#include "qlgca/qsim/gate.hpp"

namespace qlgca::circuits {

using qsim::Matrix;

/// 8x8 permutation exchanging basis states 2 and 5.
Matrix d1q3_collision_matrix();

/// (1/4)(3 III + IZZ + XXX + XYY - YXY + YYX - ZIZ + ZZI)
Matrix d1q3_pauli_collision();

/// (1/3)[[-1,2,2],[2,-1,2],[2,2,-1]] on the listed states, identity elsewhere.
Matrix stochastic_block(unsigned v, const std::vector<Cell>& orbit);

/// B3 transposition and the unitary B2/B4 blocks; factors have disjoint
/// support and are multiplied B3 * B2 * B4.
Matrix fhp_unitary_collision(const FhpSelection& selection);

/// Unitary for a spec: transpositions for pairs, the 3-state block for orbits.
Matrix spec_unitary(const CollisionSpec& spec);

}  // namespace qlgca::circuits
