#include "qlgca/circuits/collision_unitaries.hpp"

#include "qlgca/pauli/decomposition.hpp"

namespace qlgca::circuits {

namespace {

Matrix transposition(unsigned v, Cell a, Cell b) {
  const auto dim = static_cast<Eigen::Index>(std::size_t{1} << v);
  Matrix m = Matrix::Identity(dim, dim);
  m(a, a) = 0.0;
  m(b, b) = 0.0;
  m(a, b) = 1.0;
  m(b, a) = 1.0;
  return m;
}

}  // namespace

Matrix d1q3_collision_matrix() { return transposition(3, 2, 5); }

Matrix d1q3_pauli_collision() {
  return pauli::pauli_sum({{0.75, "III"},
                           {0.25, "IZZ"},
                           {0.25, "XXX"},
                           {0.25, "XYY"},
                           {-0.25, "YXY"},
                           {0.25, "YYX"},
                           {-0.25, "ZIZ"},
                           {0.25, "ZZI"}});
}

Matrix stochastic_block(unsigned v, const std::vector<Cell>& orbit) {
  if (orbit.size() != 3) throw CircuitsError("stochastic block needs a 3-state orbit");
  const auto dim = static_cast<Eigen::Index>(std::size_t{1} << v);
  Matrix m = Matrix::Identity(dim, dim);
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = 0; c < 3; ++c)
      m(orbit[r], orbit[c]) = (r == c ? -1.0 : 2.0) / 3.0;
  return m;
}

Matrix spec_unitary(const CollisionSpec& spec) {
  spec.validate();
  const auto dim = static_cast<Eigen::Index>(std::size_t{1} << spec.v);
  Matrix m = Matrix::Identity(dim, dim);
  for (auto [a, b] : spec.deterministic_pairs) m = transposition(spec.v, a, b) * m;
  for (const auto& orbit : spec.stochastic_orbits) m = stochastic_block(spec.v, orbit) * m;
  return m;
}

Matrix fhp_unitary_collision(const FhpSelection& selection) {
  if (selection.empty()) throw CircuitsError("collision selection must be non-empty");
  Matrix m = Matrix::Identity(64, 64);
  if (selection.contains(FhpCollision::kB3)) m = m * transposition(6, 21, 42);
  if (selection.contains(FhpCollision::kB2)) m = m * stochastic_block(6, {9, 18, 36});
  if (selection.contains(FhpCollision::kB4)) m = m * stochastic_block(6, {27, 45, 54});
  return m;
}

}  // namespace qlgca::circuits
