#include "qlgca/circuits/collision_circuits.hpp"

#include <string>

#include "qlgca/circuits/collision_spec.hpp"

namespace qlgca::circuits {

namespace {

using qsim::Gate;
using qsim::Polarity;

Control filled(Qubit q) { return {q, Polarity::kFilled}; }
Control open(Qubit q) { return {q, Polarity::kOpen}; }

std::vector<std::pair<unsigned, unsigned>> rotation_swaps(unsigned degrees) {
  switch (degrees) {
    case 60: return {{5, 0}, {5, 1}, {5, 2}, {5, 3}, {5, 4}};
    case 120: return {{4, 0}, {4, 2}, {5, 1}, {5, 3}};
    case 180: return {{0, 3}, {1, 4}, {2, 5}};
    case 240: return {{4, 0}, {4, 2}, {5, 1}, {5, 3}, {4, 0}, {4, 2}, {5, 1}, {5, 3}};
    default:
      throw CircuitsError("rotation angle must be 60, 120, 180 or 240 degrees, got " +
                          std::to_string(degrees));
  }
}

}  // namespace

CollisionCircuit build_d1q3_qpe_collision_circuit() {
  constexpr Qubit n0 = 0, n1 = 1, n2 = 2, z0 = 3, z1 = 4;
  Circuit c(5);
  c.add(Gate::h(z0)).add(Gate::h(z1));
  c.add(Gate::z(n2, {filled(z0)})).add(Gate::z(n0, {filled(z0)}));
  c.add(Gate::z(n1, {filled(z1)})).add(Gate::z(n2, {filled(z1)}));
  c.add(Gate::h(z0)).add(Gate::h(z1));
  for (Qubit q : {n2, n1, n0}) c.add(Gate::x(q, {filled(z1), open(z0)}));
  return {std::move(c), {{n0, n1, n2}, {z0, z1}}};
}

void append_rotation(Circuit& circuit, const std::vector<Qubit>& cell, unsigned degrees,
                     const std::vector<Control>& controls) {
  if (cell.size() != 6) throw CircuitsError("rotation acts on a six-qubit cell");
  for (auto [a, b] : rotation_swaps(degrees))
    circuit.add(Gate::swap(cell[a], cell[b], controls));
}

Circuit build_rotation_circuit(unsigned degrees) {
  Circuit c(6);
  append_rotation(c, {0, 1, 2, 3, 4, 5}, degrees);
  return c;
}

CollisionCircuit build_fhp_b234_circuit() {
  const std::vector<Qubit> n{0, 1, 2, 3, 4, 5};
  constexpr Qubit b = 6, a = 7;
  Circuit c(8);

  // B3: all adjacent pairs differ.
  for (unsigned i = 5; i >= 1; --i) c.add(Gate::x(n[i], {filled(n[i - 1])}));
  c.add(Gate::x(b, {filled(n[5]), filled(n[4]), filled(n[3]), filled(n[2]), filled(n[1])}));
  for (unsigned i = 1; i <= 5; ++i) c.add(Gate::x(n[i], {filled(n[i - 1])}));
  append_rotation(c, n, 180, {filled(b)});

  // B2/B4: every opposite pair equal.
  for (unsigned i = 0; i < 3; ++i) c.add(Gate::x(n[i + 3], {filled(n[i])}));
  c.add(Gate::x(b, {open(n[3]), open(n[4]), open(n[5])}));
  for (unsigned i = 0; i < 3; ++i) c.add(Gate::x(n[i + 3], {filled(n[i])}));
  append_rotation(c, n, 120, {filled(b)});
  c.add(Gate::h(a, {filled(b)}));
  append_rotation(c, n, 120, {filled(a)});
  c.measure({a});

  return {std::move(c), {n, {b, a}}};
}

}  // namespace qlgca::circuits
