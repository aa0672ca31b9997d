#include "qlgca/lgca/cell.hpp"

#include <bit>
#include <cmath>

#include "qlgca/lgca/bit_source.hpp"

namespace qlgca::lgca {

namespace {

constexpr std::int64_t kFhpXHalf[6] = {2, 1, -1, -2, -1, 1};
constexpr std::int64_t kFhpYSqrt3Half[6] = {0, 1, 1, 0, -1, -1};

void check_cell(Cell cell, Model model) {
  if (cell >> velocity_count(model))
    throw LgcaError("cell value " + std::to_string(cell) + " out of range for " +
                    to_string(model));
}

}  // namespace

unsigned velocity_count(Model model) {
  switch (model) {
    case Model::kD1Q3: return 3;
    case Model::kFHP: return 6;
    case Model::kD1Q2: return 2;
  }
  return 0;
}

std::string to_string(Model model) {
  switch (model) {
    case Model::kD1Q3: return "d1q3";
    case Model::kFHP: return "fhp";
    case Model::kD1Q2: return "d1q2";
  }
  return "?";
}

Model parse_model(const std::string& name) {
  if (name == "d1q3") return Model::kD1Q3;
  if (name == "fhp") return Model::kFHP;
  if (name == "d1q2") return Model::kD1Q2;
  throw LgcaError("unknown model '" + name + "'");
}

double QuantityRecord::py() const {
  return static_cast<double>(py_sqrt3_half) * std::sqrt(3.0) / 2.0;
}

QuantityRecord& QuantityRecord::operator+=(const QuantityRecord& o) {
  mass += o.mass;
  px_half += o.px_half;
  py_sqrt3_half += o.py_sqrt3_half;
  return *this;
}

Cell d1q3_collide(Cell cell) {
  check_cell(cell, Model::kD1Q3);
  if (cell == 0b010) return 0b101;
  if (cell == 0b101) return 0b010;
  return cell;
}

Cell fhp_rotate(Cell cell, unsigned sixths) {
  check_cell(cell, Model::kFHP);
  sixths %= 6;
  if (sixths == 0) return cell;
  return ((cell << sixths) | (cell >> (6 - sixths))) & 63U;
}

FhpClass fhp_class(Cell cell) {
  switch (cell) {
    case 9: case 18: case 36: return FhpClass::kB2;
    case 21: case 42: return FhpClass::kB3;
    case 27: case 45: case 54: return FhpClass::kB4;
    default: return FhpClass::kNone;
  }
}

Cell fhp_collide(Cell cell, BitSource& bits) {
  check_cell(cell, Model::kFHP);
  switch (fhp_class(cell)) {
    case FhpClass::kNone:
      return cell;
    case FhpClass::kB3:
      bits.next_bit();
      return fhp_rotate(cell, 3);
    case FhpClass::kB2:
    case FhpClass::kB4:
      return fhp_rotate(cell, bits.next_bit() ? 4 : 2);
  }
  return cell;
}

QuantityRecord quantities(Cell cell, Model model, MassConvention mass) {
  check_cell(cell, model);
  QuantityRecord q;
  q.mass = std::popcount(cell);
  switch (model) {
    case Model::kD1Q3:
      if (mass == MassConvention::kRestWeighted && (cell & 0b010)) q.mass += 1;
      q.px_half = 2 * (static_cast<std::int64_t>(cell & 1U) -
                       static_cast<std::int64_t>((cell >> 2) & 1U));
      break;
    case Model::kD1Q2:
      q.px_half = 2 * (static_cast<std::int64_t>(cell & 1U) -
                       static_cast<std::int64_t>((cell >> 1) & 1U));
      break;
    case Model::kFHP:
      for (unsigned i = 0; i < 6; ++i)
        if ((cell >> i) & 1U) {
          q.px_half += kFhpXHalf[i];
          q.py_sqrt3_half += kFhpYSqrt3Half[i];
        }
      break;
  }
  return q;
}

}  // namespace qlgca::lgca
