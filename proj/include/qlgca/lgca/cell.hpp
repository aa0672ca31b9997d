#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace qlgca::lgca {

class LgcaError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Occupation bitmask; bit i is n_i.
using Cell = std::uint32_t;

enum class Model { kD1Q3, kFHP, kD1Q2 };

unsigned velocity_count(Model model);
std::string to_string(Model model);
Model parse_model(const std::string& name);

/// D1Q3 rest particle (n_1) counts once or twice.
enum class MassConvention { kBitCount, kRestWeighted };

/**
 * Conserved quantities in exact integer units. Momentum components are
 * stored as px = px_half / 2 and py = py_sqrt3_half * sqrt(3) / 2, which
 * covers the FHP lattice vectors c_i = (cos(pi i/3), sin(pi i/3)).
 */
struct QuantityRecord {
  std::int64_t mass = 0;
  std::int64_t px_half = 0;
  std::int64_t py_sqrt3_half = 0;

  double px() const { return static_cast<double>(px_half) / 2.0; }
  double py() const;

  QuantityRecord& operator+=(const QuantityRecord& o);
  bool operator==(const QuantityRecord&) const = default;
};

class BitSource;

/// 2 <-> 5, everything else fixed.
Cell d1q3_collide(Cell cell);

/// Rotates an FHP cell by `sixths` * 60 degrees: bit i moves to bit i + sixths.
Cell fhp_rotate(Cell cell, unsigned sixths);

enum class FhpClass { kNone, kB2, kB3, kB4 };
FhpClass fhp_class(Cell cell);

/**
 * Zero-momentum FHP collision. Every collisional cell draws one bit, so the
 * draw sequence depends only on the cells visited. B2/B4 rotate by +120
 * degrees on 0 and +240 degrees on 1; B3 always rotates by 180 degrees.
 */
Cell fhp_collide(Cell cell, BitSource& bits);

/// Units as in QuantityRecord. D1Q3 momentum is n_0 - n_2; D1Q2 bit 0 moves
/// right, bit 1 moves left.
QuantityRecord quantities(Cell cell, Model model,
                          MassConvention mass = MassConvention::kBitCount);

}  // namespace qlgca::lgca
