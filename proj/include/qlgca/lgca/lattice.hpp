#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "qlgca/lgca/bit_source.hpp"
#include "qlgca/lgca/cell.hpp"

namespace qlgca::lgca {

/// Periodic chain of cells (D1Q3 or D1Q2).
struct Lattice1D {
  Model model = Model::kD1Q3;
  std::vector<Cell> cells;

  bool operator==(const Lattice1D&) const = default;
};

/**
 * Periodic triangular FHP grid stored row by row; odd rows sit half a cell
 * to the right of even rows. Cell (i, j) is column i of row j.
 */
struct LatticeTri {
  std::size_t width = 0;
  std::size_t height = 0;
  std::vector<Cell> cells;

  LatticeTri() = default;
  LatticeTri(std::size_t width, std::size_t height);

  Cell& at(std::size_t i, std::size_t j) { return cells[j * width + i]; }
  Cell at(std::size_t i, std::size_t j) const { return cells[j * width + i]; }

  bool operator==(const LatticeTri&) const = default;
};

void validate(const Lattice1D& lattice);
void validate(const LatticeTri& lattice);

/// Site reached from (i, j) by one step along c_dir.
std::pair<std::size_t, std::size_t> fhp_neighbor(const LatticeTri& lattice,
                                                 std::size_t i, std::size_t j,
                                                 unsigned dir);

Lattice1D d1q3_collide(const Lattice1D& lattice);
/// n_0 moves right, n_2 moves left, n_1 stays.
Lattice1D d1q3_stream(const Lattice1D& lattice);
Lattice1D d1q3_step(const Lattice1D& lattice);

/// Visits cells row-major (j outer, i inner) so bit consumption is fixed.
LatticeTri fhp_collide(const LatticeTri& lattice, BitSource& bits);
LatticeTri fhp_stream(const LatticeTri& lattice);
LatticeTri fhp_step(const LatticeTri& lattice, BitSource& bits);

/// Bit 0 moves right, bit 1 moves left.
Lattice1D d1q2_stream(const Lattice1D& lattice);

QuantityRecord totals(const Lattice1D& lattice,
                      MassConvention mass = MassConvention::kBitCount);
QuantityRecord totals(const LatticeTri& lattice);

/// Per-site mass averaged over [x - window, x + window] with periodic wrap.
std::vector<double> density_profile(const Lattice1D& lattice, std::size_t window,
                                    MassConvention mass = MassConvention::kBitCount);

}  // namespace qlgca::lgca
