#pragma once

#include <iosfwd>
#include <variant>
#include <vector>

#include "qlgca/lgca/lattice.hpp"

namespace qlgca::lgca {

using AnyLattice = std::variant<Lattice1D, LatticeTri>;

/**
 * Text format: a header `model N [M]` followed by rows of space-separated
 * cell integers. 1D models have one row of N cells; fhp has M rows of N
 * cells. Blank lines and lines starting with '#' are skipped. Errors report
 * the line and column.
 */
AnyLattice read_lattice(std::istream& in);
void write_lattice(std::ostream& out, const Lattice1D& lattice);
void write_lattice(std::ostream& out, const LatticeTri& lattice);

/// Header `step,x,density`; one line per (step, site).
void write_density_csv(std::ostream& out,
                       const std::vector<std::vector<double>>& profiles);

/// Header `step,mass,px,py`.
void write_quantities_csv(std::ostream& out,
                          const std::vector<QuantityRecord>& series);

}  // namespace qlgca::lgca
