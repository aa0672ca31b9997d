#pragma once

#include <cstdint>
#include <iosfwd>
#include <utility>
#include <vector>

#include <boost/rational.hpp>

#include "qlgca/pauli/decomposition.hpp"
#include "qlgca/pauli/exact_unitary.hpp"

namespace qlgca::pauli {

using Rational = boost::rational<std::int64_t>;

template <typename T>
using SparseRow = std::vector<std::pair<std::uint32_t, T>>;

/**
 * M with M(i, j) = beta(i, j) - delta(i, j), where C^dagger P_i C =
 * sum_j beta(i, j) P_j. In exact mode every entry is numerator / denominator
 * with one shared denominator; otherwise only the floating rows are filled.
 */
struct EvolutionMatrix {
  unsigned v = 0;
  bool exact = false;
  std::int64_t denominator = 1;
  std::vector<SparseRow<std::int64_t>> numerators;
  std::vector<SparseRow<double>> values;

  std::size_t dimension() const { return values.size(); }
  double entry(std::size_t i, std::size_t j) const;
  /// Throws if the matrix is not exact.
  Rational rational_entry(std::size_t i, std::size_t j) const;
  bool row_is_zero(std::size_t i) const { return values[i].empty(); }
};

inline constexpr double kUnitaryTolerance = 1e-10;

/// Entries below this are treated as zero in the floating representation.
inline constexpr double kFloatingZero = 1e-12;

EvolutionMatrix evolution_matrix(const Matrix& c, unsigned v);

/// One table row: P_i and the exact expansion of C^dagger P_i C.
struct EvolutionRow {
  PauliString input;
  std::vector<std::pair<PauliString, Rational>> terms;
};

/// Requires a collision with exactly representable entries.
std::vector<EvolutionRow> evolution_table(const Matrix& c, unsigned v);

/// Columns: input_string, output_term, coefficient_numerator,
/// coefficient_denominator; one line per non-zero term.
void write_evolution_table_csv(std::ostream& out,
                               const std::vector<EvolutionRow>& table);

/// C^dagger O C
Matrix evolve_observable(const Matrix& c, const Matrix& o);

struct CommutationResult {
  bool commutes = false;
  double residual = 0.0;
};

inline constexpr double kCommutatorTolerance = 1e-10;

/// Max entry of |C O - O C|.
CommutationResult commutes(const Matrix& c, const Matrix& o);

double unitarity_defect(const Matrix& c);

}  // namespace qlgca::pauli
