#pragma once

#include <vector>

#include "qlgca/pauli/rank.hpp"

namespace qlgca::pauli {

/// Invariant count l = 4^v - rank(M) for a collision unitary.
struct InvariantReport {
  unsigned v = 0;
  std::size_t rank = 0;
  std::size_t invariant_count = 0;
  /// Basis strings P with C^dagger P C = P (zero rows of M).
  std::vector<PauliString> fixed_basis_strings;
  bool exact = false;
  RankResult rank_detail;
};

InvariantReport count_invariants(const Matrix& c, unsigned v,
                                 const RankOptions& options = {});

InvariantReport invariants_of(const EvolutionMatrix& m,
                              const RankOptions& options = {});

}  // namespace qlgca::pauli
