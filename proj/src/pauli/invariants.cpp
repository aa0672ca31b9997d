#include "qlgca/pauli/invariants.hpp"

namespace qlgca::pauli {

InvariantReport invariants_of(const EvolutionMatrix& m, const RankOptions& options) {
  InvariantReport report;
  report.v = m.v;
  report.exact = m.exact;
  report.rank_detail = evolution_rank(m, options);
  report.rank = report.rank_detail.rank;
  report.invariant_count = m.dimension() - report.rank;
  for (std::size_t i = 0; i < m.dimension(); ++i)
    if (m.row_is_zero(i)) report.fixed_basis_strings.push_back(PauliString::from_index(i, m.v));
  return report;
}

InvariantReport count_invariants(const Matrix& c, unsigned v,
                                 const RankOptions& options) {
  return invariants_of(evolution_matrix(c, v), options);
}

}  // namespace qlgca::pauli
