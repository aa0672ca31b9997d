#pragma once

#include <iosfwd>
#include <utility>
#include <vector>

#include "qlgca/qpe/qpe.hpp"

namespace qlgca::qpe {

/// rows[s][y] = probability of ancilla outcome y for cell basis state s.
struct SpectrumReport {
  unsigned v = 0;
  unsigned n_ancillas = 0;
  PhaseConvention convention = PhaseConvention::kPaper;
  std::vector<std::vector<double>> rows;
};

/// Rows are considered identical below this total variation.
inline constexpr double kRowTolerance = 1e-12;

SpectrumReport spectrum_report(const PhaseOperator& u,
                               unsigned n_ancillas = kDefaultAncillas);

double row_distance(const SpectrumReport& report, std::size_t s1, std::size_t s2);

struct EquivalenceCheck {
  bool consistent = false;
  /// Equal quantity but different rows.
  std::vector<std::pair<std::size_t, std::size_t>> split_pairs;
  /// Different quantity but identical rows (phase wrap-around).
  std::vector<std::pair<std::size_t, std::size_t>> aliased_pairs;
  /// Different quantity, same modal outcome; only counted against the
  /// result when every quantity fits the dyadic register exactly.
  std::vector<std::pair<std::size_t, std::size_t>> modal_collisions;
  std::size_t distinct_modal_outcomes = 0;
  bool separation_required = false;
};

/**
 * Rows must agree when quantities agree. With the dyadic convention and
 * integer quantities in [0, 2^n), modal outcomes must also differ when the
 * quantities differ.
 */
EquivalenceCheck equal_quantity_equivalence_check(const SpectrumReport& report,
                                                  const std::vector<double>& quantity);

/// Header `state,y0,...`; one row per cell state.
void write_spectrum_csv(std::ostream& out, const SpectrumReport& report);

/**
 * Average of the rows for `states`, grouped by quantity value (separate runs,
 * not a superposed input). Header `quantity,y0,...`.
 */
void write_histogram_csv(std::ostream& out, const SpectrumReport& report,
                         const std::vector<double>& quantity,
                         const std::vector<std::size_t>& states);

}  // namespace qlgca::qpe
