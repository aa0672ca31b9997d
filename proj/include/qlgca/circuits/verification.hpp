#pragma once

#include <iosfwd>
#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "qlgca/circuits/collision_circuits.hpp"
#include "qlgca/circuits/collision_spec.hpp"

namespace qlgca::circuits {

/// Allowed total variation per row between circuit and spec.
inline constexpr double kVerificationTolerance = 1e-10;

struct VerificationReport {
  bool pass = false;
  /// Row = input cell state, column = output cell state.
  Eigen::MatrixXd probabilities;
  std::vector<double> row_total_variation;
  std::optional<std::size_t> first_failing_row;
  double max_total_variation = 0.0;
};

/// Cell-marginal transition probabilities from exact branch enumeration with
/// ancillas starting in |0...0>.
Eigen::MatrixXd cell_transition_matrix(const CollisionCircuit& circuit);

VerificationReport verify_collision_circuit(const CollisionCircuit& circuit,
                                            const CollisionSpec& spec,
                                            double tol = kVerificationTolerance);

/// Square CSV with header `input,p0,p1,...`.
void write_probability_csv(std::ostream& out, const Eigen::MatrixXd& p);

}  // namespace qlgca::circuits
