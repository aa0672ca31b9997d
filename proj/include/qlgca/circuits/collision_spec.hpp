#pragma once

#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "qlgca/lgca/cell.hpp"

namespace qlgca::circuits {

using lgca::Cell;

class CircuitsError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/**
 * A collision rule as data. Fixed states map to themselves, pairs swap, and
 * each stochastic orbit sends a member to each other member with equal
 * probability. Together they partition [0, 2^v).
 */
struct CollisionSpec {
  unsigned v = 0;
  std::vector<Cell> fixed_states;
  std::vector<std::pair<Cell, Cell>> deterministic_pairs;
  std::vector<std::vector<Cell>> stochastic_orbits;

  void validate() const;

  /// P(out | in) with row = input state, column = output state.
  Eigen::MatrixXd transition_matrix() const;

  static CollisionSpec identity(unsigned v);
};

enum class FhpCollision { kB2, kB3, kB4 };
using FhpSelection = std::set<FhpCollision>;

/// Accepts forms like "B3", "B2,4", "b234", "B2,3,4" or "all".
FhpSelection parse_fhp_selection(const std::string& text);
/// Canonical name, e.g. "B2,3,4".
std::string to_string(const FhpSelection& selection);

CollisionSpec d1q3_spec();
CollisionSpec fhp_spec(const FhpSelection& selection);

}  // namespace qlgca::circuits
