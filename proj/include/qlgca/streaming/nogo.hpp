#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace qlgca::streaming {

/// Aggregate unknowns; F* is tracked as its own symbol so that combinations
/// are compared literally.
enum class Symbol { A, B, C, D, E, F, Fconj };
inline constexpr std::size_t kSymbolCount = 7;

std::string to_string(Symbol s);

enum class EquationKind { kOrthogonality, kNormalization };

/// sum_s coeff[s] * s = rhs
struct Equation {
  std::array<int, kSymbolCount> coeff{};
  int rhs = 0;
  EquationKind kind = EquationKind::kOrthogonality;

  std::string lhs_text() const;
  std::string text() const;
};

struct ConstraintSystem {
  std::vector<Equation> equations;
  /// Aggregate definitions in terms of the cell amplitudes a..h.
  std::vector<std::string> provenance;
};

/// A+F=0, E+B=0, E+F=0, E+F*=0, E+C=0, D+F=0, A+B=1, A+C=1, B+D=1, C+D=1.
ConstraintSystem nogo_constraint_system();

/// Same system with every normalization right-hand side set to 0.
ConstraintSystem relaxed_system(const ConstraintSystem& system);

struct ContradictionChain {
  /// (multiplier, equation index) over orthogonality equations.
  std::vector<std::pair<int, std::size_t>> steps;
  std::size_t normalization_index = 0;
  std::string derived;     // e.g. "A+B = 0"
  std::string conflicts;   // e.g. "A+B = 1"
};

struct InfeasibilityCertificate {
  bool infeasible = false;
  std::optional<ContradictionChain> chain;
  /// Exact minimum of the squared residual (active-set solve).
  double min_residual = 0.0;
  /// Best value over the random restarts of coordinate descent.
  double restart_min_residual = 0.0;
  std::size_t restarts = 0;
  /// (A, B, C, D, Re E, Im E, Re F, Im F) at the exact minimum.
  std::array<double, 8> minimizer{};
};

/// Smallest {-1, 0, 1} combination of orthogonality equations whose
/// left-hand side equals a normalization left-hand side with a different
/// right-hand side.
std::optional<ContradictionChain> find_contradiction(const ConstraintSystem& system);

/**
 * Squared residual sum over all equations with A..D >= 0 and E, F complex;
 * each complex equation contributes |lhs - rhs|^2.
 */
double residual(const ConstraintSystem& system, const std::array<double, 8>& x);

InfeasibilityCertificate check_infeasible(const ConstraintSystem& system,
                                          std::size_t restarts = 1000,
                                          std::uint64_t seed = 1);

/// Residuals at or below this count as a solution.
inline constexpr double kFeasibleResidual = 1e-12;

}  // namespace qlgca::streaming
