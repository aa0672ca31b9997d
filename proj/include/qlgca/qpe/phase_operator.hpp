#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "qlgca/lgca/cell.hpp"
#include "qlgca/qsim/gate.hpp"

namespace qlgca::qpe {

using qsim::Complex;
using qsim::Matrix;

class QpeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// kPaper: U|s> = e^{-i q(s)}|s>. kDyadic: U|s> = e^{2 pi i q(s) / 2^n}|s>
/// for an n-ancilla register.
enum class PhaseConvention { kPaper, kDyadic };

PhaseConvention parse_convention(const std::string& name);
std::string to_string(PhaseConvention c);

enum class Quantity { kMass, kMomentumX, kMomentumY };

Quantity parse_quantity(const std::string& name);
std::string to_string(Quantity q);

/// Diagonal unitary encoding a per-state quantity q(s) in its eigenphases.
struct PhaseOperator {
  unsigned v = 0;
  std::vector<double> quantity;
  PhaseConvention convention = PhaseConvention::kPaper;

  /// Eigenphase as a fraction of a full turn, in [0, 1).
  double phase_fraction(std::size_t s, unsigned n_ancillas) const;
  Complex eigenvalue(std::size_t s, unsigned n_ancillas) const;
  Matrix matrix(unsigned n_ancillas) const;
};

/**
 * Quantity table for a model. D1Q3 mass defaults to the rest-weighted
 * convention, which gives phases 0..4 over the eight cell states.
 */
std::vector<double> quantity_values(Quantity quantity, lgca::Model model,
                                    lgca::MassConvention mass =
                                        lgca::MassConvention::kRestWeighted);

PhaseOperator phase_operator(Quantity quantity, lgca::Model model,
                             PhaseConvention convention,
                             lgca::MassConvention mass = lgca::MassConvention::kRestWeighted);

PhaseOperator custom_phase_operator(std::vector<double> quantity,
                                    PhaseConvention convention);

}  // namespace qlgca::qpe
