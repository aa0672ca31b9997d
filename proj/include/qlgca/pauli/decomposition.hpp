#pragma once

#include <utility>
#include <vector>

#include "qlgca/pauli/pauli_string.hpp"

namespace qlgca::pauli {

/// Real coefficients over the Pauli basis in enumeration order.
struct ObservableDecomposition {
  unsigned v = 0;
  std::vector<double> coefficients;

  /// Non-zero terms (|c| > tol) in enumeration order.
  std::vector<std::pair<PauliString, double>> terms(double tol = 1e-12) const;
};

/// Hermiticity tolerance for inputs (max entry of |O - O^dagger|).
inline constexpr double kHermitianTolerance = 1e-10;

/// alpha_i = tr(P_i O) / 2^v via the sparse action of each P_i.
ObservableDecomposition decompose_hermitian(const Matrix& o, unsigned v);

/// tr(P O) / 2^v for a single string, O arbitrary (complex result).
Complex pauli_coefficient(const Matrix& o, const PauliString& p);

/// sum_i alpha_i P_i
Matrix reconstruct(const ObservableDecomposition& d);

/// Dense matrix of a real combination of strings given in text form.
Matrix pauli_sum(const std::vector<std::pair<double, std::string>>& terms);

bool is_hermitian(const Matrix& o, double tol = kHermitianTolerance);

}  // namespace qlgca::pauli
