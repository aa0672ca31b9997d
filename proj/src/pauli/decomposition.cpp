#include "qlgca/pauli/decomposition.hpp"

#include <bit>
#include <cmath>

namespace qlgca::pauli {

std::vector<std::pair<PauliString, double>> ObservableDecomposition::terms(
    double tol) const {
  std::vector<std::pair<PauliString, double>> out;
  for (std::size_t i = 0; i < coefficients.size(); ++i)
    if (std::abs(coefficients[i]) > tol)
      out.emplace_back(PauliString::from_index(i, v), coefficients[i]);
  return out;
}

bool is_hermitian(const Matrix& o, double tol) {
  if (o.rows() != o.cols()) return false;
  return (o - o.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

Complex pauli_coefficient(const Matrix& o, const PauliString& p) {
  const auto dim = static_cast<std::uint64_t>(o.rows());
  if (dim != (std::uint64_t{1} << p.size()))
    throw PauliError("matrix dimension does not match Pauli string length");
  Complex acc{0.0, 0.0};
  for (std::uint64_t k = 0; k < dim; ++k) {
    auto [phase, image] = p.apply(k);
    // P[image, k] = phase, so tr(P O) = sum_k P[image,k] O[k,image].
    acc += phase * o(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(image));
  }
  return acc / static_cast<double>(dim);
}

ObservableDecomposition decompose_hermitian(const Matrix& o, unsigned v) {
  const auto dim = static_cast<Eigen::Index>(std::uint64_t{1} << v);
  if (o.rows() != dim || o.cols() != dim)
    throw PauliError("operator is not 2^v dimensional");
  if (!is_hermitian(o)) throw PauliError("operator is not Hermitian");
  ObservableDecomposition d{v, {}};
  const std::uint64_t n = std::uint64_t{1} << (2 * v);
  d.coefficients.resize(n);
  for (std::uint64_t i = 0; i < n; ++i)
    d.coefficients[i] = pauli_coefficient(o, PauliString::from_index(i, v)).real();
  return d;
}

Matrix reconstruct(const ObservableDecomposition& d) {
  const auto dim = static_cast<Eigen::Index>(std::uint64_t{1} << d.v);
  Matrix m = Matrix::Zero(dim, dim);
  for (std::size_t i = 0; i < d.coefficients.size(); ++i) {
    if (d.coefficients[i] == 0.0) continue;
    const PauliString p = PauliString::from_index(i, d.v);
    for (Eigen::Index k = 0; k < dim; ++k) {
      auto [phase, image] = p.apply(static_cast<std::uint64_t>(k));
      m(static_cast<Eigen::Index>(image), k) += d.coefficients[i] * phase;
    }
  }
  return m;
}

Matrix pauli_sum(const std::vector<std::pair<double, std::string>>& terms) {
  if (terms.empty()) throw PauliError("empty Pauli sum");
  Matrix m;
  for (const auto& [c, text] : terms) {
    const Matrix p = pauli_matrix(PauliString::parse(text));
    if (m.size() == 0)
      m = c * p;
    else if (m.rows() != p.rows())
      throw PauliError("Pauli sum mixes string lengths");
    else
      m += c * p;
  }
  return m;
}

}  // namespace qlgca::pauli
