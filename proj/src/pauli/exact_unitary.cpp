#include "qlgca/pauli/exact_unitary.hpp"

#include <cmath>

namespace qlgca::pauli {

ExactMatrix::ExactMatrix(std::size_t dim, std::int64_t denominator,
                         std::vector<GaussInt> numerators)
    : dim_(dim), denominator_(denominator), numerators_(std::move(numerators)) {
  if (denominator_ <= 0) throw PauliError("denominator must be positive");
  if (numerators_.size() != dim_ * dim_)
    throw PauliError("numerator count does not match dimension");
}

std::optional<ExactMatrix> ExactMatrix::from_matrix(const Matrix& m,
                                                    std::int64_t max_denominator,
                                                    double tol) {
  if (m.rows() != m.cols()) throw PauliError("matrix must be square");
  auto fits = [&](double x, std::int64_t d) {
    const double scaled = x * static_cast<double>(d);
    return std::abs(scaled - std::round(scaled)) <= tol * static_cast<double>(d);
  };
  for (std::int64_t d = 1; d <= max_denominator; ++d) {
    bool ok = true;
    for (Eigen::Index r = 0; r < m.rows() && ok; ++r)
      for (Eigen::Index c = 0; c < m.cols() && ok; ++c)
        ok = fits(m(r, c).real(), d) && fits(m(r, c).imag(), d);
    if (!ok) continue;
    const auto dim = static_cast<std::size_t>(m.rows());
    std::vector<GaussInt> nums(dim * dim);
    for (std::size_t r = 0; r < dim; ++r)
      for (std::size_t c = 0; c < dim; ++c) {
        const Complex z = m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
        nums[r * dim + c] = {std::llround(z.real() * static_cast<double>(d)),
                             std::llround(z.imag() * static_cast<double>(d))};
      }
    return ExactMatrix(dim, d, std::move(nums));
  }
  return std::nullopt;
}

Matrix ExactMatrix::to_matrix() const {
  const auto n = static_cast<Eigen::Index>(dim_);
  Matrix m(n, n);
  const auto d = static_cast<double>(denominator_);
  for (std::size_t r = 0; r < dim_; ++r)
    for (std::size_t c = 0; c < dim_; ++c) {
      const GaussInt& g = numerator(r, c);
      m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
          Complex(static_cast<double>(g.re) / d, static_cast<double>(g.im) / d);
    }
  return m;
}

}  // namespace qlgca::pauli
