#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "qlgca/pauli/pauli_string.hpp"

namespace qlgca::pauli {

/// Gaussian integer a + bi.
struct GaussInt {
  std::int64_t re = 0;
  std::int64_t im = 0;

  GaussInt& operator+=(const GaussInt& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  friend GaussInt operator+(const GaussInt& a, const GaussInt& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend GaussInt operator-(const GaussInt& a, const GaussInt& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend GaussInt operator*(const GaussInt& a, const GaussInt& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend GaussInt conj(const GaussInt& a) { return {a.re, -a.im}; }
  bool is_zero() const { return re == 0 && im == 0; }
  bool operator==(const GaussInt&) const = default;
};

/// Multiplies by i^quarter (quarter taken mod 4).
inline GaussInt times_i_pow(GaussInt a, unsigned quarter) {
  switch (quarter & 3U) {
    case 0: return a;
    case 1: return {-a.im, a.re};
    case 2: return {-a.re, -a.im};
    default: return {a.im, -a.re};
  }
}

inline Complex times_i_pow(Complex a, unsigned quarter) {
  switch (quarter & 3U) {
    case 0: return a;
    case 1: return {-a.imag(), a.real()};
    case 2: return -a;
    default: return {a.imag(), -a.real()};
  }
}

/**
 * Square matrix whose entries are Gaussian rationals sharing one denominator:
 * value(r, c) = numerator(r, c) / denominator.
 */
class ExactMatrix {
 public:
  ExactMatrix(std::size_t dim, std::int64_t denominator,
              std::vector<GaussInt> numerators);

  /// Recovers an exact form when every entry component is k/d for a common
  /// d <= max_denominator within `tol`; nullopt otherwise.
  static std::optional<ExactMatrix> from_matrix(const Matrix& m,
                                                std::int64_t max_denominator = 512,
                                                double tol = 1e-9);

  std::size_t dim() const { return dim_; }
  std::int64_t denominator() const { return denominator_; }
  const GaussInt& numerator(std::size_t r, std::size_t c) const {
    return numerators_[r * dim_ + c];
  }
  Matrix to_matrix() const;

 private:
  std::size_t dim_;
  std::int64_t denominator_;
  std::vector<GaussInt> numerators_;  // row-major
};

}  // namespace qlgca::pauli
