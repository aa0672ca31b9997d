#include "qlgca/qsim/statevector.hpp"

#include <bit>
#include <cmath>
#include <string>

namespace qlgca::qsim {

namespace {

constexpr unsigned kMaxQubits = 30;

}  // namespace

Statevector::Statevector(unsigned n_qubits) : n_qubits_(n_qubits) {
  if (n_qubits > kMaxQubits)
    throw QsimError("statevector limited to " + std::to_string(kMaxQubits) +
                    " qubits");
  amplitudes_.assign(std::size_t{1} << n_qubits, Complex{0.0, 0.0});
  amplitudes_[0] = 1.0;
}

Statevector::Statevector(std::vector<Complex> amplitudes)
    : amplitudes_(std::move(amplitudes)) {
  if (amplitudes_.empty() || !std::has_single_bit(amplitudes_.size()))
    throw QsimError("amplitude vector length must be a power of two");
  n_qubits_ = static_cast<unsigned>(std::countr_zero(amplitudes_.size()));
}

Statevector Statevector::basis(unsigned n_qubits, std::uint64_t index) {
  Statevector s(n_qubits);
  if (index >= s.dimension())
    throw QsimError("basis index " + std::to_string(index) + " out of range");
  s.amplitudes_[0] = 0.0;
  s.amplitudes_[index] = 1.0;
  return s;
}

double Statevector::norm_squared() const {
  double total = 0.0;
  for (const Complex& a : amplitudes_) total += std::norm(a);
  return total;
}

void Statevector::normalize() {
  const double n = std::sqrt(norm_squared());
  if (n == 0.0) throw QsimError("cannot normalize the zero vector");
  for (Complex& a : amplitudes_) a /= n;
}

std::vector<double> Statevector::probabilities() const {
  std::vector<double> p(amplitudes_.size());
  for (std::size_t i = 0; i < amplitudes_.size(); ++i)
    p[i] = std::norm(amplitudes_[i]);
  return p;
}

Vector Statevector::to_eigen() const {
  Vector v(static_cast<Eigen::Index>(amplitudes_.size()));
  for (std::size_t i = 0; i < amplitudes_.size(); ++i)
    v(static_cast<Eigen::Index>(i)) = amplitudes_[i];
  return v;
}

}  // namespace qlgca::qsim
