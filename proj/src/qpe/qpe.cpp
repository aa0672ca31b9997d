#include "qlgca/qpe/qpe.hpp"

#include <cmath>

#include "qlgca/qsim/simulator.hpp"

namespace qlgca::qpe {

namespace {

using qsim::Gate;
using qsim::Polarity;
using qsim::Qubit;

Matrix phase_gate(double theta) {
  Matrix m = Matrix::Identity(2, 2);
  m(1, 1) = std::polar(1.0, theta);
  return m;
}

void check_ancillas(unsigned n) {
  if (n == 0 || n > 12) throw QpeError("ancilla count must be in [1, 12]");
}

}  // namespace

void append_inverse_qft(qsim::Circuit& c, const std::vector<Qubit>& q) {
  const std::size_t n = q.size();
  for (std::size_t i = 0; i < n / 2; ++i) c.add(Gate::swap(q[i], q[n - 1 - i]));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      const double theta = -2.0 * M_PI / std::ldexp(1.0, static_cast<int>(i - j + 1));
      c.add(Gate::unitary({q[i]}, phase_gate(theta), {{q[j], Polarity::kFilled}}));
    }
    c.add(Gate::h(q[i]));
  }
}

Matrix inverse_qft_matrix(unsigned n) {
  const auto dim = static_cast<Eigen::Index>(std::size_t{1} << n);
  Matrix m(dim, dim);
  const double norm = 1.0 / std::sqrt(static_cast<double>(dim));
  for (Eigen::Index y = 0; y < dim; ++y)
    for (Eigen::Index j = 0; j < dim; ++j)
      m(y, j) = std::polar(norm, -2.0 * M_PI * static_cast<double>((j * y) % dim) /
                                     static_cast<double>(dim));
  return m;
}

qsim::Circuit build_qpe_circuit(const PhaseOperator& u, unsigned n_ancillas) {
  check_ancillas(n_ancillas);
  const unsigned v = u.v;
  if (u.quantity.size() != (std::size_t{1} << v))
    throw QpeError("phase operator table does not match its qubit count");
  qsim::Circuit c(v + n_ancillas);
  std::vector<Qubit> cell(v);
  std::vector<Qubit> anc(n_ancillas);
  for (unsigned i = 0; i < v; ++i) cell[i] = i;
  for (unsigned k = 0; k < n_ancillas; ++k) anc[k] = v + k;

  for (Qubit a : anc) c.add(Gate::h(a));
  const auto dim = static_cast<Eigen::Index>(u.quantity.size());
  for (unsigned k = 0; k < n_ancillas; ++k) {
    Matrix power = Matrix::Zero(dim, dim);
    const double scale = std::ldexp(1.0, static_cast<int>(k));
    for (Eigen::Index s = 0; s < dim; ++s) {
      double f = u.phase_fraction(static_cast<std::size_t>(s), n_ancillas) * scale;
      f -= std::floor(f);
      power(s, s) = std::polar(1.0, 2.0 * M_PI * f);
    }
    c.add(Gate::unitary(cell, power, {{anc[k], Polarity::kFilled}}));
  }
  append_inverse_qft(c, anc);
  return c;
}

qsim::OutcomeDistribution qpe_distribution(const PhaseOperator& u,
                                           const qsim::Statevector& cell_state,
                                           unsigned n_ancillas) {
  check_ancillas(n_ancillas);
  if (cell_state.n_qubits() != u.v) throw QpeError("cell state does not match the operator");
  const qsim::Circuit c = build_qpe_circuit(u, n_ancillas);
  // |ancillas = 0> (x) |cell>: the cell occupies the low bits.
  std::vector<qsim::Complex> amps(std::size_t{1} << c.n_qubits(), 0.0);
  for (std::size_t s = 0; s < cell_state.dimension(); ++s) amps[s] = cell_state[s];
  const auto out = qsim::run_unitary(qsim::Statevector(std::move(amps)), c);
  std::vector<Qubit> anc(n_ancillas);
  for (unsigned k = 0; k < n_ancillas; ++k) anc[k] = u.v + k;
  return qsim::measure_distribution(out, anc);
}

qsim::OutcomeDistribution qpe_distribution(const PhaseOperator& u, std::size_t s,
                                           unsigned n_ancillas) {
  if (s >= u.quantity.size()) throw QpeError("cell state out of range");
  return qpe_distribution(u, qsim::Statevector::basis(u.v, s), n_ancillas);
}

std::vector<double> qpe_closed_form(double phi, unsigned n_ancillas) {
  check_ancillas(n_ancillas);
  const std::size_t dim = std::size_t{1} << n_ancillas;
  std::vector<double> p(dim);
  for (std::size_t y = 0; y < dim; ++y) {
    qsim::Complex acc{0.0, 0.0};
    const double delta = phi - static_cast<double>(y) / static_cast<double>(dim);
    for (std::size_t j = 0; j < dim; ++j) acc += std::polar(1.0, 2.0 * M_PI * static_cast<double>(j) * delta);
    p[y] = std::norm(acc / static_cast<double>(dim));
  }
  return p;
}

}  // namespace qlgca::qpe
