#include "qlgca/circuits/basis_decomposition.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "qlgca/circuits/collision_spec.hpp"
#include "qlgca/qsim/simulator.hpp"

namespace qlgca::circuits {

namespace {

using qsim::Complex;
using qsim::Control;
using qsim::Gate;
using qsim::GateKind;
using qsim::Matrix;
using qsim::Polarity;
using qsim::Qubit;

Matrix rz(double theta) {
  Matrix m = Matrix::Zero(2, 2);
  m(0, 0) = std::polar(1.0, -theta / 2);
  m(1, 1) = std::polar(1.0, theta / 2);
  return m;
}

Matrix ry(double theta) {
  Matrix m(2, 2);
  m << std::cos(theta / 2), -std::sin(theta / 2), std::sin(theta / 2), std::cos(theta / 2);
  return m;
}

Matrix phase(double theta) {
  Matrix m = Matrix::Identity(2, 2);
  m(1, 1) = std::polar(1.0, theta);
  return m;
}

unsigned work_needed(const Gate& g) {
  const auto k = static_cast<unsigned>(g.controls().size());
  switch (g.kind()) {
    case GateKind::kX:
    case GateKind::kZ:
      return k >= 3 ? k - 2 : 0;
    case GateKind::kSwap:
      return k + 1 >= 3 ? k - 1 : 0;
    case GateKind::kH:
    case GateKind::kUnitary:
      if (g.targets().size() != 1)
        throw CircuitsError("basis lowering supports single-target blocks only");
      return k >= 2 ? k - 1 : 0;
  }
  return 0;
}

class Lowerer {
 public:
  Lowerer(qsim::Circuit& out, Qubit work_base) : out_(out), work_base_(work_base) {}

  void lower(const Gate& g) {
    std::vector<Qubit> flips;
    std::vector<Qubit> ctrls;
    for (const Control& c : g.controls()) {
      ctrls.push_back(c.qubit);
      if (c.polarity == Polarity::kOpen) flips.push_back(c.qubit);
    }
    for (Qubit q : flips) emit(Gate::x(q));
    const Qubit t = g.targets()[0];
    switch (g.kind()) {
      case GateKind::kX:
        mcx(ctrls, t);
        break;
      case GateKind::kZ:
        if (ctrls.empty()) {
          emit(Gate::z(t));
        } else {
          emit(Gate::h(t));
          mcx(ctrls, t);
          emit(Gate::h(t));
        }
        break;
      case GateKind::kSwap: {
        const Qubit u = g.targets()[1];
        cnot(u, t);
        auto with_u = ctrls;
        with_u.push_back(t);
        mcx(with_u, u);
        cnot(u, t);
        break;
      }
      case GateKind::kH:
      case GateKind::kUnitary:
        controlled_single(ctrls, t, g.block());
        break;
    }
    for (Qubit q : flips) emit(Gate::x(q));
  }

 private:
  void emit(Gate g) { out_.add(std::move(g)); }
  void cnot(Qubit c, Qubit t) { emit(Gate::x(t, {{c, Polarity::kFilled}})); }
  void single(Qubit q, const Matrix& m) { emit(Gate::unitary({q}, m)); }

  void toffoli(Qubit c1, Qubit c2, Qubit t) {
    const Matrix tg = phase(M_PI / 4);
    const Matrix tdg = phase(-M_PI / 4);
    emit(Gate::h(t));
    cnot(c2, t);
    single(t, tdg);
    cnot(c1, t);
    single(t, tg);
    cnot(c2, t);
    single(t, tdg);
    cnot(c1, t);
    single(c2, tg);
    single(t, tg);
    emit(Gate::h(t));
    cnot(c1, c2);
    single(c1, tg);
    single(c2, tdg);
    cnot(c1, c2);
  }

  void mcx(const std::vector<Qubit>& c, Qubit t) {
    const std::size_t k = c.size();
    if (k == 0) return emit(Gate::x(t));
    if (k == 1) return cnot(c[0], t);
    if (k == 2) return toffoli(c[0], c[1], t);
    std::vector<std::array<Qubit, 3>> ladder;
    ladder.push_back({c[0], c[1], work_base_});
    for (std::size_t i = 2; i + 1 < k; ++i)
      ladder.push_back({c[i], work(i - 2), work(i - 1)});
    for (const auto& s : ladder) toffoli(s[0], s[1], s[2]);
    toffoli(c[k - 1], work(k - 3), t);
    for (auto it = ladder.rbegin(); it != ladder.rend(); ++it) toffoli((*it)[0], (*it)[1], (*it)[2]);
  }

  void controlled_single(const std::vector<Qubit>& c, Qubit t, const Matrix& u) {
    if (c.empty()) return single(t, u);
    if (c.size() == 1) return controlled_u(c[0], t, u);
    // AND of all controls into the last work qubit, then a singly controlled U.
    std::vector<std::array<Qubit, 3>> ladder;
    ladder.push_back({c[0], c[1], work(0)});
    for (std::size_t i = 2; i < c.size(); ++i) ladder.push_back({c[i], work(i - 2), work(i - 1)});
    for (const auto& s : ladder) toffoli(s[0], s[1], s[2]);
    controlled_u(work(c.size() - 2), t, u);
    for (auto it = ladder.rbegin(); it != ladder.rend(); ++it) toffoli((*it)[0], (*it)[1], (*it)[2]);
  }

  void controlled_u(Qubit c, Qubit t, const Matrix& u) {
    const ZyzAngles a = zyz_decompose(u);
    single(t, rz((a.delta - a.beta) / 2));
    cnot(c, t);
    single(t, ry(-a.gamma / 2) * rz(-(a.delta + a.beta) / 2));
    cnot(c, t);
    single(t, rz(a.beta) * ry(a.gamma / 2));
    single(c, phase(a.alpha));
  }

  Qubit work(std::size_t i) const { return work_base_ + static_cast<Qubit>(i); }

  qsim::Circuit& out_;
  Qubit work_base_;
};

std::string histogram_key(const Gate& g) {
  if (!g.controls().empty()) return "cx";
  switch (g.kind()) {
    case GateKind::kX: return "x";
    case GateKind::kZ: return "z";
    case GateKind::kH: return "h";
    default: return "u";
  }
}

}  // namespace

bool is_elementary(const Gate& g) {
  if (g.kind() == GateKind::kSwap) return false;
  if (g.targets().size() != 1) return false;
  if (g.controls().empty()) return true;
  return g.kind() == GateKind::kX && g.controls().size() == 1 &&
         g.controls()[0].polarity == Polarity::kFilled;
}

ZyzAngles zyz_decompose(const Matrix& u) {
  if (u.rows() != 2 || u.cols() != 2) throw CircuitsError("ZYZ needs a 2x2 matrix");
  ZyzAngles a;
  const Complex det = u(0, 0) * u(1, 1) - u(0, 1) * u(1, 0);
  a.alpha = std::arg(det) / 2;
  const Matrix v = u * std::polar(1.0, -a.alpha);
  a.gamma = 2 * std::atan2(std::abs(v(1, 0)), std::abs(v(0, 0)));
  const double sum = std::abs(v(1, 1)) > 1e-12 ? 2 * std::arg(v(1, 1)) : 0.0;
  const double diff = std::abs(v(1, 0)) > 1e-12 ? 2 * std::arg(v(1, 0)) : 0.0;
  a.beta = (sum + diff) / 2;
  a.delta = (sum - diff) / 2;
  // det fixes alpha only modulo pi; absorb a sign flip here.
  const Matrix rebuilt = std::polar(1.0, a.alpha) * rz(a.beta) * ry(a.gamma) * rz(a.delta);
  if ((rebuilt - u).cwiseAbs().maxCoeff() > 1e-9) a.alpha += M_PI;
  return a;
}

Decomposition decompose_to_basis(const qsim::Circuit& circuit) {
  unsigned work = 0;
  for (const auto& e : circuit.elements())
    if (const auto* g = std::get_if<Gate>(&e)) work = std::max(work, work_needed(*g));

  const unsigned n = circuit.n_qubits();
  Decomposition d{qsim::Circuit(n + work), {}};
  d.report.work_qubits = work;
  Lowerer lowerer(d.circuit, n);
  for (const auto& e : circuit.elements()) {
    if (const auto* g = std::get_if<Gate>(&e)) {
      if (is_elementary(*g))
        d.circuit.add(*g);
      else
        lowerer.lower(*g);
    } else {
      d.circuit.measure(std::get<qsim::Measurement>(e).qubits);
      ++d.report.measurement_count;
    }
  }
  for (const auto& e : d.circuit.elements())
    if (const auto* g = std::get_if<Gate>(&e)) {
      ++d.report.histogram[histogram_key(*g)];
      ++d.report.elementary_gate_count;
    }

  // Compare the gate sequences with measurements removed, work qubits at |0>.
  qsim::Circuit src(n + work);
  qsim::Circuit low(n + work);
  for (const auto& e : circuit.elements())
    if (const auto* g = std::get_if<Gate>(&e)) src.add(*g);
  for (const auto& e : d.circuit.elements())
    if (const auto* g = std::get_if<Gate>(&e)) low.add(*g);
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
    const auto a = qsim::run_unitary(qsim::Statevector::basis(n + work, s), src);
    const auto b = qsim::run_unitary(qsim::Statevector::basis(n + work, s), low);
    for (std::size_t i = 0; i < a.dimension(); ++i)
      d.report.max_deviation = std::max(d.report.max_deviation, std::abs(a[i] - b[i]));
  }
  d.report.equivalent = d.report.max_deviation <= kDecompositionTolerance;
  if (!d.report.equivalent)
    throw CircuitsError("lowered circuit deviates from the source by " +
                        std::to_string(d.report.max_deviation));
  return d;
}

}  // namespace qlgca::circuits
