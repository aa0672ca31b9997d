#include "qlgca/qsim/gate.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace qlgca::qsim {

namespace {

constexpr double kUnitaryTolerance = 1e-12;

}  // namespace

std::string to_string(GateKind kind) {
  switch (kind) {
    case GateKind::kX:
      return "X";
    case GateKind::kZ:
      return "Z";
    case GateKind::kH:
      return "H";
    case GateKind::kSwap:
      return "SWAP";
    case GateKind::kUnitary:
      return "U";
  }
  return "?";
}

double unitarity_defect(const Matrix& u) {
  if (u.rows() != u.cols()) return INFINITY;
  Matrix d = u.adjoint() * u - Matrix::Identity(u.rows(), u.cols());
  return d.cwiseAbs().maxCoeff();
}

Gate::Gate(GateKind kind, std::vector<Qubit> targets,
           std::vector<Control> controls, Matrix block)
    : kind_(kind),
      targets_(std::move(targets)),
      controls_(std::move(controls)),
      block_(std::move(block)) {
  validate();
}

void Gate::validate() const {
  std::set<Qubit> seen;
  for (Qubit t : targets_) {
    if (!seen.insert(t).second)
      throw QsimError("gate target qubit " + std::to_string(t) + " repeated");
  }
  for (const Control& c : controls_) {
    if (!seen.insert(c.qubit).second)
      throw QsimError("control qubit " + std::to_string(c.qubit) +
                      " overlaps a target or another control");
  }
  if (kind_ == GateKind::kUnitary) {
    const auto dim = Eigen::Index{1} << targets_.size();
    if (block_.rows() != dim || block_.cols() != dim)
      throw QsimError("unitary block dimension does not match target count");
    if (unitarity_defect(block_) > kUnitaryTolerance)
      throw QsimError("generic gate block is not unitary");
  }
}

Gate Gate::x(Qubit target, std::vector<Control> controls) {
  return Gate(GateKind::kX, {target}, std::move(controls), {});
}

Gate Gate::z(Qubit target, std::vector<Control> controls) {
  return Gate(GateKind::kZ, {target}, std::move(controls), {});
}

Gate Gate::h(Qubit target, std::vector<Control> controls) {
  return Gate(GateKind::kH, {target}, std::move(controls), {});
}

Gate Gate::swap(Qubit a, Qubit b, std::vector<Control> controls) {
  return Gate(GateKind::kSwap, {a, b}, std::move(controls), {});
}

Gate Gate::unitary(std::vector<Qubit> targets, Matrix block,
                   std::vector<Control> controls) {
  if (targets.empty()) throw QsimError("generic gate needs at least one target");
  return Gate(GateKind::kUnitary, std::move(targets), std::move(controls),
              std::move(block));
}

Matrix Gate::block() const {
  switch (kind_) {
    case GateKind::kX: {
      Matrix m(2, 2);
      m << 0, 1, 1, 0;
      return m;
    }
    case GateKind::kZ: {
      Matrix m(2, 2);
      m << 1, 0, 0, -1;
      return m;
    }
    case GateKind::kH: {
      const double r = 1.0 / std::sqrt(2.0);
      Matrix m(2, 2);
      m << r, r, r, -r;
      return m;
    }
    case GateKind::kSwap: {
      Matrix m = Matrix::Zero(4, 4);
      m(0, 0) = m(3, 3) = 1;
      m(1, 2) = m(2, 1) = 1;
      return m;
    }
    case GateKind::kUnitary:
      return block_;
  }
  return {};
}

Qubit Gate::span() const {
  Qubit hi = 0;
  for (Qubit t : targets_) hi = std::max(hi, t + 1);
  for (const Control& c : controls_) hi = std::max(hi, c.qubit + 1);
  return hi;
}

Gate Gate::adjoint() const {
  if (kind_ != GateKind::kUnitary) return *this;
  return Gate(kind_, targets_, controls_, block_.adjoint());
}

Gate Gate::with_extra_controls(const std::vector<Control>& extra) const {
  std::vector<Control> all = controls_;
  all.insert(all.end(), extra.begin(), extra.end());
  return Gate(kind_, targets_, std::move(all), block_);
}

bool Gate::operator==(const Gate& other) const {
  if (kind_ != other.kind_ || targets_ != other.targets_ ||
      controls_ != other.controls_)
    return false;
  if (kind_ != GateKind::kUnitary) return true;
  return block_.rows() == other.block_.rows() &&
         (block_ - other.block_).cwiseAbs().maxCoeff() == 0.0;
}

}  // namespace qlgca::qsim
