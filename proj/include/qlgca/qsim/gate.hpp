#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace qlgca::qsim {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// Qubit index; qubit 0 is the least-significant bit of a basis index.
using Qubit = unsigned;

class QsimError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Polarity : std::uint8_t {
  kOpen,    // fires when the control qubit is |0>
  kFilled,  // fires when the control qubit is |1>
};

struct Control {
  Qubit qubit = 0;
  Polarity polarity = Polarity::kFilled;

  bool operator==(const Control&) const = default;
};

enum class GateKind : std::uint8_t { kX, kZ, kH, kSwap, kUnitary };

std::string to_string(GateKind kind);

/**
 * A (possibly multi-controlled) gate. Controls are first-class: a Toffoli is
 * an X with two filled controls, a controlled-SWAP is a SWAP with one control.
 * Generic blocks carry their own 2^k x 2^k matrix acting on `targets`, where
 * targets[0] is the least-significant bit of the block index.
 */
class Gate {
 public:
  static Gate x(Qubit target, std::vector<Control> controls = {});
  static Gate z(Qubit target, std::vector<Control> controls = {});
  static Gate h(Qubit target, std::vector<Control> controls = {});
  static Gate swap(Qubit a, Qubit b, std::vector<Control> controls = {});
  static Gate unitary(std::vector<Qubit> targets, Matrix block,
                      std::vector<Control> controls = {});

  GateKind kind() const { return kind_; }
  const std::vector<Qubit>& targets() const { return targets_; }
  const std::vector<Control>& controls() const { return controls_; }

  /// The uncontrolled block acting on targets().
  Matrix block() const;

  /// Highest qubit index referenced, plus one.
  Qubit span() const;

  /// Same gate with every control's polarity and qubit preserved, block
  /// replaced by its adjoint.
  Gate adjoint() const;

  Gate with_extra_controls(const std::vector<Control>& extra) const;

  bool operator==(const Gate& other) const;

 private:
  Gate(GateKind kind, std::vector<Qubit> targets, std::vector<Control> controls,
       Matrix block);
  void validate() const;

  GateKind kind_;
  std::vector<Qubit> targets_;
  std::vector<Control> controls_;
  Matrix block_;  // only populated for kUnitary
};

/// max |U^dagger U - I| over entries.
double unitarity_defect(const Matrix& u);

}  // namespace qlgca::qsim
