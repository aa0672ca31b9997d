#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qlgca/qsim/gate.hpp"

namespace qlgca::pauli {

using qsim::Complex;
using qsim::Matrix;

class PauliError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Letter : std::uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

char to_char(Letter l);

/**
 * Tensor product of single-qubit Paulis. letters()[q] acts on qubit q. The
 * text form is written most-significant qubit first, so "IZX" has X on qubit 0.
 *
 * The enumeration index is sum_q letter(q) * 4^q, i.e. lexicographic in
 * (I, X, Y, Z) with qubit v-1 most significant.
 */
class PauliString {
 public:
  PauliString() = default;
  explicit PauliString(std::vector<Letter> letters);

  static PauliString identity(unsigned v);
  static PauliString from_index(std::uint64_t index, unsigned v);
  static PauliString parse(std::string_view text);

  unsigned size() const { return static_cast<unsigned>(letters_.size()); }
  const std::vector<Letter>& letters() const { return letters_; }
  Letter operator[](unsigned q) const { return letters_[q]; }

  std::uint64_t index() const;
  std::string to_string() const;

  /// Bit q set where the letter is X or Y.
  std::uint64_t x_mask() const;
  /// Bit q set where the letter is Z or Y.
  std::uint64_t z_mask() const;

  bool is_identity() const;
  bool is_diagonal() const { return x_mask() == 0; }

  /// P|k> = phase * |image>.
  std::pair<Complex, std::uint64_t> apply(std::uint64_t k) const;

  bool operator==(const PauliString&) const = default;
  auto operator<=>(const PauliString& o) const { return index() <=> o.index(); }

 private:
  std::vector<Letter> letters_;
};

/// All 4^v strings in enumeration order.
std::vector<PauliString> enumerate_basis(unsigned v);

/// Dense 2^v x 2^v matrix (Kronecker product, qubit v-1 leftmost).
Matrix pauli_matrix(const PauliString& p);

/// i^{|x & z|}: the phase relating P to X^x Z^z.
Complex y_phase(std::uint64_t x_mask, std::uint64_t z_mask);

}  // namespace qlgca::pauli
