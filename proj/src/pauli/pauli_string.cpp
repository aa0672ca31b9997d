#include "qlgca/pauli/pauli_string.hpp"

#include <bit>

namespace qlgca::pauli {

char to_char(Letter l) {
  switch (l) {
    case Letter::I: return 'I';
    case Letter::X: return 'X';
    case Letter::Y: return 'Y';
    case Letter::Z: return 'Z';
  }
  return '?';
}

PauliString::PauliString(std::vector<Letter> letters)
    : letters_(std::move(letters)) {
  if (letters_.empty()) throw PauliError("Pauli string must have at least one letter");
  if (letters_.size() > 31) throw PauliError("Pauli string longer than 31 qubits");
}

PauliString PauliString::identity(unsigned v) {
  return PauliString(std::vector<Letter>(v, Letter::I));
}

PauliString PauliString::from_index(std::uint64_t index, unsigned v) {
  std::vector<Letter> letters(v);
  for (unsigned q = 0; q < v; ++q) {
    letters[q] = static_cast<Letter>(index & 3U);
    index >>= 2;
  }
  if (index != 0) throw PauliError("Pauli index out of range for v qubits");
  return PauliString(std::move(letters));
}

PauliString PauliString::parse(std::string_view text) {
  std::vector<Letter> letters(text.size());
  for (std::size_t pos = 0; pos < text.size(); ++pos) {
    Letter l;
    switch (text[pos]) {
      case 'I': l = Letter::I; break;
      case 'X': l = Letter::X; break;
      case 'Y': l = Letter::Y; break;
      case 'Z': l = Letter::Z; break;
      default:
        throw PauliError("invalid Pauli letter '" + std::string(1, text[pos]) +
                         "' in \"" + std::string(text) + "\"");
    }
    letters[text.size() - 1 - pos] = l;
  }
  return PauliString(std::move(letters));
}

std::uint64_t PauliString::index() const {
  std::uint64_t idx = 0;
  for (unsigned q = size(); q-- > 0;)
    idx = (idx << 2) | static_cast<std::uint64_t>(letters_[q]);
  return idx;
}

std::string PauliString::to_string() const {
  std::string s;
  for (unsigned q = size(); q-- > 0;) s += to_char(letters_[q]);
  return s;
}

std::uint64_t PauliString::x_mask() const {
  std::uint64_t m = 0;
  for (unsigned q = 0; q < size(); ++q)
    if (letters_[q] == Letter::X || letters_[q] == Letter::Y) m |= std::uint64_t{1} << q;
  return m;
}

std::uint64_t PauliString::z_mask() const {
  std::uint64_t m = 0;
  for (unsigned q = 0; q < size(); ++q)
    if (letters_[q] == Letter::Z || letters_[q] == Letter::Y) m |= std::uint64_t{1} << q;
  return m;
}

bool PauliString::is_identity() const {
  for (Letter l : letters_)
    if (l != Letter::I) return false;
  return true;
}

Complex y_phase(std::uint64_t x_mask, std::uint64_t z_mask) {
  switch (std::popcount(x_mask & z_mask) & 3) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

std::pair<Complex, std::uint64_t> PauliString::apply(std::uint64_t k) const {
  const std::uint64_t x = x_mask();
  const std::uint64_t z = z_mask();
  Complex phase = y_phase(x, z);
  if (std::popcount(z & k) & 1) phase = -phase;
  return {phase, k ^ x};
}

std::vector<PauliString> enumerate_basis(unsigned v) {
  if (v == 0) throw PauliError("basis needs v >= 1");
  if (v > 15) throw PauliError("basis enumeration limited to 15 qubits");
  const std::uint64_t n = std::uint64_t{1} << (2 * v);
  std::vector<PauliString> out;
  out.reserve(n);
  for (std::uint64_t i = 0; i < n; ++i) out.push_back(PauliString::from_index(i, v));
  return out;
}

Matrix pauli_matrix(const PauliString& p) {
  const auto dim = static_cast<Eigen::Index>(std::uint64_t{1} << p.size());
  Matrix m = Matrix::Zero(dim, dim);
  for (Eigen::Index k = 0; k < dim; ++k) {
    auto [phase, image] = p.apply(static_cast<std::uint64_t>(k));
    m(static_cast<Eigen::Index>(image), k) = phase;
  }
  return m;
}

}  // namespace qlgca::pauli
