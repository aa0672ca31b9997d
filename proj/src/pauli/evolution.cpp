#include "qlgca/pauli/evolution.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <ostream>

namespace qlgca::pauli {

namespace {

inline Complex conj(const Complex& a) { return std::conj(a); }
inline bool is_zero(const Complex& a) { return a == Complex{0.0, 0.0}; }
inline bool is_zero(const GaussInt& a) { return a.is_zero(); }

std::uint64_t pauli_index_from_masks(std::uint64_t x, std::uint64_t z, unsigned v) {
  std::uint64_t idx = 0;
  for (unsigned q = v; q-- > 0;) {
    const bool xb = (x >> q) & 1U;
    const bool zb = (z >> q) & 1U;
    const std::uint64_t letter = xb ? (zb ? 2 : 1) : (zb ? 3 : 0);
    idx = (idx << 2) | letter;
  }
  return idx;
}

template <typename T>
void walsh_hadamard(std::vector<T>& h) {
  for (std::size_t len = 1; len < h.size(); len <<= 1)
    for (std::size_t i = 0; i < h.size(); i += len << 1)
      for (std::size_t j = i; j < i + len; ++j) {
        const T a = h[j];
        const T b = h[j + len];
        h[j] = a + b;
        h[j + len] = a - b;
      }
}

template <typename T>
struct SparseColumns {
  // cols[c] = nonzeros (row, value) of column c; rows[r] likewise for row r.
  std::vector<std::vector<std::pair<std::uint32_t, T>>> cols;
  std::vector<std::vector<std::pair<std::uint32_t, T>>> rows;
};

template <typename Get>
auto sparse_structure(std::size_t dim, Get get) {
  using T = decltype(get(0, 0));
  SparseColumns<T> s;
  s.cols.resize(dim);
  s.rows.resize(dim);
  for (std::size_t r = 0; r < dim; ++r)
    for (std::size_t c = 0; c < dim; ++c) {
      const T val = get(r, c);
      if (is_zero(val)) continue;
      s.cols[c].emplace_back(static_cast<std::uint32_t>(r), val);
      s.rows[r].emplace_back(static_cast<std::uint32_t>(c), val);
    }
  return s;
}

/**
 * D * tr(P_j C^dagger P_i C) for every j, in Pauli enumeration order, where C
 * is given by its sparse structure (scaled numerators in the exact case).
 */
template <typename T>
std::vector<T> conjugation_traces(const SparseColumns<T>& c, const PauliString& p,
                                  unsigned v) {
  const std::size_t dim = c.cols.size();
  const std::uint64_t px = p.x_mask();
  const std::uint64_t pz = p.z_mask();
  const unsigned p_quarter = static_cast<unsigned>(std::popcount(px & pz));

  // A = C^dagger P C, dense.
  std::vector<T> a(dim * dim, T{});
  for (std::size_t col = 0; col < dim; ++col) {
    for (const auto& [k, val] : c.cols[col]) {
      const unsigned quarter = p_quarter + 2U * (std::popcount(pz & k) & 1U);
      const std::uint64_t m = k ^ px;
      const T pc = times_i_pow(val, quarter);
      for (const auto& [r, cval] : c.rows[m]) a[r * dim + col] += conj(cval) * pc;
    }
  }

  std::vector<T> out(dim * dim, T{});
  std::vector<T> h(dim);
  for (std::uint64_t x = 0; x < dim; ++x) {
    // tr(P_{x,z} A) = i^{|x&z|} sum_k (-1)^{z.k} A[k, k^x]
    for (std::uint64_t k = 0; k < dim; ++k) h[k] = a[k * dim + (k ^ x)];
    walsh_hadamard(h);
    for (std::uint64_t z = 0; z < dim; ++z)
      out[pauli_index_from_masks(x, z, v)] =
          times_i_pow(h[z], static_cast<unsigned>(std::popcount(x & z)));
  }
  return out;
}

void check_collision(const Matrix& c, unsigned v) {
  const auto dim = static_cast<Eigen::Index>(std::uint64_t{1} << v);
  if (c.rows() != dim || c.cols() != dim)
    throw PauliError("collision matrix is not 2^v dimensional");
  if (unitarity_defect(c) > kUnitaryTolerance)
    throw PauliError("collision matrix is not unitary");
}

}  // namespace

double unitarity_defect(const Matrix& c) {
  if (c.rows() != c.cols()) return INFINITY;
  const Matrix d = c.adjoint() * c - Matrix::Identity(c.rows(), c.cols());
  return d.cwiseAbs().maxCoeff();
}

double EvolutionMatrix::entry(std::size_t i, std::size_t j) const {
  for (const auto& [col, val] : values[i])
    if (col == j) return val;
  return 0.0;
}

Rational EvolutionMatrix::rational_entry(std::size_t i, std::size_t j) const {
  if (!exact) throw PauliError("evolution matrix has no exact entries");
  for (const auto& [col, val] : numerators[i])
    if (col == j) return Rational(val, denominator);
  return Rational(0);
}

EvolutionMatrix evolution_matrix(const Matrix& c, unsigned v) {
  check_collision(c, v);
  const std::size_t dim = std::size_t{1} << v;
  const std::size_t n = dim * dim;

  EvolutionMatrix m;
  m.v = v;
  m.values.resize(n);

  if (auto exact = ExactMatrix::from_matrix(c)) {
    m.exact = true;
    const auto s = sparse_structure(
        dim, [&](std::size_t r, std::size_t col) { return exact->numerator(r, col); });
    // beta = trace / (d^2 D); M = beta - I.
    const std::int64_t scale =
        exact->denominator() * exact->denominator() * static_cast<std::int64_t>(dim);
    std::int64_t g = scale;
    m.numerators.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      const auto traces = conjugation_traces(s, PauliString::from_index(i, v), v);
      for (std::size_t j = 0; j < n; ++j) {
        if (traces[j].im != 0)
          throw PauliError("conjugated Pauli has a non-real coefficient");
        const std::int64_t num = traces[j].re - (i == j ? scale : 0);
        if (num == 0) continue;
        m.numerators[i].emplace_back(static_cast<std::uint32_t>(j), num);
        g = std::gcd(g, num);
      }
    }
    m.denominator = scale / g;
    for (std::size_t i = 0; i < n; ++i)
      for (auto& [j, num] : m.numerators[i]) {
        num /= g;
        m.values[i].emplace_back(
            j, static_cast<double>(num) / static_cast<double>(m.denominator));
      }
    return m;
  }

  const auto s = sparse_structure(dim, [&](std::size_t r, std::size_t col) {
    return c(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(col));
  });
  for (std::size_t i = 0; i < n; ++i) {
    const auto traces = conjugation_traces(s, PauliString::from_index(i, v), v);
    for (std::size_t j = 0; j < n; ++j) {
      const double beta = traces[j].real() / static_cast<double>(dim);
      const double val = beta - (i == j ? 1.0 : 0.0);
      if (std::abs(val) > kFloatingZero)
        m.values[i].emplace_back(static_cast<std::uint32_t>(j), val);
    }
  }
  return m;
}

std::vector<EvolutionRow> evolution_table(const Matrix& c, unsigned v) {
  const EvolutionMatrix m = evolution_matrix(c, v);
  if (!m.exact) throw PauliError("evolution table requires an exact collision matrix");
  std::vector<EvolutionRow> table;
  table.reserve(m.dimension());
  for (std::size_t i = 0; i < m.dimension(); ++i) {
    EvolutionRow row{PauliString::from_index(i, v), {}};
    bool diagonal_seen = false;
    for (const auto& [j, num] : m.numerators[i]) {
      Rational beta(num, m.denominator);
      if (j == i) {
        beta += 1;
        diagonal_seen = true;
      }
      if (beta.numerator() != 0) row.terms.emplace_back(PauliString::from_index(j, v), beta);
    }
    if (!diagonal_seen) {
      row.terms.emplace_back(row.input, Rational(1));
      std::sort(row.terms.begin(), row.terms.end(),
                [](const auto& a, const auto& b) { return a.first < b.first; });
    }
    table.push_back(std::move(row));
  }
  return table;
}

void write_evolution_table_csv(std::ostream& out,
                               const std::vector<EvolutionRow>& table) {
  out << "input_string,output_term,coefficient_numerator,coefficient_denominator\n";
  for (const EvolutionRow& row : table)
    for (const auto& [p, coef] : row.terms)
      out << row.input.to_string() << ',' << p.to_string() << ',' << coef.numerator()
          << ',' << coef.denominator() << '\n';
}

Matrix evolve_observable(const Matrix& c, const Matrix& o) {
  if (c.rows() != o.rows() || c.cols() != o.cols())
    throw PauliError("collision and observable dimensions differ");
  if (unitarity_defect(c) > kUnitaryTolerance)
    throw PauliError("collision matrix is not unitary");
  return c.adjoint() * o * c;
}

CommutationResult commutes(const Matrix& c, const Matrix& o) {
  if (c.rows() != o.rows() || c.cols() != o.cols())
    throw PauliError("collision and observable dimensions differ");
  const double residual = (c * o - o * c).cwiseAbs().maxCoeff();
  return {residual <= kCommutatorTolerance, residual};
}

}  // namespace qlgca::pauli
