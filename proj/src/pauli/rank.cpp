#include "qlgca/pauli/rank.hpp"

#include <algorithm>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "qlgca/qsim/sampling.hpp"

namespace qlgca::pauli {

namespace {

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1;
  b %= m;
  while (e) {
    if (e & 1U) r = r * b % m;
    b = b * b % m;
    e >>= 1;
  }
  return r;
}

std::uint32_t reduce(std::int64_t x, std::uint32_t p) {
  const std::int64_t r = x % static_cast<std::int64_t>(p);
  return static_cast<std::uint32_t>(r < 0 ? r + p : r);
}

Eigen::MatrixXd to_dense(const std::vector<SparseRow<std::int64_t>>& rows,
                         std::size_t n_cols) {
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(rows.size()),
                                            static_cast<Eigen::Index>(n_cols));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (const auto& [j, val] : rows[i])
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
          static_cast<double>(val);
  return m;
}

}  // namespace

bool is_prime_u32(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t small : {2U, 3U, 5U, 7U, 11U, 13U})
    if (n % small == 0) return n == small;
  std::uint64_t d = n - 1;
  unsigned s = 0;
  while ((d & 1U) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ULL, 7ULL, 61ULL}) {
    if (a % n == 0) continue;
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned r = 1; r < s; ++r) {
      x = x * x % n;
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::vector<std::uint32_t> random_primes(unsigned count, std::uint64_t seed) {
  constexpr std::uint32_t lo = (1U << 30) + 1;
  constexpr std::uint32_t span = (1U << 30) - 1;
  qsim::Rng rng(seed);
  std::vector<std::uint32_t> primes;
  while (primes.size() < count) {
    std::uint32_t c = lo + static_cast<std::uint32_t>(rng.next_u64() % span);
    while (!is_prime_u32(c)) c = c + 1 < lo + span ? c + 1 : lo;
    if (std::find(primes.begin(), primes.end(), c) == primes.end())
      primes.push_back(c);
  }
  return primes;
}

std::size_t rank_mod_p(const std::vector<SparseRow<std::int64_t>>& rows,
                       std::size_t n_cols, std::uint32_t p) {
  const std::uint64_t P = p;
  std::vector<std::vector<std::uint32_t>> piv_dense;
  std::vector<std::vector<std::uint32_t>> piv_support;
  std::vector<std::vector<char>> in_support;
  std::vector<std::uint32_t> piv_col;
  std::vector<std::int64_t> col_to_piv(n_cols, -1);

  std::vector<std::uint64_t> work(n_cols, 0);
  std::vector<char> touched_flag(n_cols, 0);
  std::vector<std::uint32_t> touched;

  auto touch = [&](std::uint32_t c) {
    if (!touched_flag[c]) {
      touched_flag[c] = 1;
      touched.push_back(c);
    }
  };

  for (const auto& row : rows) {
    for (std::uint32_t c : touched) {
      work[c] = 0;
      touched_flag[c] = 0;
    }
    touched.clear();
    for (const auto& [c, val] : row) {
      if (c >= n_cols) throw PauliError("column index out of range");
      work[c] = reduce(val, p);
      touch(c);
    }

    // Pivot rows are fully reduced, so fill-in never lands on a pivot column
    // and a single pass over the original support suffices.
    for (const auto& [c, val] : row) {
      const std::int64_t pr = col_to_piv[c];
      if (pr < 0 || work[c] == 0) continue;
      const std::uint64_t f = work[c];
      const auto& dense = piv_dense[static_cast<std::size_t>(pr)];
      for (std::uint32_t k : piv_support[static_cast<std::size_t>(pr)]) {
        if (dense[k] == 0) continue;
        work[k] = (work[k] + P - f * dense[k] % P) % P;
        touch(k);
      }
    }

    std::uint32_t pivot = static_cast<std::uint32_t>(n_cols);
    for (std::uint32_t c : touched)
      if (work[c] != 0 && c < pivot) pivot = c;
    if (pivot == n_cols) continue;

    const std::uint64_t inv = pow_mod(work[pivot], P - 2, P);
    std::vector<std::uint32_t> dense(n_cols, 0);
    std::vector<std::uint32_t> support;
    std::vector<char> member(n_cols, 0);
    for (std::uint32_t c : touched) {
      if (work[c] == 0) continue;
      dense[c] = static_cast<std::uint32_t>(work[c] * inv % P);
      support.push_back(c);
      member[c] = 1;
    }

    for (std::size_t r = 0; r < piv_dense.size(); ++r) {
      auto& other = piv_dense[r];
      const std::uint64_t f = other[pivot];
      if (f == 0) continue;
      for (std::uint32_t k : support) {
        other[k] = static_cast<std::uint32_t>((other[k] + P - f * dense[k] % P) % P);
        if (!in_support[r][k]) {
          in_support[r][k] = 1;
          piv_support[r].push_back(k);
        }
      }
    }

    col_to_piv[pivot] = static_cast<std::int64_t>(piv_dense.size());
    piv_col.push_back(pivot);
    piv_dense.push_back(std::move(dense));
    piv_support.push_back(std::move(support));
    in_support.push_back(std::move(member));
  }
  return piv_dense.size();
}

std::size_t rank_rational(const std::vector<SparseRow<std::int64_t>>& rows,
                          std::size_t n_cols) {
  using boost::multiprecision::cpp_int;
  const std::size_t n_rows = rows.size();
  std::vector<std::vector<cpp_int>> a(n_rows, std::vector<cpp_int>(n_cols));
  for (std::size_t i = 0; i < n_rows; ++i)
    for (const auto& [j, val] : rows[i]) a[i][j] = val;

  std::size_t rank = 0;
  cpp_int prev = 1;
  for (std::size_t col = 0; col < n_cols && rank < n_rows; ++col) {
    std::size_t sel = rank;
    while (sel < n_rows && a[sel][col] == 0) ++sel;
    if (sel == n_rows) continue;
    std::swap(a[sel], a[rank]);
    for (std::size_t i = rank + 1; i < n_rows; ++i) {
      for (std::size_t j = col + 1; j < n_cols; ++j)
        a[i][j] = (a[rank][col] * a[i][j] - a[i][col] * a[rank][j]) / prev;
      a[i][col] = 0;
    }
    prev = a[rank][col];
    ++rank;
  }
  return rank;
}

std::size_t rank_svd(const Eigen::MatrixXd& m, double rel_tol) {
  if (m.size() == 0) return 0;
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
  const auto& s = svd.singularValues();
  if (s.size() == 0 || s(0) == 0.0) return 0;
  std::size_t r = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i)
    if (s(i) > rel_tol * s(0)) ++r;
  return r;
}

RankResult exact_rank(const std::vector<SparseRow<std::int64_t>>& rows,
                      std::size_t n_cols, const RankOptions& options) {
  if (options.n_primes < 2) throw PauliError("exact rank needs at least two primes");
  RankResult result;
  result.primes = random_primes(options.n_primes, options.seed);
  for (std::uint32_t p : result.primes)
    result.modular_ranks.push_back(rank_mod_p(rows, n_cols, p));

  const bool agree =
      std::all_of(result.modular_ranks.begin(), result.modular_ranks.end(),
                  [&](std::size_t r) { return r == result.modular_ranks.front(); });
  if (agree) {
    result.rank = result.modular_ranks.front();
  } else {
    result.rational_arbiter_used = true;
    result.rank = rank_rational(rows, n_cols);
  }

  if (rows.size() <= options.svd_max_dim && n_cols <= options.svd_max_dim) {
    result.svd_rank = rank_svd(to_dense(rows, n_cols), options.svd_rel_tol);
    if (*result.svd_rank != result.rank)
      throw PauliError("exact rank " + std::to_string(result.rank) +
                       " disagrees with SVD rank " + std::to_string(*result.svd_rank));
  }
  return result;
}

RankResult evolution_rank(const EvolutionMatrix& m, const RankOptions& options) {
  if (m.exact) return exact_rank(m.numerators, m.dimension(), options);
  const auto n = static_cast<Eigen::Index>(m.dimension());
  Eigen::MatrixXd dense = Eigen::MatrixXd::Zero(n, n);
  for (std::size_t i = 0; i < m.dimension(); ++i)
    for (const auto& [j, val] : m.values[i])
      dense(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = val;
  RankResult result;
  if (m.dimension() <= options.svd_max_dim) {
    result.rank = rank_svd(dense, options.svd_rel_tol);
    result.svd_rank = result.rank;
  } else {
    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(dense);
    qr.setThreshold(options.svd_rel_tol);
    result.rank = static_cast<std::size_t>(qr.rank());
  }
  return result;
}

}  // namespace qlgca::pauli
