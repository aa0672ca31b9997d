#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "qlgca/pauli/evolution.hpp"

namespace qlgca::pauli {

struct RankOptions {
  std::uint64_t seed = 20240611;
  unsigned n_primes = 2;
  /// Floating SVD cross-check runs when both dimensions are at most this.
  std::size_t svd_max_dim = 256;
  double svd_rel_tol = 1e-9;
};

struct RankResult {
  std::size_t rank = 0;
  std::vector<std::uint32_t> primes;
  std::vector<std::size_t> modular_ranks;
  bool rational_arbiter_used = false;
  std::optional<std::size_t> svd_rank;
};

/// Deterministic Miller-Rabin for 32-bit inputs.
bool is_prime_u32(std::uint32_t n);

/// `count` distinct primes in (2^30, 2^31), drawn from a seeded generator.
std::vector<std::uint32_t> random_primes(unsigned count, std::uint64_t seed);

/// Rank over GF(p) by incremental fully reduced row echelon form.
std::size_t rank_mod_p(const std::vector<SparseRow<std::int64_t>>& rows,
                       std::size_t n_cols, std::uint32_t p);

/// Exact rank over Q by fraction-free (Bareiss) elimination.
std::size_t rank_rational(const std::vector<SparseRow<std::int64_t>>& rows,
                          std::size_t n_cols);

/// Number of singular values above rel_tol * largest.
std::size_t rank_svd(const Eigen::MatrixXd& m, double rel_tol);

/**
 * Exact rank of an integer matrix: agreement across the modular ranks, with
 * rational elimination as arbiter on disagreement. Small matrices are also
 * checked against the SVD count; a mismatch throws.
 */
RankResult exact_rank(const std::vector<SparseRow<std::int64_t>>& rows,
                      std::size_t n_cols, const RankOptions& options = {});

/// Rank of an evolution matrix (exact path when available).
RankResult evolution_rank(const EvolutionMatrix& m, const RankOptions& options = {});

}  // namespace qlgca::pauli
