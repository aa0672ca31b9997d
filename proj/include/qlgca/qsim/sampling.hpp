#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include "qlgca/qsim/gate.hpp"

namespace qlgca::qsim {

/// mt19937_64 with a portable uniform draw (top 53 bits), so results do not
/// depend on the standard library's distribution classes.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  bool bit() { return (engine_() >> 63) != 0; }

 private:
  std::mt19937_64 engine_;
};

/**
 * Born-rule distribution over the outcomes of measuring `qubits`. Outcome bit
 * j corresponds to qubits[j]. Only outcomes with non-zero probability are
 * stored.
 */
class OutcomeDistribution {
 public:
  OutcomeDistribution() = default;
  OutcomeDistribution(std::vector<Qubit> qubits,
                      std::map<std::uint64_t, double> probabilities);

  const std::vector<Qubit>& qubits() const { return qubits_; }
  const std::map<std::uint64_t, double>& support() const { return probs_; }

  double probability(std::uint64_t outcome) const;
  double total() const;
  /// Dense vector over all 2^k outcomes.
  std::vector<double> dense() const;
  /// Outcome with the largest probability (lowest index on ties).
  std::uint64_t mode() const;

 private:
  std::vector<Qubit> qubits_;
  std::map<std::uint64_t, double> probs_;
};

/// Sum over outcomes of |p - q| / 2.
double total_variation(const OutcomeDistribution& p, const OutcomeDistribution& q);
double total_variation(const std::vector<double>& p, const std::vector<double>& q);

/// Multinomial draw of `shots` outcomes; identical for identical seeds.
std::map<std::uint64_t, std::uint64_t> sample_counts(
    const OutcomeDistribution& distribution, std::uint64_t shots,
    std::uint64_t seed);

}  // namespace qlgca::qsim
