#include "qlgca/qsim/sampling.hpp"

#include <algorithm>
#include <cmath>

namespace qlgca::qsim {

OutcomeDistribution::OutcomeDistribution(
    std::vector<Qubit> qubits, std::map<std::uint64_t, double> probabilities)
    : qubits_(std::move(qubits)), probs_(std::move(probabilities)) {
  for (const auto& [outcome, p] : probs_) {
    if (p < 0.0) throw QsimError("negative outcome probability");
    if (qubits_.size() < 64 && outcome >> qubits_.size())
      throw QsimError("outcome wider than the measured register");
  }
}

double OutcomeDistribution::probability(std::uint64_t outcome) const {
  auto it = probs_.find(outcome);
  return it == probs_.end() ? 0.0 : it->second;
}

double OutcomeDistribution::total() const {
  double t = 0.0;
  for (const auto& [outcome, p] : probs_) t += p;
  return t;
}

std::vector<double> OutcomeDistribution::dense() const {
  std::vector<double> d(std::size_t{1} << qubits_.size(), 0.0);
  for (const auto& [outcome, p] : probs_) d[outcome] = p;
  return d;
}

std::uint64_t OutcomeDistribution::mode() const {
  std::uint64_t best = 0;
  double best_p = -1.0;
  for (const auto& [outcome, p] : probs_) {
    if (p > best_p) {
      best = outcome;
      best_p = p;
    }
  }
  return best;
}

double total_variation(const std::vector<double>& p,
                       const std::vector<double>& q) {
  const std::size_t n = std::max(p.size(), q.size());
  double tv = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double a = i < p.size() ? p[i] : 0.0;
    const double b = i < q.size() ? q[i] : 0.0;
    tv += std::abs(a - b);
  }
  return tv / 2.0;
}

double total_variation(const OutcomeDistribution& p,
                       const OutcomeDistribution& q) {
  double tv = 0.0;
  for (const auto& [outcome, a] : p.support())
    tv += std::abs(a - q.probability(outcome));
  for (const auto& [outcome, b] : q.support())
    if (!p.support().contains(outcome)) tv += b;
  return tv / 2.0;
}

std::map<std::uint64_t, std::uint64_t> sample_counts(
    const OutcomeDistribution& distribution, std::uint64_t shots,
    std::uint64_t seed) {
  if (shots == 0) throw QsimError("shots must be at least 1");
  if (distribution.support().empty())
    throw QsimError("cannot sample from an empty distribution");

  std::vector<std::uint64_t> outcomes;
  std::vector<double> cumulative;
  double running = 0.0;
  for (const auto& [outcome, p] : distribution.support()) {
    running += p;
    outcomes.push_back(outcome);
    cumulative.push_back(running);
  }

  Rng rng(seed);
  std::map<std::uint64_t, std::uint64_t> counts;
  for (std::uint64_t shot = 0; shot < shots; ++shot) {
    const double u = rng.uniform() * running;
    auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
    if (it == cumulative.end()) --it;
    ++counts[outcomes[static_cast<std::size_t>(it - cumulative.begin())]];
  }
  return counts;
}

}  // namespace qlgca::qsim
