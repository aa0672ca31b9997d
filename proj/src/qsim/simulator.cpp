#include "qlgca/qsim/simulator.hpp"

#include <cmath>
#include <string>
#include <utility>

namespace qlgca::qsim {

namespace {

// Branches below this probability are numerical noise from exact zeros.
constexpr double kBranchPruneTolerance = 1e-14;

struct ControlMask {
  std::uint64_t mask = 0;
  std::uint64_t value = 0;

  bool fires(std::uint64_t index) const { return (index & mask) == value; }
};

ControlMask control_mask(const Gate& gate) {
  ControlMask cm;
  for (const Control& c : gate.controls()) {
    const std::uint64_t bit = std::uint64_t{1} << c.qubit;
    cm.mask |= bit;
    if (c.polarity == Polarity::kFilled) cm.value |= bit;
  }
  return cm;
}

void apply_block(std::span<Complex> amps, const Gate& gate,
                 const ControlMask& cm) {
  const Matrix block = gate.block();
  const auto& targets = gate.targets();
  const std::size_t k = targets.size();
  const std::size_t block_dim = std::size_t{1} << k;

  std::uint64_t target_mask = 0;
  for (Qubit t : targets) target_mask |= std::uint64_t{1} << t;

  std::vector<std::uint64_t> offsets(block_dim, 0);
  for (std::size_t m = 0; m < block_dim; ++m)
    for (std::size_t j = 0; j < k; ++j)
      if ((m >> j) & 1U) offsets[m] |= std::uint64_t{1} << targets[j];

  std::vector<Complex> in(block_dim);
  for (std::uint64_t base = 0; base < amps.size(); ++base) {
    if ((base & target_mask) != 0 || !cm.fires(base)) continue;
    for (std::size_t m = 0; m < block_dim; ++m) in[m] = amps[base | offsets[m]];
    for (std::size_t r = 0; r < block_dim; ++r) {
      Complex acc{0.0, 0.0};
      for (std::size_t c = 0; c < block_dim; ++c)
        acc += block(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) *
               in[c];
      amps[base | offsets[r]] = acc;
    }
  }
}

Branch project(const Branch& parent, const std::vector<Qubit>& qubits,
               std::uint64_t outcome, double outcome_probability) {
  Branch child{parent.probability * outcome_probability, parent.state,
               parent.record};
  auto amps = child.state.amplitudes();
  const double scale = 1.0 / std::sqrt(outcome_probability);
  for (std::uint64_t i = 0; i < amps.size(); ++i) {
    if (gather_bits(i, qubits) == outcome)
      amps[i] *= scale;
    else
      amps[i] = 0.0;
  }
  child.record.push_back(outcome);
  return child;
}

}  // namespace

std::uint64_t gather_bits(std::uint64_t index, const std::vector<Qubit>& qubits) {
  std::uint64_t out = 0;
  for (std::size_t j = 0; j < qubits.size(); ++j)
    out |= ((index >> qubits[j]) & 1U) << j;
  return out;
}

void apply_gate_inplace(Statevector& state, const Gate& gate) {
  if (gate.span() > state.n_qubits())
    throw QsimError("gate references qubit " + std::to_string(gate.span() - 1) +
                    " on a " + std::to_string(state.n_qubits()) +
                    "-qubit state");
  auto amps = state.amplitudes();
  const ControlMask cm = control_mask(gate);

  switch (gate.kind()) {
    case GateKind::kX: {
      const std::uint64_t t = std::uint64_t{1} << gate.targets()[0];
      for (std::uint64_t i = 0; i < amps.size(); ++i)
        if (!(i & t) && cm.fires(i)) std::swap(amps[i], amps[i | t]);
      return;
    }
    case GateKind::kZ: {
      const std::uint64_t t = std::uint64_t{1} << gate.targets()[0];
      for (std::uint64_t i = 0; i < amps.size(); ++i)
        if ((i & t) && cm.fires(i)) amps[i] = -amps[i];
      return;
    }
    case GateKind::kSwap: {
      const std::uint64_t a = std::uint64_t{1} << gate.targets()[0];
      const std::uint64_t b = std::uint64_t{1} << gate.targets()[1];
      for (std::uint64_t i = 0; i < amps.size(); ++i)
        if ((i & a) && !(i & b) && cm.fires(i)) std::swap(amps[i], amps[i ^ a ^ b]);
      return;
    }
    case GateKind::kH:
    case GateKind::kUnitary:
      apply_block(amps, gate, cm);
      return;
  }
}

Statevector apply_gate(Statevector state, const Gate& gate) {
  apply_gate_inplace(state, gate);
  return state;
}

OutcomeDistribution measure_distribution(const Statevector& state,
                                         const std::vector<Qubit>& qubits) {
  if (qubits.empty()) throw QsimError("measured subset must be non-empty");
  std::uint64_t seen = 0;
  for (Qubit q : qubits) {
    if (q >= state.n_qubits())
      throw QsimError("measured qubit " + std::to_string(q) + " out of range");
    if (seen & (std::uint64_t{1} << q))
      throw QsimError("measured qubit " + std::to_string(q) + " repeated");
    seen |= std::uint64_t{1} << q;
  }
  std::vector<double> dense(std::size_t{1} << qubits.size(), 0.0);
  const auto amps = state.amplitudes();
  for (std::uint64_t i = 0; i < amps.size(); ++i)
    dense[gather_bits(i, qubits)] += std::norm(amps[i]);
  std::map<std::uint64_t, double> support;
  for (std::uint64_t o = 0; o < dense.size(); ++o)
    if (dense[o] > 0.0) support.emplace(o, dense[o]);
  return OutcomeDistribution(qubits, std::move(support));
}

std::vector<Branch> run_circuit(const Statevector& state, const Circuit& circuit,
                                RunOptions options) {
  if (state.n_qubits() != circuit.n_qubits())
    throw QsimError("state has " + std::to_string(state.n_qubits()) +
                    " qubits, circuit expects " +
                    std::to_string(circuit.n_qubits()));

  std::vector<Branch> branches{Branch{1.0, state, {}}};
  Rng rng(options.seed);

  for (const Element& element : circuit.elements()) {
    if (const auto* gate = std::get_if<Gate>(&element)) {
      for (Branch& b : branches) apply_gate_inplace(b.state, *gate);
      continue;
    }
    const auto& qubits = std::get<Measurement>(element).qubits;
    std::vector<Branch> next;
    for (const Branch& b : branches) {
      const OutcomeDistribution dist = measure_distribution(b.state, qubits);
      if (options.mode == RunMode::kSampled) {
        const double u = rng.uniform() * dist.total();
        double running = 0.0;
        auto chosen = dist.support().rbegin()->first;
        for (const auto& [outcome, p] : dist.support()) {
          running += p;
          if (u < running) {
            chosen = outcome;
            break;
          }
        }
        next.push_back(project(b, qubits, chosen, dist.probability(chosen)));
        continue;
      }
      for (const auto& [outcome, p] : dist.support())
        if (p > kBranchPruneTolerance) next.push_back(project(b, qubits, outcome, p));
    }
    branches = std::move(next);
  }
  return branches;
}

Statevector run_unitary(Statevector state, const Circuit& circuit) {
  if (circuit.has_measurement())
    throw QsimError("run_unitary requires a measurement-free circuit");
  if (state.n_qubits() != circuit.n_qubits())
    throw QsimError("state/circuit qubit count mismatch");
  for (const Element& e : circuit.elements())
    apply_gate_inplace(state, std::get<Gate>(e));
  return state;
}

std::vector<double> run_permutation(std::vector<double> distribution, const Circuit& circuit) {
  if (distribution.size() != (std::size_t{1} << circuit.n_qubits()))
    throw QsimError("distribution length does not match the circuit width");
  for (const Element& e : circuit.elements()) {
    const auto* gate = std::get_if<Gate>(&e);
    if (!gate) throw QsimError("run_permutation does not accept measurements");
    const ControlMask cm = control_mask(*gate);
    if (gate->kind() == GateKind::kX) {
      const std::uint64_t t = std::uint64_t{1} << gate->targets()[0];
      for (std::uint64_t i = 0; i < distribution.size(); ++i)
        if (!(i & t) && cm.fires(i)) std::swap(distribution[i], distribution[i | t]);
    } else if (gate->kind() == GateKind::kSwap) {
      const std::uint64_t a = std::uint64_t{1} << gate->targets()[0];
      const std::uint64_t b = std::uint64_t{1} << gate->targets()[1];
      for (std::uint64_t i = 0; i < distribution.size(); ++i)
        if ((i & a) && !(i & b) && cm.fires(i)) std::swap(distribution[i], distribution[i ^ a ^ b]);
    } else {
      throw QsimError("run_permutation accepts only X and SWAP gates, got " +
                      to_string(gate->kind()));
    }
  }
  return distribution;
}

Matrix unitary_of_circuit(const Circuit& circuit) {
  if (circuit.has_measurement())
    throw QsimError("cannot form the unitary of a circuit with measurements");
  const std::size_t dim = std::size_t{1} << circuit.n_qubits();
  Matrix u(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  for (std::size_t col = 0; col < dim; ++col) {
    const Statevector out =
        run_unitary(Statevector::basis(circuit.n_qubits(), col), circuit);
    for (std::size_t row = 0; row < dim; ++row)
      u(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) = out[row];
  }
  return u;
}

}  // namespace qlgca::qsim
