#include "qlgca/streaming/d1q2_sublinear.hpp"

#include <bit>
#include <cmath>

#include "qlgca/qsim/simulator.hpp"

namespace qlgca::streaming {

namespace {

std::vector<Qubit> space_register(unsigned n_space) {
  std::vector<Qubit> s(n_space);
  for (unsigned i = 0; i < n_space; ++i) s[i] = i;
  return s;
}

std::vector<double> occupation_probability(const std::vector<double>& distribution,
                                           unsigned n_space) {
  const SublinearLayout layout{n_space};
  if (distribution.size() != (std::size_t{1} << layout.n_qubits()))
    throw StreamingError("distribution does not match the sublinear layout");
  std::vector<double> p(layout.n_cells(), 0.0);
  const std::uint64_t occ = std::uint64_t{1} << layout.occupation();
  const std::uint64_t space_mask = layout.n_cells() - 1;
  for (std::uint64_t i = 0; i < distribution.size(); ++i)
    if (i & occ) p[i & space_mask] += distribution[i];
  return p;
}

}  // namespace

unsigned space_qubits_for(const lgca::Lattice1D& field) {
  if (field.model != lgca::Model::kD1Q2) throw StreamingError("expected a d1q2 field");
  lgca::validate(field);
  const std::size_t n = field.cells.size();
  if (n < 2 || !std::has_single_bit(n) || n > 1024)
    throw StreamingError("field length must be a power of two between 2 and 1024");
  return static_cast<unsigned>(std::countr_zero(n));
}

Circuit build_d1q2_loading(const lgca::Lattice1D& field) {
  const SublinearLayout layout{space_qubits_for(field)};
  Circuit c(layout.n_qubits());
  for (std::size_t x = 0; x < field.cells.size(); ++x)
    for (unsigned v = 0; v < 2; ++v) {
      if (!((field.cells[x] >> v) & 1U)) continue;
      std::vector<Control> ctrls;
      for (unsigned i = 0; i < layout.n_space; ++i)
        ctrls.push_back({i, ((x >> i) & 1U) ? qsim::Polarity::kFilled : qsim::Polarity::kOpen});
      ctrls.push_back({layout.velocity(), v ? qsim::Polarity::kFilled : qsim::Polarity::kOpen});
      c.add(qsim::Gate::x(layout.occupation(), ctrls));
    }
  return c;
}

Circuit build_d1q2_initialization(const lgca::Lattice1D& field) {
  const SublinearLayout layout{space_qubits_for(field)};
  Circuit c(layout.n_qubits());
  for (Qubit q : space_register(layout.n_space)) c.add(qsim::Gate::h(q));
  c.add(qsim::Gate::h(layout.velocity()));
  return c.append(build_d1q2_loading(field));
}

void append_streaming_step(Circuit& c, unsigned n_space) {
  const SublinearLayout layout{n_space};
  const auto space = space_register(n_space);
  append_increment(c, space, {{layout.velocity(), qsim::Polarity::kOpen}});
  append_decrement(c, space, {{layout.velocity(), qsim::Polarity::kFilled}});
}

Circuit build_d1q2_sublinear_circuit(const lgca::Lattice1D& field, unsigned steps) {
  Circuit c = build_d1q2_initialization(field);
  for (unsigned t = 0; t < steps; ++t) append_streaming_step(c, space_qubits_for(field));
  return c;
}

std::vector<double> exact_distribution(const lgca::Lattice1D& field, unsigned steps) {
  const SublinearLayout layout{space_qubits_for(field)};
  const std::size_t uniform = std::size_t{1} << (layout.n_space + 1);
  std::vector<double> dist(std::size_t{1} << layout.n_qubits(), 0.0);
  for (std::size_t i = 0; i < uniform; ++i) dist[i] = 1.0 / static_cast<double>(uniform);
  Circuit c = build_d1q2_loading(field);
  for (unsigned t = 0; t < steps; ++t) append_streaming_step(c, layout.n_space);
  return qsim::run_permutation(std::move(dist), c);
}

std::vector<double> exact_density(const qsim::Statevector& state, unsigned n_space) {
  return exact_density(state.probabilities(), n_space);
}

std::vector<double> exact_density(const std::vector<double>& distribution, unsigned n_space) {
  auto p = occupation_probability(distribution, n_space);
  const double scale = 2.0 * static_cast<double>(std::size_t{1} << n_space);
  for (double& x : p) x *= scale;
  return p;
}

std::vector<double> estimate_density(const std::map<std::uint64_t, std::uint64_t>& counts,
                                     unsigned n_space, std::uint64_t shots) {
  if (shots == 0) throw StreamingError("shots must be at least 1");
  const SublinearLayout layout{n_space};
  std::vector<double> d(layout.n_cells(), 0.0);
  const std::uint64_t occ = std::uint64_t{1} << layout.occupation();
  for (const auto& [outcome, count] : counts)
    if (outcome & occ) d[outcome & (layout.n_cells() - 1)] += static_cast<double>(count);
  const double scale = 2.0 * static_cast<double>(layout.n_cells()) / static_cast<double>(shots);
  for (double& x : d) x *= scale;
  return d;
}

std::vector<double> density_sigma(const std::vector<double>& distribution, unsigned n_space,
                                  std::uint64_t shots) {
  if (shots == 0) throw StreamingError("shots must be at least 1");
  auto p = occupation_probability(distribution, n_space);
  const double scale = 2.0 * static_cast<double>(std::size_t{1} << n_space);
  for (double& x : p) x = scale * std::sqrt(x * (1.0 - x) / static_cast<double>(shots));
  return p;
}

D1Q2Run run_d1q2(const lgca::Lattice1D& field, unsigned steps,
                 std::optional<std::uint64_t> shots, std::uint64_t seed) {
  const unsigned n = space_qubits_for(field);
  const SublinearLayout layout{n};
  std::vector<Qubit> all(layout.n_qubits());
  for (unsigned q = 0; q < layout.n_qubits(); ++q) all[q] = q;

  Circuit step(layout.n_qubits());
  append_streaming_step(step, n);

  D1Q2Run run;
  auto state = qsim::run_unitary(qsim::Statevector(layout.n_qubits()),
                                 build_d1q2_initialization(field));
  auto dist = exact_distribution(field, 0);
  lgca::Lattice1D classical = field;
  for (unsigned t = 0; t <= steps; ++t) {
    if (t > 0) {
      state = qsim::run_unitary(std::move(state), step);
      dist = qsim::run_permutation(std::move(dist), step);
      classical = lgca::d1q2_stream(classical);
    }
    run.quantum_density.push_back(exact_density(dist, n));
    run.statevector_density.push_back(exact_density(state, n));
    run.classical_density.push_back(lgca::density_profile(classical, 0));
    if (shots) {
      std::map<std::uint64_t, double> support;
      for (std::uint64_t i = 0; i < dist.size(); ++i)
        if (dist[i] > 0.0) support.emplace(i, dist[i]);
      const qsim::OutcomeDistribution outcomes(all, std::move(support));
      const auto counts = qsim::sample_counts(outcomes, *shots, seed + t);
      run.sampled_density.push_back(estimate_density(counts, n, *shots));
      run.sampled_sigma.push_back(density_sigma(dist, n, *shots));
    }
  }
  return run;
}

}  // namespace qlgca::streaming
