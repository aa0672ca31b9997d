// One line per acceptance criterion; exit status 1 when any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "d1q3_evolution_table.hpp"
#include "qlgca/circuits/basis_decomposition.hpp"
#include "qlgca/circuits/collision_circuits.hpp"
#include "qlgca/circuits/collision_spec.hpp"
#include "qlgca/circuits/collision_unitaries.hpp"
#include "qlgca/circuits/verification.hpp"
#include "qlgca/lgca/bit_source.hpp"
#include "qlgca/lgca/lattice.hpp"
#include "qlgca/pauli/decomposition.hpp"
#include "qlgca/pauli/evolution.hpp"
#include "qlgca/pauli/invariants.hpp"
#include "qlgca/qpe/phase_operator.hpp"
#include "qlgca/qpe/qpe.hpp"
#include "qlgca/qpe/spectrum.hpp"
#include "qlgca/streaming/d1q2_sublinear.hpp"
#include "qlgca/streaming/nogo.hpp"

using namespace qlgca;
using Clock = std::chrono::steady_clock;
using qsim::Matrix;

namespace {

constexpr double kCommutatorTol = 1e-10;
constexpr double kProbabilityTol = 1e-10;
constexpr double kPauliFormTol = 1e-12;
constexpr std::size_t kGateBudget = 2000;
constexpr double kRowTol = 1e-12;
constexpr double kKernelTol = 1e-10;
constexpr double kSigmaBound = 4.0;
constexpr double kResidualFloor = 0.1;
constexpr std::size_t kRestarts = 1000;
constexpr int kFhpSteps = 1000;

constexpr double kD1Q3RankSeconds = 1.0;
constexpr double kFhpRankSeconds = 600.0;
constexpr double kCircuitSeconds = 1.0;
constexpr double kD1Q2Seconds = 30.0;

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " MISMATCH(" << what << ")";
    }
  }
};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string num(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

void criterion_1(Outcome& o) {
  auto t0 = Clock::now();
  const auto d = pauli::count_invariants(circuits::d1q3_collision_matrix(), 3);
  const double td = seconds_since(t0);
  o.detail << "d1q3 rank=" << d.rank << " inv=" << d.invariant_count << " (" << num(td) << "s)";
  o.require(d.rank == 14 && d.invariant_count == 50, "d1q3 expected 14/50");
  o.require(td < kD1Q3RankSeconds, "d1q3 runtime");
  const std::vector<std::tuple<std::string, std::size_t, std::size_t>> table{
      {"B3", 126, 3970}, {"B2,4", 488, 3608}, {"B2,3,4", 590, 3506}};
  for (const auto& [sel, rank, inv] : table) {
    t0 = Clock::now();
    const auto r = pauli::count_invariants(
        circuits::fhp_unitary_collision(circuits::parse_fhp_selection(sel)), 6);
    const double t = seconds_since(t0);
    o.detail << "; " << sel << " rank=" << r.rank << " inv=" << r.invariant_count << " ("
             << num(t) << "s)";
    o.require(r.rank == rank && r.invariant_count == inv,
              sel + " expected " + std::to_string(rank) + "/" + std::to_string(inv));
    o.require(t < kFhpRankSeconds, sel + " runtime");
  }
}

void criterion_2(Outcome& o) {
  auto printed = testdata::parse_evolution_table();
  const std::size_t printed_rows = printed.size();
  const auto completed = testdata::complete_missing_rows(printed);
  const auto table = pauli::evolution_table(circuits::d1q3_collision_matrix(), 3);
  std::size_t matched = 0;
  std::size_t matched_completed = 0;
  bool coefficients_ok = true;
  for (const auto& row : table) {
    testdata::TermMap ours;
    for (const auto& [p, c] : row.terms) {
      coefficients_ok &= c == pauli::Rational(1) || c == pauli::Rational(-1) ||
                         c == pauli::Rational(1, 2) || c == pauli::Rational(-1, 2);
      ours[p.to_string()] = c;
    }
    const auto it = printed.find(row.input.to_string());
    if (it != printed.end() && it->second == ours) {
      ++matched;
      if (std::find(completed.begin(), completed.end(), it->first) != completed.end()) ++matched_completed;
    }
  }
  o.detail << matched << "/64 rows exact (" << printed_rows << " distinct printed rows, "
           << matched_completed << "/" << completed.size() << " completed by symmetry:";
  for (const auto& s : completed) o.detail << ' ' << s;
  o.detail << ")";
  o.require(printed.size() == 64 && table.size() == 64 && matched == 64, "rows");
  o.require(coefficients_ok, "coefficients outside {0, +-1, +-1/2}");
}

void criterion_3(Outcome& o) {
  const Matrix c3 = circuits::d1q3_collision_matrix();
  double worst = 0.0;
  for (const auto& obs : {pauli::pauli_sum({{1, "IIZ"}, {2, "IZI"}, {1, "ZII"}}),
                          pauli::pauli_sum({{1, "IIZ"}, {-1, "ZII"}})})
    worst = std::max(worst, pauli::commutes(c3, obs).residual);
  const double h = std::sqrt(3.0) / 2.0;
  const std::vector<Matrix> fhp_obs{
      pauli::pauli_sum({{1, "IIIIIZ"}, {1, "IIIIZI"}, {1, "IIIZII"}, {1, "IIZIII"}, {1, "IZIIII"}, {1, "ZIIIII"}}),
      pauli::pauli_sum({{1, "IIIIIZ"}, {-1, "IIZIII"}, {0.5, "IIIIZI"}, {0.5, "ZIIIII"}, {-0.5, "IIIZII"}, {-0.5, "IZIIII"}}),
      pauli::pauli_sum({{h, "IIIIZI"}, {h, "IIIZII"}, {-h, "IZIIII"}, {-h, "ZIIIII"}})};
  for (const char* sel : {"B3", "B2,4", "B2,3,4"}) {
    const Matrix c = circuits::fhp_unitary_collision(circuits::parse_fhp_selection(sel));
    for (const auto& obs : fhp_obs) worst = std::max(worst, pauli::commutes(c, obs).residual);
  }
  o.detail << "max commutator residual " << num(worst);
  o.require(worst <= kCommutatorTol, "commutator");

  const auto printed = testdata::parse_evolution_table();
  const auto report = pauli::count_invariants(c3, 3);
  std::set<std::string> fixed;
  for (const auto& p : report.fixed_basis_strings) fixed.insert(p.to_string());
  std::size_t confirmed = 0;
  for (const char* s : {"IZZ", "ZIZ", "ZZI", "XXX", "XYY", "YXY", "YYX"}) {
    const auto& row = printed.at(s);
    const bool printed_fixed = row.size() == 1 && row.begin()->first == s &&
                               row.begin()->second == pauli::Rational(1);
    if (printed_fixed && fixed.contains(s)) ++confirmed;
  }
  o.detail << "; fixed strings confirmed " << confirmed << "/7";
  o.require(confirmed == 7, "fixed strings");
}

void criterion_4(Outcome& o) {
  auto t0 = Clock::now();
  const auto fhp = circuits::verify_collision_circuit(
      circuits::build_fhp_b234_circuit(), circuits::fhp_spec(circuits::parse_fhp_selection("all")));
  const double tf = seconds_since(t0);
  const auto& p = fhp.probabilities;
  bool ok = fhp.pass;
  for (int s = 0; s < 64; ++s) {
    if (s == 9 || s == 18 || s == 36 || s == 27 || s == 45 || s == 54 || s == 21 || s == 42) continue;
    ok &= std::abs(p(s, s) - 1.0) <= kProbabilityTol;
  }
  ok &= std::abs(p(21, 42) - 1.0) <= kProbabilityTol && std::abs(p(42, 21) - 1.0) <= kProbabilityTol;
  for (const auto& orbit : {std::vector<int>{9, 18, 36}, std::vector<int>{27, 45, 54}})
    for (int a : orbit)
      for (int b : orbit) ok &= std::abs(p(a, b) - (a == b ? 0.0 : 0.5)) <= kProbabilityTol;
  o.detail << "fhp-b234 max TV " << num(fhp.max_total_variation) << " (" << num(tf) << "s)";
  o.require(ok, "fhp-b234 matrix");
  o.require(tf < kCircuitSeconds, "fhp-b234 runtime");

  t0 = Clock::now();
  const auto d = circuits::verify_collision_circuit(circuits::build_d1q3_qpe_collision_circuit(),
                                                    circuits::d1q3_spec());
  const double td = seconds_since(t0);
  bool perm = d.pass;
  for (int s = 0; s < 8; ++s) {
    const int target = s == 2 ? 5 : s == 5 ? 2 : s;
    perm &= std::abs(d.probabilities(s, target) - 1.0) <= kProbabilityTol;
  }
  o.detail << "; d1q3-qpe 8/8 " << (perm ? "ok" : "bad") << " (" << num(td) << "s)";
  o.require(perm, "d1q3-qpe permutation");
  o.require(td < kCircuitSeconds, "d1q3-qpe runtime");
}

void criterion_5(Outcome& o) {
  const double diff =
      (circuits::d1q3_pauli_collision() - circuits::d1q3_collision_matrix()).cwiseAbs().maxCoeff();
  o.detail << "max entry difference " << num(diff);
  o.require(diff <= kPauliFormTol, "Pauli form");
}

void criterion_6(Outcome& o) {
  const auto lowered = circuits::decompose_to_basis(circuits::build_fhp_b234_circuit().circuit);
  o.detail << lowered.report.elementary_gate_count << " elementary gates, " << lowered.report.work_qubits
           << " work qubits, deviation " << num(lowered.report.max_deviation);
  o.require(lowered.report.equivalent, "equivalence");
  o.require(lowered.report.elementary_gate_count < kGateBudget, "gate budget");
}

std::vector<double> fejer(double phi, unsigned n) {
  const double big = std::ldexp(1.0, static_cast<int>(n));
  std::vector<double> p(static_cast<std::size_t>(big));
  for (std::size_t y = 0; y < p.size(); ++y) {
    const double d = phi - static_cast<double>(y) / big;
    const double s = std::sin(M_PI * d);
    p[y] = std::abs(s) < 1e-15 ? 1.0 : std::pow(std::sin(M_PI * big * d) / (big * s), 2);
  }
  return p;
}

void criterion_7(Outcome& o) {
  double worst_pair = 0.0;
  for (auto conv : {qpe::PhaseConvention::kPaper, qpe::PhaseConvention::kDyadic}) {
    const auto d = qpe::spectrum_report(qpe::phase_operator(qpe::Quantity::kMass, lgca::Model::kD1Q3, conv), 3);
    for (auto [a, b] : {std::pair{1, 4}, std::pair{2, 5}, std::pair{3, 6}})
      worst_pair = std::max(worst_pair, qpe::row_distance(d, a, b));
    const auto f = qpe::spectrum_report(qpe::phase_operator(qpe::Quantity::kMass, lgca::Model::kFHP, conv), 3);
    for (std::size_t i = 1; i < 6; ++i) worst_pair = std::max(worst_pair, qpe::row_distance(f, 1, std::size_t{1} << i));
  }
  o.detail << "equal-quantity max TV " << num(worst_pair);
  o.require(worst_pair <= kRowTol, "equal-quantity rows");

  const auto op = qpe::phase_operator(qpe::Quantity::kMass, lgca::Model::kD1Q3, qpe::PhaseConvention::kDyadic);
  const auto report = qpe::spectrum_report(op, 3);
  std::set<std::size_t> modes;
  bool point_masses = true;
  for (const auto& row : report.rows) {
    const auto it = std::max_element(row.begin(), row.end());
    point_masses &= std::abs(*it - 1.0) <= kRowTol;
    modes.insert(static_cast<std::size_t>(it - row.begin()));
  }
  o.detail << "; dyadic distinct point masses " << modes.size();
  o.require(point_masses && modes.size() == 5, "five point masses");

  double worst_kernel = 0.0;
  for (auto model : {lgca::Model::kD1Q3, lgca::Model::kFHP})
    for (auto conv : {qpe::PhaseConvention::kPaper, qpe::PhaseConvention::kDyadic}) {
      const auto u = qpe::phase_operator(qpe::Quantity::kMass, model, conv);
      for (unsigned n = 1; n <= 5; ++n)
        for (std::size_t s = 0; s < u.quantity.size(); ++s) {
          const auto dist = qpe::qpe_distribution(u, s, n).dense();
          const auto ref = fejer(u.phase_fraction(s, n), n);
          for (std::size_t y = 0; y < dist.size(); ++y) worst_kernel = std::max(worst_kernel, std::abs(dist[y] - ref[y]));
        }
    }
  o.detail << "; circuit vs kernel " << num(worst_kernel);
  o.require(worst_kernel <= kKernelTol, "analytic kernel");
}

void criterion_8(Outcome& o) {
  lgca::Lattice1D field{lgca::Model::kD1Q2, std::vector<lgca::Cell>(64, 0)};
  for (std::size_t x = 24; x < 40; ++x) field.cells[x] = 3;
  const auto t0 = Clock::now();
  const auto run = streaming::run_d1q2(field, 24, 1000, 1);
  const double t = seconds_since(t0);
  double deviation = 0.0;
  double worst_z = 0.0;
  bool within = true;
  for (std::size_t s = 0; s <= 24; ++s)
    for (std::size_t x = 0; x < 64; ++x) {
      deviation = std::max(deviation, std::abs(run.quantum_density[s][x] - run.classical_density[s][x]));
      const double gap = std::abs(run.sampled_density[s][x] - run.classical_density[s][x]);
      const double sigma = run.sampled_sigma[s][x];
      within &= gap <= kSigmaBound * sigma;
      if (sigma > 0) worst_z = std::max(worst_z, gap / sigma);
    }
  o.detail << "exact deviation " << num(deviation) << ", worst sampled z " << num(worst_z) << " ("
           << num(t) << "s)";
  o.require(deviation == 0.0, "exact density");
  o.require(within, "4 sigma");
  o.require(t < kD1Q2Seconds, "runtime");
}

void criterion_9(Outcome& o) {
  const auto cert = streaming::check_infeasible(streaming::nogo_constraint_system(), kRestarts, 1);
  const bool chain_ok = cert.chain && cert.chain->derived == "A+B = 0" && cert.chain->conflicts == "A+B = 1";
  o.detail << "chain " << (cert.chain ? cert.chain->derived + " vs " + cert.chain->conflicts : "none")
           << ", min residual " << num(cert.min_residual) << ", best of " << cert.restarts
           << " restarts " << num(cert.restart_min_residual);
  o.require(chain_ok, "chain");
  o.require(cert.infeasible && cert.restart_min_residual >= kResidualFloor &&
                cert.min_residual >= kResidualFloor,
            "residual");
}

void criterion_10(Outcome& o) {
  std::mt19937_64 rng(10);
  lgca::LatticeTri l(32, 32);
  for (auto& c : l.cells) c = static_cast<lgca::Cell>(rng() & 63U);
  const auto start = lgca::totals(l);
  lgca::SeededBitSource bits(11);
  int constant_steps = 0;
  for (int t = 0; t < kFhpSteps; ++t) {
    l = lgca::fhp_step(l, bits);
    if (lgca::totals(l) == start) ++constant_steps;
  }
  o.detail << constant_steps << "/" << kFhpSteps << " steps with identical mass " << start.mass
           << ", px*2 " << start.px_half << ", py*2/sqrt3 " << start.py_sqrt3_half;
  o.require(constant_steps == kFhpSteps, "conservation");
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria{
      {"invariant counts", criterion_1},
      {"D1Q3 Pauli evolution table", criterion_2},
      {"conservation and fixed strings", criterion_3},
      {"collision circuit verification", criterion_4},
      {"Pauli-form collision identity", criterion_5},
      {"gate-count proxy", criterion_6},
      {"QPE spectra", criterion_7},
      {"D1Q2 sublinear streaming", criterion_8},
      {"no-go certificate", criterion_9},
      {"classical FHP conservation", criterion_10},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      criteria[i].second(o);
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail << " EXCEPTION " << e.what();
    }
    failures += o.pass ? 0 : 1;
    std::printf("%s  %2zu  %-32s %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                o.detail.str().c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
