#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qlgca/circuits/circuit_io.hpp"
#include "qlgca/circuits/collision_circuits.hpp"
#include "qlgca/circuits/collision_spec.hpp"
#include "qlgca/circuits/collision_unitaries.hpp"
#include "qlgca/circuits/verification.hpp"
#include "qlgca/lgca/bit_source.hpp"
#include "qlgca/lgca/lattice.hpp"
#include "qlgca/lgca/lattice_io.hpp"
#include "qlgca/pauli/evolution.hpp"
#include "qlgca/pauli/invariants.hpp"
#include "qlgca/qpe/phase_operator.hpp"
#include "qlgca/qpe/spectrum.hpp"
#include "qlgca/streaming/d1q2_sublinear.hpp"
#include "qlgca/streaming/nogo.hpp"
#include "qlgca/streaming/shift.hpp"

namespace {

using json = nlohmann::json;
using namespace qlgca;

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitInput = 2;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string model = "d1q3";
  std::string collisions = "all";
  unsigned steps = 1;
  unsigned d1q2_steps = 24;
  std::uint64_t shots = 0;
  std::uint64_t seed = 1;
  unsigned ancillas = qpe::kDefaultAncillas;
  std::string convention = "paper";
  std::string out;
  std::string format = "json";

  // subcommand specific
  std::string lattice_file;
  std::string circuit_name;
  std::string circuit_file;
  std::string quantity = "mass";
  std::string histogram_file;
  std::string table_file;
  std::string states;
  std::string init = "block";
  unsigned cells = 64;
  unsigned width = 32;
  unsigned height = 32;
  std::size_t restarts = 1000;
  bool relaxed = false;
};

/// Writes to `path`, or stdout when empty.
template <typename F>
void emit(const std::string& path, F&& body) {
  if (path.empty()) {
    body(std::cout);
    std::cout.flush();
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw InputError("cannot open " + path + " for writing");
  body(f);
}

std::string fmt(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

lgca::AnyLattice load_lattice(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw InputError("cannot open lattice file " + path);
  return lgca::read_lattice(f);
}

lgca::LatticeTri random_fhp(unsigned width, unsigned height, std::uint64_t seed) {
  lgca::LatticeTri lattice(width, height);
  std::mt19937_64 rng(seed);
  for (auto& c : lattice.cells) c = static_cast<lgca::Cell>(rng() & 63U);
  return lattice;
}

std::vector<std::size_t> parse_states(const std::string& text, std::size_t dim) {
  std::vector<std::size_t> out;
  if (text.empty()) {
    out.resize(dim);
    std::iota(out.begin(), out.end(), std::size_t{0});
    return out;
  }
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    std::size_t used = 0;
    unsigned long long s = 0;
    try {
      s = std::stoull(tok, &used);
    } catch (const std::exception&) {
      throw InputError("bad state '" + tok + "'");
    }
    if (used != tok.size() || s >= dim) throw InputError("bad state '" + tok + "'");
    out.push_back(static_cast<std::size_t>(s));
  }
  return out;
}

int cmd_simulate(const RunConfig& cfg) {
  lgca::AnyLattice lattice;
  if (!cfg.lattice_file.empty()) {
    lattice = load_lattice(cfg.lattice_file);
  } else {
    const lgca::Model model = lgca::parse_model(cfg.model);
    if (model == lgca::Model::kFHP)
      lattice = random_fhp(cfg.width, cfg.height, cfg.seed);
    else if (model == lgca::Model::kD1Q3)
      lattice = lgca::Lattice1D{model, {0, 5, 2, 1, 6, 2}};
    else
      throw InputError("d1q2 has a dedicated subcommand");
  }

  std::ostringstream trajectory;
  std::vector<lgca::QuantityRecord> series;
  lgca::SeededBitSource bits(cfg.seed);
  // The D1Q3 rest particle carries mass 2.
  const auto mass_totals = [](const auto& l) {
    if constexpr (std::is_same_v<std::decay_t<decltype(l)>, lgca::Lattice1D>)
      return lgca::totals(l, l.model == lgca::Model::kD1Q3 ? lgca::MassConvention::kRestWeighted
                                                            : lgca::MassConvention::kBitCount);
    else
      return lgca::totals(l);
  };
  for (unsigned t = 0; t <= cfg.steps; ++t) {
    if (t > 0) {
      if (auto* l = std::get_if<lgca::Lattice1D>(&lattice)) {
        *l = l->model == lgca::Model::kD1Q3 ? lgca::d1q3_step(*l) : lgca::d1q2_stream(*l);
      } else {
        auto& tri = std::get<lgca::LatticeTri>(lattice);
        tri = lgca::fhp_step(tri, bits);
      }
    }
    trajectory << "# step " << t << '\n';
    std::visit([&](const auto& l) { lgca::write_lattice(trajectory, l); }, lattice);
    series.push_back(std::visit(mass_totals, lattice));
  }

  if (cfg.out.empty()) {
    std::cout << trajectory.str();
    lgca::write_quantities_csv(std::cout, series);
    return kExitOk;
  }
  std::filesystem::create_directories(cfg.out);
  emit(cfg.out + "/trajectory.txt", [&](std::ostream& o) { o << trajectory.str(); });
  emit(cfg.out + "/quantities.csv",
       [&](std::ostream& o) { lgca::write_quantities_csv(o, series); });
  return kExitOk;
}

circuits::CollisionCircuit named_circuit(const std::string& name) {
  if (name == "d1q3-qpe") return circuits::build_d1q3_qpe_collision_circuit();
  if (name == "fhp-b234") return circuits::build_fhp_b234_circuit();
  throw InputError("unknown circuit '" + name + "' (expected d1q3-qpe or fhp-b234)");
}

circuits::CollisionSpec named_spec(const std::string& name) {
  if (name == "d1q3-qpe") return circuits::d1q3_spec();
  return circuits::fhp_spec(circuits::parse_fhp_selection("all"));
}

int cmd_circuit(const RunConfig& cfg) {
  const auto built = named_circuit(cfg.circuit_name);
  emit(cfg.out, [&](std::ostream& o) { circuits::write_circuit(o, built.circuit, &built.layout); });
  return kExitOk;
}

int cmd_verify(const RunConfig& cfg) {
  circuits::CollisionCircuit circuit = named_circuit(cfg.circuit_name);
  if (!cfg.circuit_file.empty()) {
    std::ifstream f(cfg.circuit_file);
    if (!f) throw InputError("cannot open circuit file " + cfg.circuit_file);
    auto file = circuits::read_circuit(f);
    if (file.layout) circuit.layout = *file.layout;
    circuit.circuit = std::move(file.circuit);
  }
  const auto report = circuits::verify_collision_circuit(circuit, named_spec(cfg.circuit_name));
  emit(cfg.out, [&](std::ostream& o) { circuits::write_probability_csv(o, report.probabilities); });
  if (!report.pass) {
    std::cerr << "verification failed: first failing row " << *report.first_failing_row
              << " (total variation " << fmt(report.row_total_variation[*report.first_failing_row])
              << ")\n";
    return kExitFailed;
  }
  std::cerr << "verification passed: max total variation " << fmt(report.max_total_variation)
            << '\n';
  return kExitOk;
}

int cmd_invariants(const RunConfig& cfg) {
  const lgca::Model model = lgca::parse_model(cfg.model);
  circuits::CollisionSpec spec;
  std::string collisions = cfg.collisions;
  if (cfg.collisions == "identity") {
    spec = circuits::CollisionSpec::identity(lgca::velocity_count(model));
  } else if (model == lgca::Model::kD1Q3) {
    spec = circuits::d1q3_spec();
    collisions = "all";
  } else if (model == lgca::Model::kFHP) {
    const auto selection = circuits::parse_fhp_selection(cfg.collisions);
    spec = circuits::fhp_spec(selection);
    collisions = circuits::to_string(selection);
  } else {
    throw InputError("d1q2 is collisionless; use --collisions identity");
  }
  const qsim::Matrix c = circuits::spec_unitary(spec);
  const auto report = pauli::count_invariants(c, spec.v);

  if (!cfg.table_file.empty())
    emit(cfg.table_file, [&](std::ostream& o) {
      pauli::write_evolution_table_csv(o, pauli::evolution_table(c, spec.v));
    });

  if (cfg.format == "csv") {
    emit(cfg.out, [&](std::ostream& o) {
      o << "model,collisions,v,rank,invariant_count\n"
        << cfg.model << ',' << collisions << ',' << spec.v << ',' << report.rank << ','
        << report.invariant_count << '\n';
    });
    return kExitOk;
  }
  json j;
  j["model"] = cfg.model;
  j["collisions"] = collisions;
  j["v"] = spec.v;
  j["rank"] = report.rank;
  j["invariant_count"] = report.invariant_count;
  std::vector<std::string> fixed;
  for (const auto& p : report.fixed_basis_strings) fixed.push_back(p.to_string());
  j["fixed_basis_strings"] = fixed;
  emit(cfg.out, [&](std::ostream& o) { o << j.dump(2) << '\n'; });
  return kExitOk;
}

int cmd_qpe(const RunConfig& cfg) {
  const lgca::Model model = lgca::parse_model(cfg.model);
  const auto quantity = qpe::parse_quantity(cfg.quantity);
  const auto convention = qpe::parse_convention(cfg.convention);
  if (cfg.ancillas == 0 || cfg.ancillas > 10) throw InputError("--ancillas must be in 1..10");
  const auto op = qpe::phase_operator(quantity, model, convention);
  const auto report = qpe::spectrum_report(op, cfg.ancillas);
  emit(cfg.out, [&](std::ostream& o) { qpe::write_spectrum_csv(o, report); });
  if (!cfg.histogram_file.empty()) {
    const auto states = parse_states(cfg.states, report.rows.size());
    emit(cfg.histogram_file,
         [&](std::ostream& o) { qpe::write_histogram_csv(o, report, op.quantity, states); });
  }
  return kExitOk;
}

int cmd_nogo(const RunConfig& cfg) {
  auto system = streaming::nogo_constraint_system();
  if (cfg.relaxed) system = streaming::relaxed_system(system);
  const auto cert = streaming::check_infeasible(system, cfg.restarts, cfg.seed);

  json j;
  j["infeasible"] = cert.infeasible;
  json equations = json::array();
  for (const auto& e : system.equations) equations.push_back(e.text());
  j["equations"] = equations;
  j["provenance"] = system.provenance;
  if (cert.chain) {
    json steps = json::array();
    for (const auto& [m, idx] : cert.chain->steps)
      steps.push_back({{"multiplier", m}, {"equation", system.equations[idx].text()}});
    j["contradiction_chain"] = {{"steps", steps},
                                {"derived", cert.chain->derived},
                                {"conflicts_with", cert.chain->conflicts}};
  } else {
    j["contradiction_chain"] = nullptr;
  }
  j["min_residual"] = cert.min_residual;
  j["restart_min_residual"] = cert.restart_min_residual;
  j["restarts"] = cert.restarts;
  j["minimizer"] = {{"A", cert.minimizer[0]},  {"B", cert.minimizer[1]},
                    {"C", cert.minimizer[2]},  {"D", cert.minimizer[3]},
                    {"E", {cert.minimizer[4], cert.minimizer[5]}},
                    {"F", {cert.minimizer[6], cert.minimizer[7]}}};
  emit(cfg.out, [&](std::ostream& o) { o << j.dump(2) << '\n'; });
  return kExitOk;
}

lgca::Lattice1D d1q2_field(const RunConfig& cfg) {
  if (!cfg.lattice_file.empty()) {
    auto any = load_lattice(cfg.lattice_file);
    auto* l = std::get_if<lgca::Lattice1D>(&any);
    if (!l || l->model != lgca::Model::kD1Q2) throw InputError("d1q2 needs a d1q2 lattice file");
    return *l;
  }
  if (cfg.cells < 2 || cfg.cells > 1024 || (cfg.cells & (cfg.cells - 1)) != 0)
    throw InputError("--cells must be a power of two in 2..1024");
  lgca::Lattice1D field{lgca::Model::kD1Q2, std::vector<lgca::Cell>(cfg.cells, 0)};
  if (cfg.init == "delta") {
    field.cells[cfg.cells / 2] = 3;
  } else if (cfg.init == "block") {
    for (unsigned x = 3 * cfg.cells / 8; x < 5 * cfg.cells / 8; ++x) field.cells[x] = 3;
  } else if (cfg.init == "random") {
    std::mt19937_64 rng(cfg.seed);
    for (auto& c : field.cells) c = static_cast<lgca::Cell>(rng() & 3U);
  } else {
    throw InputError("--init must be delta, block or random");
  }
  return field;
}

int cmd_d1q2(const RunConfig& cfg) {
  const auto field = d1q2_field(cfg);
  const std::optional<std::uint64_t> shots =
      cfg.shots ? std::optional<std::uint64_t>(cfg.shots) : std::nullopt;
  const auto run = streaming::run_d1q2(field, cfg.d1q2_steps, shots, cfg.seed);

  bool exact = true;
  for (std::size_t t = 0; t < run.quantum_density.size(); ++t)
    exact = exact && run.quantum_density[t] == run.classical_density[t];

  emit(cfg.out, [&](std::ostream& o) {
    o << "step,x,quantum,statevector,classical" << (shots ? ",sampled,sigma" : "") << '\n';
    for (std::size_t t = 0; t < run.quantum_density.size(); ++t)
      for (std::size_t x = 0; x < run.quantum_density[t].size(); ++x) {
        o << t << ',' << x << ',' << fmt(run.quantum_density[t][x]) << ','
          << fmt(run.statevector_density[t][x]) << ',' << fmt(run.classical_density[t][x]);
        if (shots) o << ',' << fmt(run.sampled_density[t][x]) << ',' << fmt(run.sampled_sigma[t][x]);
        o << '\n';
      }
  });
  if (!exact) {
    std::cerr << "quantum density deviates from the classical reference\n";
    return kExitFailed;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantum lattice-gas cellular automata toolkit"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--seed", cfg.seed, "random seed");
    sub->add_option("--out", cfg.out, "output path (stdout when omitted)");
  };

  auto* simulate = app.add_subcommand("simulate", "classical LGCA reference run");
  common(simulate);
  simulate->add_option("--model", cfg.model, "d1q3 or fhp")->check(CLI::IsMember({"d1q3", "fhp"}));
  simulate->add_option("--lattice", cfg.lattice_file, "lattice file");
  simulate->add_option("--steps", cfg.steps, "time steps");
  simulate->add_option("--width", cfg.width, "random FHP lattice width");
  simulate->add_option("--height", cfg.height, "random FHP lattice height (even)");

  auto* circuit = app.add_subcommand("circuit", "write a built-in collision circuit");
  circuit->add_option("name", cfg.circuit_name, "d1q3-qpe or fhp-b234")->required();
  circuit->add_option("--out", cfg.out, "output path (stdout when omitted)");

  auto* verify = app.add_subcommand("verify", "verify a collision circuit by branch enumeration");
  verify->add_option("name", cfg.circuit_name, "d1q3-qpe or fhp-b234")->required();
  verify->add_option("--circuit", cfg.circuit_file, "circuit file replacing the built-in circuit");
  verify->add_option("--out", cfg.out, "probability matrix CSV (stdout when omitted)");

  auto* invariants = app.add_subcommand("invariants", "count Pauli-basis invariants");
  invariants->add_option("--model", cfg.model, "d1q3, fhp or d1q2");
  invariants->add_option("--collisions", cfg.collisions, "FHP selection (B3, B2,4, B2,3,4, all) or identity");
  invariants->add_option("--format", cfg.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  invariants->add_option("--table", cfg.table_file, "also write the evolution table CSV");
  invariants->add_option("--out", cfg.out, "output path (stdout when omitted)");

  auto* qpe_cmd = app.add_subcommand("qpe", "QPE spectra of a conserved quantity");
  qpe_cmd->add_option("--model", cfg.model, "d1q3 or fhp");
  qpe_cmd->add_option("--quantity", cfg.quantity, "mass, px or py");
  qpe_cmd->add_option("--ancillas", cfg.ancillas, "ancilla qubits");
  qpe_cmd->add_option("--convention", cfg.convention, "paper or dyadic");
  qpe_cmd->add_option("--histogram", cfg.histogram_file, "aggregated histogram CSV");
  qpe_cmd->add_option("--states", cfg.states, "comma-separated states for the histogram");
  qpe_cmd->add_option("--out", cfg.out, "per-state spectrum CSV (stdout when omitted)");

  auto* nogo = app.add_subcommand("nogo", "infeasibility certificate for the sublinear encoding");
  common(nogo);
  nogo->add_option("--restarts", cfg.restarts, "random restarts");
  nogo->add_flag("--relaxed", cfg.relaxed, "set normalization right-hand sides to 0");

  auto* d1q2 = app.add_subcommand("d1q2", "sublinear D1Q2 streaming run");
  common(d1q2);
  d1q2->add_option("--lattice", cfg.lattice_file, "d1q2 lattice file");
  d1q2->add_option("--init", cfg.init, "delta, block or random");
  d1q2->add_option("--cells", cfg.cells, "number of cells (power of two)");
  d1q2->add_option("--steps", cfg.d1q2_steps, "time steps");
  d1q2->add_option("--shots", cfg.shots, "shots per step (0 = exact only)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (*simulate) return cmd_simulate(cfg);
    if (*circuit) return cmd_circuit(cfg);
    if (*verify) return cmd_verify(cfg);
    if (*invariants) return cmd_invariants(cfg);
    if (*qpe_cmd) return cmd_qpe(cfg);
    if (*nogo) return cmd_nogo(cfg);
    if (*d1q2) return cmd_d1q2(cfg);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitInput;
}
