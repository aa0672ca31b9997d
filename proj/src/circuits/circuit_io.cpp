#include "qlgca/circuits/circuit_io.hpp"

#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "qlgca/circuits/collision_spec.hpp"

namespace qlgca::circuits {

namespace {

using qsim::Complex;
using qsim::Gate;
using qsim::GateKind;
using qsim::Polarity;

std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

[[noreturn]] void fail(std::size_t line, const std::string& what) {
  throw CircuitsError("line " + std::to_string(line) + ": " + what);
}

Qubit parse_qubit(std::size_t line, const std::string& tok) {
  std::size_t used = 0;
  unsigned long value = 0;
  try {
    value = std::stoul(tok, &used);
  } catch (const std::exception&) {
    fail(line, "expected a qubit index, got '" + tok + "'");
  }
  if (used != tok.size() || tok[0] == '-') fail(line, "expected a qubit index, got '" + tok + "'");
  return static_cast<Qubit>(value);
}

Control parse_control(std::size_t line, const std::string& tok) {
  const auto open_paren = tok.find('(');
  if (open_paren == std::string::npos || tok.size() != open_paren + 3 || tok.back() != ')' ||
      (tok[open_paren + 1] != '0' && tok[open_paren + 1] != '1'))
    fail(line, "control must look like q(0) or q(1), got '" + tok + "'");
  return {parse_qubit(line, tok.substr(0, open_paren)),
          tok[open_paren + 1] == '1' ? Polarity::kFilled : Polarity::kOpen};
}

Complex parse_entry(std::size_t line, const std::string& tok) {
  const auto colon = tok.find(':');
  if (colon == std::string::npos) fail(line, "matrix entry must be re:im, got '" + tok + "'");
  try {
    std::size_t u1 = 0;
    std::size_t u2 = 0;
    const std::string re = tok.substr(0, colon);
    const std::string im = tok.substr(colon + 1);
    const double r = std::stod(re, &u1);
    const double i = std::stod(im, &u2);
    if (u1 != re.size() || u2 != im.size()) throw std::invalid_argument("trailing");
    return {r, i};
  } catch (const std::exception&) {
    fail(line, "bad matrix entry '" + tok + "'");
  }
}

}  // namespace

void write_circuit(std::ostream& out, const Circuit& circuit, const RegisterLayout* layout) {
  out << "qubits " << circuit.n_qubits() << '\n';
  if (layout) {
    out << "cell";
    for (Qubit q : layout->cell) out << ' ' << q;
    out << "\nancilla";
    for (Qubit q : layout->ancillas) out << ' ' << q;
    out << '\n';
  }
  for (const auto& e : circuit.elements()) {
    if (const auto* m = std::get_if<qsim::Measurement>(&e)) {
      out << "MEASURE";
      for (Qubit q : m->qubits) out << ' ' << q;
      out << '\n';
      continue;
    }
    const Gate& g = std::get<Gate>(e);
    out << (g.kind() == GateKind::kUnitary ? "U" : qsim::to_string(g.kind()));
    for (Qubit t : g.targets()) out << ' ' << t;
    out << " |";
    for (const Control& c : g.controls())
      out << ' ' << c.qubit << (c.polarity == Polarity::kFilled ? "(1)" : "(0)");
    if (g.kind() == GateKind::kUnitary) {
      out << " @";
      const auto& b = g.block();
      for (Eigen::Index r = 0; r < b.rows(); ++r)
        for (Eigen::Index c = 0; c < b.cols(); ++c)
          out << ' ' << format_double(b(r, c).real()) << ':' << format_double(b(r, c).imag());
    }
    out << '\n';
  }
}

CircuitFile read_circuit(std::istream& in) {
  CircuitFile file;
  bool have_header = false;
  RegisterLayout layout;
  bool have_cell = false;
  bool have_ancilla = false;
  std::string text;
  std::size_t line = 0;
  while (std::getline(in, text)) {
    ++line;
    const auto first = text.find_first_not_of(" \t\r");
    if (first == std::string::npos || text[first] == '#') continue;

    std::string body = text;
    std::string matrix_part;
    if (const auto at = body.find('@'); at != std::string::npos) {
      matrix_part = body.substr(at + 1);
      body = body.substr(0, at);
    }
    std::string control_part;
    if (const auto bar = body.find('|'); bar != std::string::npos) {
      control_part = body.substr(bar + 1);
      body = body.substr(0, bar);
    }
    const auto head = split_ws(body);
    if (head.empty()) fail(line, "missing gate kind");
    const std::string& kind = head[0];

    if (!have_header) {
      if (kind != "qubits" || head.size() != 2) fail(line, "file must start with `qubits N`");
      file.circuit = Circuit(parse_qubit(line, head[1]));
      have_header = true;
      continue;
    }

    std::vector<Qubit> qubits;
    for (std::size_t k = 1; k < head.size(); ++k) qubits.push_back(parse_qubit(line, head[k]));
    std::vector<Control> controls;
    for (const auto& tok : split_ws(control_part)) controls.push_back(parse_control(line, tok));

    try {
      if (kind == "cell") {
        layout.cell = qubits;
        have_cell = true;
      } else if (kind == "ancilla") {
        layout.ancillas = qubits;
        have_ancilla = true;
      } else if (kind == "MEASURE") {
        if (qubits.empty()) fail(line, "MEASURE needs at least one qubit");
        file.circuit.measure(qubits);
      } else if (kind == "X" || kind == "Z" || kind == "H") {
        if (qubits.size() != 1) fail(line, kind + " takes exactly one target");
        const Qubit t = qubits[0];
        file.circuit.add(kind == "X" ? Gate::x(t, controls)
                         : kind == "Z" ? Gate::z(t, controls)
                                       : Gate::h(t, controls));
      } else if (kind == "SWAP") {
        if (qubits.size() != 2) fail(line, "SWAP takes exactly two targets");
        file.circuit.add(Gate::swap(qubits[0], qubits[1], controls));
      } else if (kind == "U") {
        if (qubits.empty() || qubits.size() > 10) fail(line, "U needs 1 to 10 targets");
        const auto entries = split_ws(matrix_part);
        const auto dim = static_cast<Eigen::Index>(std::size_t{1} << qubits.size());
        if (static_cast<Eigen::Index>(entries.size()) != dim * dim)
          fail(line, "U on " + std::to_string(qubits.size()) + " qubits needs " +
                         std::to_string(dim * dim) + " entries");
        qsim::Matrix block(dim, dim);
        for (Eigen::Index k = 0; k < dim * dim; ++k)
          block(k / dim, k % dim) = parse_entry(line, entries[static_cast<std::size_t>(k)]);
        file.circuit.add(Gate::unitary(qubits, block, controls));
      } else {
        fail(line, "unknown gate kind '" + kind + "'");
      }
    } catch (const qsim::QsimError& e) {
      fail(line, e.what());
    }
  }
  if (!have_header) throw CircuitsError("empty circuit file");
  if (have_cell != have_ancilla) throw CircuitsError("cell and ancilla lines must appear together");
  if (have_cell) file.layout = layout;
  return file;
}

}  // namespace qlgca::circuits
