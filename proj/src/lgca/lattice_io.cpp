#include "qlgca/lgca/lattice_io.hpp"

#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

namespace qlgca::lgca {

namespace {

struct LineReader {
  std::istream& in;
  std::size_t line_no = 0;

  bool next(std::string& line) {
    while (std::getline(in, line)) {
      ++line_no;
      const auto first = line.find_first_not_of(" \t\r");
      if (first == std::string::npos || line[first] == '#') continue;
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(std::size_t column, const std::string& what) const {
    throw LgcaError("line " + std::to_string(line_no) + ", column " +
                    std::to_string(column) + ": " + what);
  }
};

struct Token {
  std::string text;
  std::size_t column;
};

std::vector<Token> tokenize(const std::string& line) {
  std::vector<Token> out;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t' || line[pos] == '\r'))
      ++pos;
    if (pos >= line.size()) break;
    const std::size_t start = pos;
    while (pos < line.size() && line[pos] != ' ' && line[pos] != '\t' && line[pos] != '\r')
      ++pos;
    out.push_back({line.substr(start, pos - start), start + 1});
  }
  return out;
}

std::size_t parse_count(const LineReader& r, const Token& t) {
  std::size_t used = 0;
  unsigned long long value = 0;
  try {
    value = std::stoull(t.text, &used);
  } catch (const std::exception&) {
    r.fail(t.column, "expected a non-negative integer, got '" + t.text + "'");
  }
  if (used != t.text.size() || t.text[0] == '-')
    r.fail(t.column, "expected a non-negative integer, got '" + t.text + "'");
  return static_cast<std::size_t>(value);
}

std::vector<Cell> read_row(LineReader& r, std::size_t n, unsigned v) {
  std::string line;
  if (!r.next(line)) r.fail(0, "unexpected end of file, expected a row of cells");
  const auto tokens = tokenize(line);
  if (tokens.size() != n)
    r.fail(1, "expected " + std::to_string(n) + " cells, found " +
                  std::to_string(tokens.size()));
  std::vector<Cell> row;
  for (const Token& t : tokens) {
    const std::size_t value = parse_count(r, t);
    if (value >> v)
      r.fail(t.column, "cell value " + t.text + " needs more than " +
                           std::to_string(v) + " bits");
    row.push_back(static_cast<Cell>(value));
  }
  return row;
}

}  // namespace

AnyLattice read_lattice(std::istream& in) {
  LineReader r{in};
  std::string line;
  if (!r.next(line)) r.fail(0, "empty lattice file");
  const auto header = tokenize(line);
  if (header.size() < 2 || header.size() > 3)
    r.fail(1, "header must be `model N [M]`");
  Model model;
  try {
    model = parse_model(header[0].text);
  } catch (const LgcaError& e) {
    r.fail(header[0].column, e.what());
  }
  const std::size_t n = parse_count(r, header[1]);
  if (n == 0) r.fail(header[1].column, "N must be positive");
  const unsigned v = velocity_count(model);

  if (model == Model::kFHP) {
    if (header.size() != 3) r.fail(1, "fhp header needs `fhp N M`");
    const std::size_t m = parse_count(r, header[2]);
    if (m == 0 || m % 2 != 0) r.fail(header[2].column, "M must be a positive even row count");
    LatticeTri lattice(n, m);
    for (std::size_t j = 0; j < m; ++j) {
      const auto row = read_row(r, n, v);
      for (std::size_t i = 0; i < n; ++i) lattice.at(i, j) = row[i];
    }
    if (r.next(line)) r.fail(1, "unexpected trailing data");
    return lattice;
  }
  if (header.size() == 3 && parse_count(r, header[2]) != 1)
    r.fail(header[2].column, "1D models take M = 1");
  Lattice1D lattice{model, read_row(r, n, v)};
  if (r.next(line)) r.fail(1, "unexpected trailing data");
  return lattice;
}

void write_lattice(std::ostream& out, const Lattice1D& lattice) {
  out << to_string(lattice.model) << ' ' << lattice.cells.size() << '\n';
  for (std::size_t x = 0; x < lattice.cells.size(); ++x)
    out << (x ? " " : "") << lattice.cells[x];
  out << '\n';
}

void write_lattice(std::ostream& out, const LatticeTri& lattice) {
  out << "fhp " << lattice.width << ' ' << lattice.height << '\n';
  for (std::size_t j = 0; j < lattice.height; ++j) {
    for (std::size_t i = 0; i < lattice.width; ++i)
      out << (i ? " " : "") << lattice.at(i, j);
    out << '\n';
  }
}

void write_density_csv(std::ostream& out,
                       const std::vector<std::vector<double>>& profiles) {
  out << "step,x,density\n";
  char buf[64];
  for (std::size_t t = 0; t < profiles.size(); ++t)
    for (std::size_t x = 0; x < profiles[t].size(); ++x) {
      std::snprintf(buf, sizeof buf, "%.17g", profiles[t][x]);
      out << t << ',' << x << ',' << buf << '\n';
    }
}

void write_quantities_csv(std::ostream& out,
                          const std::vector<QuantityRecord>& series) {
  out << "step,mass,px,py\n";
  char px[64];
  char py[64];
  for (std::size_t t = 0; t < series.size(); ++t) {
    std::snprintf(px, sizeof px, "%.17g", series[t].px());
    std::snprintf(py, sizeof py, "%.17g", series[t].py());
    out << t << ',' << series[t].mass << ',' << px << ',' << py << '\n';
  }
}

}  // namespace qlgca::lgca
