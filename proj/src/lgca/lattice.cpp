#include "qlgca/lgca/lattice.hpp"

#include <string>

namespace qlgca::lgca {

LatticeTri::LatticeTri(std::size_t w, std::size_t h)
    : width(w), height(h), cells(w * h, 0) {
  validate(*this);
}

void validate(const Lattice1D& lattice) {
  if (lattice.model == Model::kFHP)
    throw LgcaError("FHP needs a triangular lattice");
  if (lattice.cells.empty()) throw LgcaError("lattice must have at least one cell");
  const unsigned v = velocity_count(lattice.model);
  for (std::size_t x = 0; x < lattice.cells.size(); ++x)
    if (lattice.cells[x] >> v)
      throw LgcaError("cell " + std::to_string(x) + " has value " +
                      std::to_string(lattice.cells[x]) + " >= 2^" + std::to_string(v));
}

void validate(const LatticeTri& lattice) {
  if (lattice.width == 0 || lattice.height == 0)
    throw LgcaError("triangular lattice must be non-empty");
  if (lattice.height % 2 != 0)
    throw LgcaError("triangular lattice needs an even row count for periodic wrap");
  if (lattice.cells.size() != lattice.width * lattice.height)
    throw LgcaError("cell count does not match width * height");
  for (std::size_t k = 0; k < lattice.cells.size(); ++k)
    if (lattice.cells[k] >= 64)
      throw LgcaError("cell (" + std::to_string(k % lattice.width) + "," +
                      std::to_string(k / lattice.width) + ") has value " +
                      std::to_string(lattice.cells[k]) + " >= 64");
}

std::pair<std::size_t, std::size_t> fhp_neighbor(const LatticeTri& lattice,
                                                 std::size_t i, std::size_t j,
                                                 unsigned dir) {
  const auto w = static_cast<long>(lattice.width);
  const auto h = static_cast<long>(lattice.height);
  const bool odd = j % 2 == 1;
  long di = 0;
  long dj = 0;
  switch (dir) {
    case 0: di = 1; break;
    case 1: di = odd ? 1 : 0; dj = 1; break;
    case 2: di = odd ? 0 : -1; dj = 1; break;
    case 3: di = -1; break;
    case 4: di = odd ? 0 : -1; dj = -1; break;
    case 5: di = odd ? 1 : 0; dj = -1; break;
    default: throw LgcaError("FHP direction must be in [0, 6)");
  }
  const long ni = ((static_cast<long>(i) + di) % w + w) % w;
  const long nj = ((static_cast<long>(j) + dj) % h + h) % h;
  return {static_cast<std::size_t>(ni), static_cast<std::size_t>(nj)};
}

Lattice1D d1q3_collide(const Lattice1D& lattice) {
  if (lattice.model != Model::kD1Q3) throw LgcaError("expected a d1q3 lattice");
  validate(lattice);
  Lattice1D out = lattice;
  for (Cell& c : out.cells) c = d1q3_collide(c);
  return out;
}

Lattice1D d1q3_stream(const Lattice1D& lattice) {
  if (lattice.model != Model::kD1Q3) throw LgcaError("expected a d1q3 lattice");
  validate(lattice);
  const std::size_t n = lattice.cells.size();
  Lattice1D out{lattice.model, std::vector<Cell>(n, 0)};
  for (std::size_t x = 0; x < n; ++x) {
    const Cell c = lattice.cells[x];
    if (c & 0b001) out.cells[(x + 1) % n] |= 0b001;
    if (c & 0b010) out.cells[x] |= 0b010;
    if (c & 0b100) out.cells[(x + n - 1) % n] |= 0b100;
  }
  return out;
}

Lattice1D d1q3_step(const Lattice1D& lattice) {
  return d1q3_stream(d1q3_collide(lattice));
}

LatticeTri fhp_collide(const LatticeTri& lattice, BitSource& bits) {
  validate(lattice);
  LatticeTri out = lattice;
  for (std::size_t j = 0; j < out.height; ++j)
    for (std::size_t i = 0; i < out.width; ++i) out.at(i, j) = fhp_collide(out.at(i, j), bits);
  return out;
}

LatticeTri fhp_stream(const LatticeTri& lattice) {
  validate(lattice);
  LatticeTri out(lattice.width, lattice.height);
  for (std::size_t j = 0; j < lattice.height; ++j)
    for (std::size_t i = 0; i < lattice.width; ++i) {
      const Cell c = lattice.at(i, j);
      for (unsigned dir = 0; dir < 6; ++dir) {
        if (!((c >> dir) & 1U)) continue;
        auto [ni, nj] = fhp_neighbor(lattice, i, j, dir);
        out.at(ni, nj) |= Cell{1} << dir;
      }
    }
  return out;
}

LatticeTri fhp_step(const LatticeTri& lattice, BitSource& bits) {
  return fhp_stream(fhp_collide(lattice, bits));
}

Lattice1D d1q2_stream(const Lattice1D& lattice) {
  if (lattice.model != Model::kD1Q2) throw LgcaError("expected a d1q2 lattice");
  validate(lattice);
  const std::size_t n = lattice.cells.size();
  Lattice1D out{lattice.model, std::vector<Cell>(n, 0)};
  for (std::size_t x = 0; x < n; ++x) {
    const Cell c = lattice.cells[x];
    if (c & 0b01) out.cells[(x + 1) % n] |= 0b01;
    if (c & 0b10) out.cells[(x + n - 1) % n] |= 0b10;
  }
  return out;
}

QuantityRecord totals(const Lattice1D& lattice, MassConvention mass) {
  validate(lattice);
  QuantityRecord t;
  for (Cell c : lattice.cells) t += quantities(c, lattice.model, mass);
  return t;
}

QuantityRecord totals(const LatticeTri& lattice) {
  validate(lattice);
  QuantityRecord t;
  for (Cell c : lattice.cells) t += quantities(c, Model::kFHP);
  return t;
}

std::vector<double> density_profile(const Lattice1D& lattice, std::size_t window,
                                    MassConvention mass) {
  validate(lattice);
  const std::size_t n = lattice.cells.size();
  std::vector<double> raw(n);
  for (std::size_t x = 0; x < n; ++x)
    raw[x] = static_cast<double>(quantities(lattice.cells[x], lattice.model, mass).mass);
  if (window == 0) return raw;
  std::vector<double> out(n, 0.0);
  const std::size_t span = 2 * window + 1;
  for (std::size_t x = 0; x < n; ++x) {
    double acc = 0.0;
    for (std::size_t k = 0; k < span; ++k) acc += raw[(x + n * span - window + k) % n];
    out[x] = acc / static_cast<double>(span);
  }
  return out;
}

}  // namespace qlgca::lgca
