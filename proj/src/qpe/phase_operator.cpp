#include "qlgca/qpe/phase_operator.hpp"

#include <bit>
#include <cmath>

namespace qlgca::qpe {

PhaseConvention parse_convention(const std::string& name) {
  if (name == "paper") return PhaseConvention::kPaper;
  if (name == "dyadic") return PhaseConvention::kDyadic;
  throw QpeError("unknown phase convention '" + name + "' (expected paper or dyadic)");
}

std::string to_string(PhaseConvention c) {
  return c == PhaseConvention::kPaper ? "paper" : "dyadic";
}

Quantity parse_quantity(const std::string& name) {
  if (name == "mass") return Quantity::kMass;
  if (name == "px") return Quantity::kMomentumX;
  if (name == "py") return Quantity::kMomentumY;
  throw QpeError("unknown quantity '" + name + "' (expected mass, px or py)");
}

std::string to_string(Quantity q) {
  switch (q) {
    case Quantity::kMass: return "mass";
    case Quantity::kMomentumX: return "px";
    case Quantity::kMomentumY: return "py";
  }
  return "?";
}

double PhaseOperator::phase_fraction(std::size_t s, unsigned n_ancillas) const {
  if (s >= quantity.size()) throw QpeError("state out of range for phase operator");
  double f = convention == PhaseConvention::kPaper
                 ? -quantity[s] / (2.0 * M_PI)
                 : quantity[s] / std::ldexp(1.0, static_cast<int>(n_ancillas));
  f -= std::floor(f);
  return f >= 1.0 ? 0.0 : f;
}

Complex PhaseOperator::eigenvalue(std::size_t s, unsigned n_ancillas) const {
  return std::polar(1.0, 2.0 * M_PI * phase_fraction(s, n_ancillas));
}

Matrix PhaseOperator::matrix(unsigned n_ancillas) const {
  const auto dim = static_cast<Eigen::Index>(quantity.size());
  Matrix m = Matrix::Zero(dim, dim);
  for (Eigen::Index s = 0; s < dim; ++s)
    m(s, s) = eigenvalue(static_cast<std::size_t>(s), n_ancillas);
  return m;
}

std::vector<double> quantity_values(Quantity quantity, lgca::Model model,
                                    lgca::MassConvention mass) {
  const unsigned v = lgca::velocity_count(model);
  std::vector<double> q(std::size_t{1} << v);
  for (lgca::Cell s = 0; s < q.size(); ++s) {
    const auto rec = lgca::quantities(s, model, mass);
    switch (quantity) {
      case Quantity::kMass: q[s] = static_cast<double>(rec.mass); break;
      case Quantity::kMomentumX: q[s] = rec.px(); break;
      case Quantity::kMomentumY:
        if (model != lgca::Model::kFHP) throw QpeError("py is only defined for fhp");
        q[s] = rec.py();
        break;
    }
  }
  return q;
}

PhaseOperator phase_operator(Quantity quantity, lgca::Model model,
                             PhaseConvention convention, lgca::MassConvention mass) {
  return {lgca::velocity_count(model), quantity_values(quantity, model, mass), convention};
}

PhaseOperator custom_phase_operator(std::vector<double> quantity,
                                    PhaseConvention convention) {
  if (quantity.empty() || !std::has_single_bit(quantity.size()))
    throw QpeError("custom quantity table length must be a power of two");
  const auto v = static_cast<unsigned>(std::countr_zero(quantity.size()));
  return {v, std::move(quantity), convention};
}

}  // namespace qlgca::qpe
