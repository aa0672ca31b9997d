#include "qlgca/streaming/nogo.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include <Eigen/Dense>

namespace qlgca::streaming {

namespace {

constexpr std::size_t kVars = 8;  // A B C D ReE ImE ReF ImF

Equation eq(std::initializer_list<Symbol> terms, int rhs, EquationKind kind) {
  Equation e;
  for (Symbol s : terms) e.coeff[static_cast<std::size_t>(s)] += 1;
  e.rhs = rhs;
  e.kind = kind;
  return e;
}

/// Real rows G x = h for one equation (one row for a real equation, two for
/// a complex one).
void real_rows(const Equation& e, std::vector<std::array<double, kVars>>& g,
               std::vector<double>& h) {
  auto c = [&](Symbol s) { return static_cast<double>(e.coeff[static_cast<std::size_t>(s)]); };
  std::array<double, kVars> re{c(Symbol::A), c(Symbol::B), c(Symbol::C), c(Symbol::D),
                               c(Symbol::E), 0.0, c(Symbol::F) + c(Symbol::Fconj), 0.0};
  g.push_back(re);
  h.push_back(static_cast<double>(e.rhs));
  if (c(Symbol::E) != 0.0 || c(Symbol::F) != 0.0 || c(Symbol::Fconj) != 0.0) {
    std::array<double, kVars> im{0, 0, 0, 0, 0, c(Symbol::E), 0, c(Symbol::F) - c(Symbol::Fconj)};
    g.push_back(im);
    h.push_back(0.0);
  }
}

struct LeastSquares {
  Eigen::MatrixXd g;
  Eigen::VectorXd h;
};

LeastSquares assemble(const ConstraintSystem& system) {
  std::vector<std::array<double, kVars>> rows;
  std::vector<double> rhs;
  for (const Equation& e : system.equations) real_rows(e, rows, rhs);
  LeastSquares ls{Eigen::MatrixXd(static_cast<Eigen::Index>(rows.size()), kVars),
                  Eigen::VectorXd(static_cast<Eigen::Index>(rows.size()))};
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t k = 0; k < kVars; ++k)
      ls.g(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(k)) = rows[r][k];
    ls.h(static_cast<Eigen::Index>(r)) = rhs[r];
  }
  return ls;
}

double objective(const LeastSquares& ls, const Eigen::VectorXd& x) {
  return (ls.g * x - ls.h).squaredNorm();
}

/// Exact minimum by enumerating which of A..D sit on their bound.
std::pair<double, Eigen::VectorXd> active_set_minimum(const LeastSquares& ls) {
  double best = std::numeric_limits<double>::infinity();
  Eigen::VectorXd best_x = Eigen::VectorXd::Zero(kVars);
  for (unsigned mask = 0; mask < 16; ++mask) {
    std::vector<Eigen::Index> free;
    for (Eigen::Index k = 0; k < static_cast<Eigen::Index>(kVars); ++k)
      if (k >= 4 || !((mask >> k) & 1U)) free.push_back(k);
    Eigen::MatrixXd sub(ls.g.rows(), static_cast<Eigen::Index>(free.size()));
    for (std::size_t k = 0; k < free.size(); ++k) sub.col(static_cast<Eigen::Index>(k)) = ls.g.col(free[k]);
    const Eigen::VectorXd y = sub.completeOrthogonalDecomposition().solve(ls.h);
    Eigen::VectorXd x = Eigen::VectorXd::Zero(kVars);
    for (std::size_t k = 0; k < free.size(); ++k) x(free[k]) = y(static_cast<Eigen::Index>(k));
    if ((x.head(4).array() < -1e-12).any()) continue;
    x.head(4) = x.head(4).cwiseMax(0.0);
    const double f = objective(ls, x);
    if (f < best) {
      best = f;
      best_x = x;
    }
  }
  return {best, best_x};
}

double coordinate_descent(const LeastSquares& ls, Eigen::VectorXd x) {
  Eigen::VectorXd r = ls.g * x - ls.h;
  const Eigen::VectorXd col_norm = ls.g.colwise().squaredNorm();
  for (int sweep = 0; sweep < 20000; ++sweep) {
    double moved = 0.0;
    for (Eigen::Index k = 0; k < static_cast<Eigen::Index>(kVars); ++k) {
      if (col_norm(k) == 0.0) continue;
      double next = x(k) - ls.g.col(k).dot(r) / col_norm(k);
      if (k < 4) next = std::max(next, 0.0);
      const double step = next - x(k);
      if (step == 0.0) continue;
      r += step * ls.g.col(k);
      x(k) = next;
      moved = std::max(moved, std::abs(step));
    }
    if (moved < 1e-14) break;
  }
  return r.squaredNorm();
}

}  // namespace

std::string to_string(Symbol s) {
  switch (s) {
    case Symbol::A: return "A";
    case Symbol::B: return "B";
    case Symbol::C: return "C";
    case Symbol::D: return "D";
    case Symbol::E: return "E";
    case Symbol::F: return "F";
    case Symbol::Fconj: return "F*";
  }
  return "?";
}

std::string Equation::lhs_text() const {
  std::string out;
  for (std::size_t k = 0; k < kSymbolCount; ++k) {
    const int c = coeff[k];
    if (c == 0) continue;
    if (c < 0) out += '-';
    else if (!out.empty()) out += '+';
    if (std::abs(c) != 1) out += std::to_string(std::abs(c));
    out += to_string(static_cast<Symbol>(k));
  }
  return out.empty() ? "0" : out;
}

std::string Equation::text() const { return lhs_text() + " = " + std::to_string(rhs); }

ConstraintSystem nogo_constraint_system() {
  using S = Symbol;
  constexpr auto O = EquationKind::kOrthogonality;
  constexpr auto N = EquationKind::kNormalization;
  ConstraintSystem sys;
  sys.equations = {eq({S::A, S::F}, 0, O),     eq({S::E, S::B}, 0, O),
                   eq({S::E, S::F}, 0, O),     eq({S::E, S::Fconj}, 0, O),
                   eq({S::E, S::C}, 0, O),     eq({S::D, S::F}, 0, O),
                   eq({S::A, S::B}, 1, N),     eq({S::A, S::C}, 1, N),
                   eq({S::B, S::D}, 1, N),     eq({S::C, S::D}, 1, N)};
  sys.provenance = {"A = |a|^2 + |b|^2", "B = |c|^2 + |d|^2", "C = |e|^2 + |f|^2",
                    "D = |g|^2 + |h|^2", "E = a* g + b* h",   "F = c* e + d* f"};
  return sys;
}

ConstraintSystem relaxed_system(const ConstraintSystem& system) {
  ConstraintSystem out = system;
  for (Equation& e : out.equations)
    if (e.kind == EquationKind::kNormalization) e.rhs = 0;
  return out;
}

std::optional<ContradictionChain> find_contradiction(const ConstraintSystem& system) {
  std::vector<std::size_t> ortho;
  std::vector<std::size_t> norm;
  for (std::size_t i = 0; i < system.equations.size(); ++i)
    (system.equations[i].kind == EquationKind::kOrthogonality ? ortho : norm).push_back(i);
  if (ortho.size() > 12) throw std::invalid_argument("too many orthogonality equations to search");

  std::optional<ContradictionChain> best;
  std::size_t best_len = std::numeric_limits<std::size_t>::max();
  std::size_t combos = 1;
  for (std::size_t k = 0; k < ortho.size(); ++k) combos *= 3;
  for (std::size_t code = 1; code < combos; ++code) {
    std::array<int, kSymbolCount> lhs{};
    int rhs = 0;
    std::vector<std::pair<int, std::size_t>> steps;
    std::size_t rest = code;
    for (std::size_t k = 0; k < ortho.size(); ++k, rest /= 3) {
      const int m = static_cast<int>(rest % 3) - 1;
      if (m == 0) continue;
      const Equation& e = system.equations[ortho[k]];
      for (std::size_t s = 0; s < kSymbolCount; ++s) lhs[s] += m * e.coeff[s];
      rhs += m * e.rhs;
      steps.emplace_back(m, ortho[k]);
    }
    if (steps.size() >= best_len) continue;
    for (std::size_t n : norm) {
      const Equation& target = system.equations[n];
      if (lhs != target.coeff || rhs == target.rhs) continue;
      Equation derived;
      derived.coeff = lhs;
      derived.rhs = rhs;
      best = ContradictionChain{steps, n, derived.text(), target.text()};
      best_len = steps.size();
      break;
    }
  }
  return best;
}

double residual(const ConstraintSystem& system, const std::array<double, 8>& x) {
  const LeastSquares ls = assemble(system);
  Eigen::VectorXd v(kVars);
  for (std::size_t k = 0; k < kVars; ++k) v(static_cast<Eigen::Index>(k)) = x[k];
  return objective(ls, v);
}

InfeasibilityCertificate check_infeasible(const ConstraintSystem& system,
                                          std::size_t restarts, std::uint64_t seed) {
  InfeasibilityCertificate cert;
  cert.chain = find_contradiction(system);
  const LeastSquares ls = assemble(system);
  const auto [best, best_x] = active_set_minimum(ls);
  cert.min_residual = best;
  for (std::size_t k = 0; k < kVars; ++k) cert.minimizer[k] = best_x(static_cast<Eigen::Index>(k));

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> pos(0.0, 2.0);
  std::uniform_real_distribution<double> any(-2.0, 2.0);
  cert.restarts = restarts;
  cert.restart_min_residual = std::numeric_limits<double>::infinity();
  for (std::size_t r = 0; r < restarts; ++r) {
    Eigen::VectorXd x(kVars);
    for (Eigen::Index k = 0; k < static_cast<Eigen::Index>(kVars); ++k) x(k) = k < 4 ? pos(rng) : any(rng);
    cert.restart_min_residual = std::min(cert.restart_min_residual, coordinate_descent(ls, x));
  }
  if (restarts == 0) cert.restart_min_residual = cert.min_residual;
  cert.infeasible = std::min(cert.min_residual, cert.restart_min_residual) > kFeasibleResidual;
  return cert;
}

}  // namespace qlgca::streaming
