#include <gtest/gtest.h>

#include <cmath>
#include <set>
#include <sstream>

#include "qlgca/qpe/phase_operator.hpp"
#include "qlgca/qpe/qpe.hpp"
#include "qlgca/qpe/spectrum.hpp"
#include "qlgca/qsim/simulator.hpp"

using namespace qlgca;
using namespace qlgca::qpe;

namespace {

// Fejer kernel: P(y) = sin^2(pi 2^n d) / (4^n sin^2(pi d)), d = phi - y / 2^n.
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

double max_diff(const std::vector<double>& a, const std::vector<double>& b) {
  double m = 0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

}  // namespace

TEST(PhaseOperator, MassMatrixMatchesDisplayedOperator) {
  const auto op = phase_operator(Quantity::kMass, lgca::Model::kD1Q3, PhaseConvention::kPaper);
  const std::vector<double> mass{0, 1, 2, 3, 1, 2, 3, 4};
  EXPECT_EQ(op.quantity, mass);
  const auto u = op.matrix(3);
  for (int s = 0; s < 8; ++s) EXPECT_LT(std::abs(u(s, s) - std::polar(1.0, -mass[s])), 1e-12);
}

TEST(PhaseOperator, Parsing) {
  EXPECT_EQ(parse_convention("dyadic"), PhaseConvention::kDyadic);
  EXPECT_EQ(parse_quantity("px"), Quantity::kMomentumX);
  EXPECT_THROW(parse_quantity("energy"), QpeError);
  EXPECT_THROW(phase_operator(Quantity::kMomentumY, lgca::Model::kD1Q3, PhaseConvention::kPaper), QpeError);
}

TEST(Qft, InverseMatrixIsInverseDft) {
  for (unsigned n = 1; n <= 4; ++n) {
    const auto m = inverse_qft_matrix(n);
    const Eigen::Index d = Eigen::Index{1} << n;
    for (Eigen::Index r = 0; r < d; ++r)
      for (Eigen::Index c = 0; c < d; ++c) {
        const auto expected = std::polar(1.0 / std::sqrt(static_cast<double>(d)),
                                         -2.0 * M_PI * static_cast<double>(r * c) / static_cast<double>(d));
        EXPECT_LT(std::abs(m(r, c) - expected), 1e-12);
      }
  }
}

TEST(Qpe, CircuitMatchesFejerKernel) {
  const auto op = custom_phase_operator({0.0, 0.37, 1.0, 2.5, 5.9, -1.2, 3.3, 0.01}, PhaseConvention::kPaper);
  for (unsigned n = 1; n <= 5; ++n)
    for (std::size_t s = 0; s < 8; ++s) {
      const auto dist = qpe_distribution(op, s, n).dense();
      EXPECT_LE(max_diff(dist, fejer(op.phase_fraction(s, n), n)), 1e-10) << n << ' ' << s;
      EXPECT_LE(max_diff(qpe_closed_form(op.phase_fraction(s, n), n), dist), 1e-10);
    }
}

TEST(Qpe, SuperpositionIsMixtureOfEigenstateSpectra) {
  const auto op = phase_operator(Quantity::kMass, lgca::Model::kD1Q3, PhaseConvention::kDyadic);
  qsim::Statevector s(3);
  s[0] = 0.0;
  s[1] = std::sqrt(0.25);
  s[7] = std::sqrt(0.75);
  const auto dist = qpe_distribution(op, s, 3);
  EXPECT_NEAR(dist.probability(1), 0.25, 1e-12);
  EXPECT_NEAR(dist.probability(4), 0.75, 1e-12);
}

TEST(Spectrum, D1Q3EqualMassRowsCoincide) {
  for (auto conv : {PhaseConvention::kPaper, PhaseConvention::kDyadic}) {
    const auto op = phase_operator(Quantity::kMass, lgca::Model::kD1Q3, conv);
    const auto report = spectrum_report(op, 3);
    EXPECT_LE(row_distance(report, 1, 4), 1e-12);
    EXPECT_LE(row_distance(report, 2, 5), 1e-12);
    EXPECT_LE(row_distance(report, 3, 6), 1e-12);
    EXPECT_TRUE(equal_quantity_equivalence_check(report, op.quantity).consistent);
  }
}

TEST(Spectrum, DyadicMassGivesFivePointMasses) {
  const auto op = phase_operator(Quantity::kMass, lgca::Model::kD1Q3, PhaseConvention::kDyadic);
  const auto report = spectrum_report(op, 3);
  std::set<std::size_t> modes;
  for (const auto& row : report.rows) {
    const auto it = std::max_element(row.begin(), row.end());
    EXPECT_NEAR(*it, 1.0, 1e-12);
    modes.insert(static_cast<std::size_t>(it - row.begin()));
  }
  EXPECT_EQ(modes.size(), 5u);
  EXPECT_EQ(equal_quantity_equivalence_check(report, op.quantity).distinct_modal_outcomes, 5u);
}

TEST(Spectrum, FhpSingleParticleRowsIdentical) {
  const auto op = phase_operator(Quantity::kMass, lgca::Model::kFHP, PhaseConvention::kPaper);
  const auto report = spectrum_report(op, 3);
  for (std::size_t i = 1; i < 6; ++i) EXPECT_LE(row_distance(report, 1, std::size_t{1} << i), 1e-12);
}

TEST(Spectrum, ConstantQuantityAllRowsEqual) {
  const auto op = custom_phase_operator(std::vector<double>(8, 1.5), PhaseConvention::kPaper);
  const auto report = spectrum_report(op, 4);
  for (std::size_t s = 1; s < 8; ++s) EXPECT_LE(row_distance(report, 0, s), 1e-12);
}

TEST(Spectrum, NonDyadicPhasesKeepEqualQuantitiesTogether) {
  // Non-dyadic phases e^{-iq} spread the peaks; the check
  // reports whether distinct quantities still produce distinct modes.
  const auto op = phase_operator(Quantity::kMass, lgca::Model::kD1Q3, PhaseConvention::kPaper);
  const auto check = equal_quantity_equivalence_check(spectrum_report(op, 3), op.quantity);
  EXPECT_TRUE(check.split_pairs.empty());
}

TEST(Spectrum, CsvShape) {
  const auto op = phase_operator(Quantity::kMass, lgca::Model::kD1Q3, PhaseConvention::kDyadic);
  const auto report = spectrum_report(op, 3);
  std::stringstream ss;
  write_spectrum_csv(ss, report);
  std::string line;
  std::getline(ss, line);
  EXPECT_EQ(line, "state,y0,y1,y2,y3,y4,y5,y6,y7");
  int rows = 0;
  while (std::getline(ss, line)) ++rows;
  EXPECT_EQ(rows, 8);
  std::stringstream h;
  write_histogram_csv(h, report, op.quantity, {0, 1, 5, 3, 7});
  std::getline(h, line);
  EXPECT_EQ(line.rfind("quantity,", 0), 0u);
}
