#include "qlgca/qpe/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <ostream>
#include <set>

namespace qlgca::qpe {

namespace {

std::size_t modal(const std::vector<double>& row) {
  return static_cast<std::size_t>(std::max_element(row.begin(), row.end()) - row.begin());
}

std::string fmt(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", std::abs(x) < 1e-15 ? 0.0 : x);
  return buf;
}

}  // namespace

SpectrumReport spectrum_report(const PhaseOperator& u, unsigned n_ancillas) {
  SpectrumReport r{u.v, n_ancillas, u.convention, {}};
  for (std::size_t s = 0; s < u.quantity.size(); ++s)
    r.rows.push_back(qpe_distribution(u, s, n_ancillas).dense());
  for (auto& row : r.rows) row.resize(std::size_t{1} << n_ancillas, 0.0);
  return r;
}

double row_distance(const SpectrumReport& report, std::size_t s1, std::size_t s2) {
  return qsim::total_variation(report.rows.at(s1), report.rows.at(s2));
}

EquivalenceCheck equal_quantity_equivalence_check(const SpectrumReport& report,
                                                  const std::vector<double>& quantity) {
  if (quantity.size() != report.rows.size())
    throw QpeError("quantity table does not match the spectrum rows");
  EquivalenceCheck check;
  const double register_size = std::ldexp(1.0, static_cast<int>(report.n_ancillas));
  check.separation_required =
      report.convention == PhaseConvention::kDyadic &&
      std::all_of(quantity.begin(), quantity.end(), [&](double q) {
        return q == std::floor(q) && q >= 0.0 && q < register_size;
      });

  std::set<std::size_t> modes;
  for (std::size_t s = 0; s < quantity.size(); ++s) modes.insert(modal(report.rows[s]));
  check.distinct_modal_outcomes = modes.size();

  for (std::size_t a = 0; a < quantity.size(); ++a)
    for (std::size_t b = a + 1; b < quantity.size(); ++b) {
      const bool same_q = quantity[a] == quantity[b];
      const bool same_row = row_distance(report, a, b) <= kRowTolerance;
      if (same_q && !same_row) check.split_pairs.emplace_back(a, b);
      if (!same_q && same_row) check.aliased_pairs.emplace_back(a, b);
      if (!same_q && modal(report.rows[a]) == modal(report.rows[b]))
        check.modal_collisions.emplace_back(a, b);
    }
  check.consistent = check.split_pairs.empty() &&
                     (!check.separation_required || check.modal_collisions.empty());
  return check;
}

void write_spectrum_csv(std::ostream& out, const SpectrumReport& report) {
  out << "state";
  const std::size_t width = std::size_t{1} << report.n_ancillas;
  for (std::size_t y = 0; y < width; ++y) out << ",y" << y;
  out << '\n';
  for (std::size_t s = 0; s < report.rows.size(); ++s) {
    out << s;
    for (double p : report.rows[s]) out << ',' << fmt(p);
    out << '\n';
  }
}

void write_histogram_csv(std::ostream& out, const SpectrumReport& report,
                         const std::vector<double>& quantity,
                         const std::vector<std::size_t>& states) {
  const std::size_t width = std::size_t{1} << report.n_ancillas;
  std::map<double, std::pair<std::vector<double>, std::size_t>> groups;
  for (std::size_t s : states) {
    auto& [acc, count] = groups[quantity.at(s)];
    acc.resize(width, 0.0);
    for (std::size_t y = 0; y < width; ++y) acc[y] += report.rows.at(s)[y];
    ++count;
  }
  out << "quantity";
  for (std::size_t y = 0; y < width; ++y) out << ",y" << y;
  out << '\n';
  for (const auto& [q, group] : groups) {
    out << fmt(q);
    for (double p : group.first) out << ',' << fmt(p / static_cast<double>(group.second));
    out << '\n';
  }
}

}  // namespace qlgca::qpe
