#include "qlgca/circuits/collision_spec.hpp"

#include <algorithm>
#include <cctype>

namespace qlgca::circuits {

void CollisionSpec::validate() const {
  if (v == 0 || v > 16) throw CircuitsError("collision spec needs 1 <= v <= 16");
  const std::size_t dim = std::size_t{1} << v;
  std::vector<int> seen(dim, 0);
  auto mark = [&](Cell s) {
    if (s >= dim) throw CircuitsError("state " + std::to_string(s) + " out of range");
    if (seen[s]++) throw CircuitsError("state " + std::to_string(s) + " listed twice");
  };
  for (Cell s : fixed_states) mark(s);
  for (auto [a, b] : deterministic_pairs) {
    mark(a);
    mark(b);
  }
  for (const auto& orbit : stochastic_orbits) {
    if (orbit.size() < 2) throw CircuitsError("stochastic orbit needs at least 2 states");
    for (Cell s : orbit) mark(s);
  }
  for (std::size_t s = 0; s < dim; ++s)
    if (!seen[s]) throw CircuitsError("state " + std::to_string(s) + " not covered");
}

Eigen::MatrixXd CollisionSpec::transition_matrix() const {
  validate();
  const auto dim = static_cast<Eigen::Index>(std::size_t{1} << v);
  Eigen::MatrixXd p = Eigen::MatrixXd::Zero(dim, dim);
  for (Cell s : fixed_states) p(s, s) = 1.0;
  for (auto [a, b] : deterministic_pairs) {
    p(a, b) = 1.0;
    p(b, a) = 1.0;
  }
  for (const auto& orbit : stochastic_orbits) {
    const double w = 1.0 / static_cast<double>(orbit.size() - 1);
    for (Cell a : orbit)
      for (Cell b : orbit)
        if (a != b) p(a, b) = w;
  }
  return p;
}

CollisionSpec CollisionSpec::identity(unsigned v) {
  CollisionSpec spec{v, {}, {}, {}};
  for (Cell s = 0; s < (Cell{1} << v); ++s) spec.fixed_states.push_back(s);
  return spec;
}

FhpSelection parse_fhp_selection(const std::string& text) {
  std::string t;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c)))
      t += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (t == "all") return {FhpCollision::kB2, FhpCollision::kB3, FhpCollision::kB4};
  if (t.empty() || t[0] != 'b') throw CircuitsError("collision selection must start with B: '" + text + "'");
  FhpSelection sel;
  for (std::size_t i = 1; i < t.size(); ++i) {
    switch (t[i]) {
      case ',': break;
      case 'b': break;
      case '2': sel.insert(FhpCollision::kB2); break;
      case '3': sel.insert(FhpCollision::kB3); break;
      case '4': sel.insert(FhpCollision::kB4); break;
      default: throw CircuitsError("invalid collision selection '" + text + "'");
    }
  }
  if (sel.empty()) throw CircuitsError("empty collision selection '" + text + "'");
  return sel;
}

std::string to_string(const FhpSelection& selection) {
  std::string s = "B";
  bool first = true;
  for (FhpCollision c : selection) {
    if (!first) s += ',';
    first = false;
    s += c == FhpCollision::kB2 ? '2' : c == FhpCollision::kB3 ? '3' : '4';
  }
  return s;
}

CollisionSpec d1q3_spec() {
  return CollisionSpec{3, {0, 1, 3, 4, 6, 7}, {{2, 5}}, {}};
}

CollisionSpec fhp_spec(const FhpSelection& selection) {
  if (selection.empty()) throw CircuitsError("collision selection must be non-empty");
  CollisionSpec spec{6, {}, {}, {}};
  std::vector<bool> used(64, false);
  if (selection.contains(FhpCollision::kB3)) {
    spec.deterministic_pairs.push_back({21, 42});
    used[21] = used[42] = true;
  }
  if (selection.contains(FhpCollision::kB2)) {
    spec.stochastic_orbits.push_back({9, 18, 36});
    used[9] = used[18] = used[36] = true;
  }
  if (selection.contains(FhpCollision::kB4)) {
    spec.stochastic_orbits.push_back({27, 45, 54});
    used[27] = used[45] = used[54] = true;
  }
  for (Cell s = 0; s < 64; ++s)
    if (!used[s]) spec.fixed_states.push_back(s);
  return spec;
}

}  // namespace qlgca::circuits
