#include "qlgca/streaming/shift.hpp"

namespace qlgca::streaming {

namespace {

void append_ripple(Circuit& c, const std::vector<Qubit>& space,
                   const std::vector<Control>& controls, qsim::Polarity carry) {
  if (space.empty()) throw StreamingError("space register must be non-empty");
  for (std::size_t i = space.size(); i-- > 0;) {
    std::vector<Control> ctrls = controls;
    for (std::size_t j = 0; j < i; ++j) ctrls.push_back({space[j], carry});
    c.add(qsim::Gate::x(space[i], ctrls));
  }
}

}  // namespace

void append_increment(Circuit& c, const std::vector<Qubit>& space,
                      const std::vector<Control>& controls) {
  append_ripple(c, space, controls, qsim::Polarity::kFilled);
}

void append_decrement(Circuit& c, const std::vector<Qubit>& space,
                      const std::vector<Control>& controls) {
  append_ripple(c, space, controls, qsim::Polarity::kOpen);
}

Circuit controlled_shift(Direction direction, unsigned n_space) {
  if (n_space == 0) throw StreamingError("n_space must be at least 1");
  Circuit c(n_space + 2);
  std::vector<Qubit> space(n_space);
  for (unsigned i = 0; i < n_space; ++i) space[i] = i;
  if (direction == Direction::kRight)
    append_increment(c, space, {{n_space, qsim::Polarity::kOpen}});
  else
    append_decrement(c, space, {{n_space, qsim::Polarity::kFilled}});
  return c;
}

}  // namespace qlgca::streaming
