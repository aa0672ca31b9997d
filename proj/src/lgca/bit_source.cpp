#include "qlgca/lgca/bit_source.hpp"

#include "qlgca/lgca/cell.hpp"

namespace qlgca::lgca {

bool ScriptedBitSource::next_bit() {
  if (pos_ >= bits_.size()) throw LgcaError("scripted bit source exhausted");
  return bits_[pos_++];
}

}  // namespace qlgca::lgca
