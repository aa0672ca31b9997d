#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace qlgca::lgca {

/// Supplies the random bits consumed by stochastic collisions.
class BitSource {
 public:
  virtual ~BitSource() = default;
  virtual bool next_bit() = 0;
};

/// Top bit of successive mt19937_64 outputs.
class SeededBitSource final : public BitSource {
 public:
  explicit SeededBitSource(std::uint64_t seed) : engine_(seed) {}
  bool next_bit() override { return (engine_() >> 63) != 0; }

 private:
  std::mt19937_64 engine_;
};

/// Replays a fixed sequence; throws once it runs out.
class ScriptedBitSource final : public BitSource {
 public:
  explicit ScriptedBitSource(std::vector<bool> bits) : bits_(std::move(bits)) {}
  bool next_bit() override;
  std::size_t consumed() const { return pos_; }

 private:
  std::vector<bool> bits_;
  std::size_t pos_ = 0;
};

/// Always returns the same value.
class ConstantBitSource final : public BitSource {
 public:
  explicit ConstantBitSource(bool value) : value_(value) {}
  bool next_bit() override { return value_; }

 private:
  bool value_;
};

}  // namespace qlgca::lgca
