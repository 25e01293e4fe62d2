#pragma once

#include <complex>
#include <cstdint>
#include <random>

namespace lacunary {

// A point exp(2 pi i x) of the unit circle with x stored as a 128-bit binary
// fraction of a turn. Integer powers are exact: w^e is x*e mod 1, which lets
// w^{2^k} be formed for large k without the angle losing its low bits.
class CirclePoint {
 public:
  using Phase = unsigned __int128;

  CirclePoint() = default;
  explicit CirclePoint(Phase phase) : phase_(phase) {}

  static CirclePoint random(std::mt19937_64& rng) {
    const Phase hi = rng();
    const Phase lo = rng();
    return CirclePoint((hi << 64U) | lo);
  }

  Phase phase() const { return phase_; }

  CirclePoint pow(std::uint64_t e) const { return CirclePoint(phase_ * e); }
  CirclePoint pow2(unsigned j) const {
    return CirclePoint(j >= 128 ? Phase{0} : phase_ << j);
  }
  CirclePoint inverse() const { return CirclePoint(Phase{0} - phase_); }
  CirclePoint operator*(const CirclePoint& o) const {
    return CirclePoint(phase_ + o.phase_);
  }

  // Fraction of a turn in [0, 1).
  double turns() const {
    return static_cast<double>(static_cast<std::uint64_t>(phase_ >> 64U)) *
           0x1p-64;
  }

  std::complex<double> value() const;

 private:
  Phase phase_ = 0;
};

}  // namespace lacunary
