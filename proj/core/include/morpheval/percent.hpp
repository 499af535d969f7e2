#pragma once

#include <cstdint>
#include <string>

namespace morpheval {

// A non-negative quantity with two decimals, stored exactly as hundredths.
struct Fixed2 {
  std::int64_t hundredths = 0;

  double value() const { return static_cast<double>(hundredths) / 100.0; }
  std::string str() const;

  bool operator==(const Fixed2&) const = default;
  auto operator<=>(const Fixed2&) const = default;
};

// scale * numerator / denominator rounded half-up to two decimals, computed
// in integer arithmetic so ties are never lost to binary floating point.
// A zero denominator yields 0.
Fixed2 RoundedRatio(std::uint64_t numerator, std::uint64_t denominator,
                    std::uint64_t scale = 1);

inline Fixed2 RoundedPercent(std::uint64_t numerator,
                             std::uint64_t denominator) {
  return RoundedRatio(numerator, denominator, 100);
}

// Unrounded 100 * numerator / denominator (0 when the denominator is 0).
double Percent(std::uint64_t numerator, std::uint64_t denominator);

}  // namespace morpheval
