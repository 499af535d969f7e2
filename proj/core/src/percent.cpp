#include "morpheval/percent.hpp"

#include <cstdio>

namespace morpheval {

__extension__ typedef unsigned __int128 Wide;

std::string Fixed2::str() const {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%lld.%02lld",
                static_cast<long long>(hundredths / 100),
                static_cast<long long>(hundredths % 100));
  return buf;
}

Fixed2 RoundedRatio(std::uint64_t numerator, std::uint64_t denominator,
                    std::uint64_t scale) {
  if (denominator == 0) return {};
  const Wide num = static_cast<Wide>(numerator) * scale * 100 * 2 + denominator;
  const Wide den = static_cast<Wide>(denominator) * 2;
  return {static_cast<std::int64_t>(num / den)};
}

double Percent(std::uint64_t numerator, std::uint64_t denominator) {
  if (denominator == 0) return 0.0;
  return 100.0 * static_cast<double>(numerator) /
         static_cast<double>(denominator);
}

}  // namespace morpheval
