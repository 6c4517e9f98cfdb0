#pragma once

#include <random>

namespace nonneg::detail {

/// Uniform on the open interval (0, 1): 53 random bits mapped to the centre
/// of their cell. Bit-identical across standard libraries.
inline double open_unit(std::mt19937_64& gen) {
  return (static_cast<double>(gen() >> 11) + 0.5) * 0x1.0p-53;
}

}  // namespace nonneg::detail
