#pragma once

#include <complex>

#include "ddseries/zeros.hpp"

namespace testing {

// The bundled 100-zero table, loaded once.
inline const ddseries::zeros::ZeroTable& bundled_zeros() {
  static const auto table = ddseries::zeros::load_zeros(DDSERIES_ZEROS_FILE);
  return table;
}

inline double rel_err(std::complex<double> got, std::complex<double> want) {
  return std::abs(got - want) / std::max(1.0, std::abs(want));
}

}  // namespace testing
