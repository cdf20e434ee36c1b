#pragma once

#include <functional>

#include "ddseries/arith.hpp"

namespace ddseries::arith::detail {

// Majorant for sum_{n > N} |beta(n)| n^{-p}.
struct WeightBound {
  enum class Type { Unit, Linear, Chebyshev, Power };
  Type type = Type::Unit;
  double scale = 1.0;  // Power: |beta(n)| <= scale * n^kappa
  double kappa = 0.0;

  // Smallest p for which the tail is finite.
  double abscissa() const;
  double tail(double n_cut, double p) const;
};

WeightBound weight_bound(const CoeffTable& coeffs, const SeriesSpec& spec);

// Smallest integer N >= 1 with bound(N) <= target, or 0 when that needs
// more than limit terms. bound must be non-increasing.
std::size_t cutoff_for(const std::function<double(double)>& bound, double target, std::size_t limit);

}  // namespace ddseries::arith::detail
