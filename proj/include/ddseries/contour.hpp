#pragma once

#include <cstddef>
#include <functional>

#include "ddseries/arith.hpp"
#include "ddseries/error.hpp"

namespace ddseries::contour {

// Vertical line Re z = n_shift - epsilon carrying the remaining
// Mellin-Barnes integral after the residues left of it are collected.
struct ContourSpec {
  int n_shift = 1;
  double epsilon = 0.25;   // in (0, 1/2), keeps the line off the integer poles
  double step = 0.05;      // trapezoidal step in Im z
  double max_height = 400.0;

  double abscissa() const noexcept { return double(n_shift) - epsilon; }
  void validate() const;
};

// Re s2 > -N + epsilon and Re(s1 + s2) > 1 - N + epsilon.
bool admissible(int n_shift, double epsilon, cplx s1, cplx s2);
// Smallest N >= 1 satisfying admissible().
int minimal_shift(double epsilon, cplx s1, cplx s2);

struct LineIntegral {
  cplx value;
  double error_estimate = 0.0;
  double height_lo = 0.0;  // integration window in Im z actually used
  double height_hi = 0.0;
  std::size_t nodes = 0;
};

// int_{-inf}^{inf} f(c + i t) dt by the trapezoidal rule with steps h and
// h/2. Each direction runs outward past [t_lo, t_hi] until
// 10 |f| / pi < abs_tol, assuming exp(-pi |t|) decay from there on. The
// error estimate is |T_{h/2} - T_h| plus both truncated tails.
LineIntegral integrate_vertical(const std::function<cplx(cplx)>& f, double c, double step, double t_lo,
                                double t_hi, double abs_tol, double max_height);

// (1/2 pi i) int_{(c)} Gamma(s+z) Gamma(-z) lambda^z dz / Gamma(s), which
// equals (1 + lambda)^{-s} for -Re s < c < 0.
LineIntegral mb_scalar(double lambda, cplx s, double c, double step = 0.05);

// The integral left over in the continuation:
//   (1/(2 pi i Gamma(s2))) int_{(N - eps)} Gamma(s2+z) Gamma(-z) K(-z) zeta(s1+s2+z) dz
// with K = M = -zeta'/zeta for the von Mangoldt series and
// K = Phi(.; alpha)/zeta otherwise. Exactly zero when 1/Gamma(s2) = 0.
LineIntegral mb_tail_integral(const arith::SeriesSpec& series, cplx s1, cplx s2, const ContourSpec& contour,
                              double tol);

}  // namespace ddseries::contour
