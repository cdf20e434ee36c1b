#include <cmath>

#include "ddseries/contour.hpp"
#include "ddseries/special.hpp"

namespace ddseries::contour {

LineIntegral mb_tail_integral(const arith::SeriesSpec& series, cplx s1, cplx s2, const ContourSpec& contour,
                              double tol) {
  contour.validate();
  if (!admissible(contour.n_shift, contour.epsilon, s1, s2))
    throw DomainError("mb_tail_integral: point not admissible for this contour shift");
  if (special::is_nonpositive_integer(s2)) return {0.0, 0.0, 0.0, 0.0, 0};
  const cplx u = s1 + s2;
  const cplx lg_s2 = special::log_gamma(s2);

  std::function<cplx(cplx)> kernel;
  if (series.is_von_mangoldt()) {
    kernel = [](cplx w) { return special::mangoldt_M(w); };
  } else {
    if (series.alpha == arith::BaseSeries::Unknown || series.alpha == arith::BaseSeries::None)
      throw DomainError("mb_tail_integral: series has no closed form for Phi(s; alpha)");
    kernel = [&series](cplx w) { return arith::alpha_series(series, w) / special::zeta(w); };
  }
  auto f = [&](cplx z) {
    const cplx g = std::exp(special::log_gamma(s2 + z) + special::log_gamma(-z) - lg_s2);
    return g * kernel(-z) * special::zeta(u + z);
  };
  const double t_lo = std::min({0.0, -s2.imag(), -u.imag()}) - 2.0;
  const double t_hi = std::max({0.0, -s2.imag(), -u.imag()}) + 2.0;
  const double two_pi = 2.0 * special::pi;
  LineIntegral r = integrate_vertical(f, contour.abscissa(), contour.step, t_lo, t_hi, 1e-3 * tol * two_pi,
                                      contour.max_height);
  r.value /= two_pi;
  r.error_estimate /= two_pi;
  return r;
}

}  // namespace ddseries::contour
