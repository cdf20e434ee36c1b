#include <cmath>

#include "ddseries/contour.hpp"
#include "ddseries/special.hpp"

namespace ddseries::contour {

void ContourSpec::validate() const {
  if (n_shift < 1 || n_shift > 40) throw DomainError("contour shift N must lie in 1..40");
  if (!(epsilon > 0.0 && epsilon < 0.5)) throw DomainError("contour epsilon must lie in (0, 1/2)");
  if (!(step > 0.0 && step <= 0.25)) throw DomainError("contour step must lie in (0, 1/4]");
  if (!(max_height > 0.0)) throw DomainError("contour height cap must be positive");
}

bool admissible(int n_shift, double epsilon, cplx s1, cplx s2) {
  return s2.real() > -n_shift + epsilon && (s1 + s2).real() > 1.0 - n_shift + epsilon;
}

int minimal_shift(double epsilon, cplx s1, cplx s2) {
  int n = 1;
  while (!admissible(n, epsilon, s1, s2)) ++n;
  return n;
}

LineIntegral integrate_vertical(const std::function<cplx(cplx)>& f, double c, double step, double t_lo,
                                double t_hi, double abs_tol, double max_height) {
  const double h2 = 0.5 * step;
  const cplx f0 = f(cplx(c, 0.0));
  cplx fine = f0 * h2;
  cplx coarse = f0 * step;
  double tail = 0.0;
  LineIntegral out;
  out.nodes = 1;
  for (int dir : {1, -1}) {
    const double edge = dir > 0 ? std::max(t_hi, 0.0) : std::min(t_lo, 0.0);
    double last = 0.0;
    for (long j = 1;; ++j) {
      const double t = dir * j * h2;
      if (std::fabs(t) > max_height) {
        tail += 10.0 * last / special::pi;
        break;
      }
      const cplx v = f(cplx(c, t));
      ++out.nodes;
      fine += v * h2;
      if (j % 2 == 0) coarse += v * step;
      last = std::abs(v);
      const bool beyond = dir > 0 ? t > edge : t < edge;
      if (beyond && j % 2 == 0) {
        const double est = 10.0 * last / special::pi;
        if (est < std::max(abs_tol, 1e-17 * std::abs(fine))) {
          tail += est;
          (dir > 0 ? out.height_hi : out.height_lo) = t;
          break;
        }
      }
    }
  }
  out.value = fine;
  out.error_estimate = std::abs(fine - coarse) + tail;
  return out;
}

LineIntegral mb_scalar(double lambda, cplx s, double c, double step) {
  if (!(lambda > 0.0)) throw DomainError("mb_scalar: lambda must be positive");
  if (!(c < 0.0 && c > -s.real())) throw DomainError("mb_scalar: need -Re s < c < 0");
  const cplx lg_s = special::log_gamma(s);
  const double log_lambda = std::log(lambda);
  auto f = [&](cplx z) {
    return std::exp(special::log_gamma(s + z) + special::log_gamma(-z) - lg_s + z * log_lambda);
  };
  const double t_lo = std::min(0.0, -s.imag()) - 2.0;
  const double t_hi = std::max(0.0, -s.imag()) + 2.0;
  LineIntegral r = integrate_vertical(f, c, step, t_lo, t_hi, 1e-18, 400.0);
  r.value /= 2.0 * special::pi;
  r.error_estimate /= 2.0 * special::pi;
  return r;
}

}  // namespace ddseries::contour
