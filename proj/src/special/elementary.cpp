#include <cmath>

#include "ddseries/special.hpp"

namespace ddseries::special {
namespace {

// sin(pi x) for real x, exact at integers.
double sinpi_real(double x) {
  double r = std::remainder(x, 2.0);  // r in [-1, 1]
  if (r == 0.0 || r == 1.0 || r == -1.0) return 0.0;
  if (r > 0.5)
    r = 1.0 - r;
  else if (r < -0.5)
    r = -1.0 - r;
  return std::sin(pi * r);
}

double cospi_real(double x) {
  double r = std::remainder(x, 2.0);
  if (std::fabs(r) == 0.5) return 0.0;
  return sinpi_real(r + 0.5);
}

}  // namespace

bool is_nonpositive_integer(cplx z) {
  return z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real());
}

cplx sin_pi(cplx z) {
  const double y = pi * z.imag();
  return {sinpi_real(z.real()) * std::cosh(y), cospi_real(z.real()) * std::sinh(y)};
}

cplx cos_pi(cplx z) {
  const double y = pi * z.imag();
  return {cospi_real(z.real()) * std::cosh(y), -sinpi_real(z.real()) * std::sinh(y)};
}

cplx cot_pi(cplx z) {
  if (std::fabs(z.imag()) < 20.0) {
    const cplx s = sin_pi(z);
    if (s == cplx(0.0)) throw PoleError("cot(pi z) at an integer", z, 1.0 / pi);
    return cos_pi(z) / s;
  }
  const bool upper = z.imag() > 0.0;
  const cplx w = upper ? z : std::conj(z);
  const cplx q = std::exp(cplx(0.0, 2.0 * pi) * cplx(std::remainder(w.real(), 2.0), w.imag()));
  const cplx c = cplx(0.0, 1.0) * (q + 1.0) / (q - 1.0);
  return upper ? c : std::conj(c);
}

cplx log_sin_pi(cplx z) {
  const cplx w(std::remainder(z.real(), 2.0), z.imag());
  if (std::fabs(w.imag()) < 1.0) return std::log(sin_pi(w));
  const bool upper = w.imag() > 0.0;
  const cplx v = upper ? w : std::conj(w);
  const cplx i(0.0, 1.0);
  const cplx q = std::exp(2.0 * pi * i * v);
  const cplx r = -i * pi * v + std::log(q - 1.0) - std::log(2.0 * i);
  return upper ? r : std::conj(r);
}

cplx rising(cplx s, int k) {
  cplx p = 1.0;
  for (int j = 0; j < k; ++j) p *= s + double(j);
  return p;
}

cplx binomial(cplx a, int k) {
  cplx p = 1.0;
  for (int j = 0; j < k; ++j) p *= (a - double(j)) / double(j + 1);
  return p;
}

double harmonic(int l) {
  double h = 0.0;
  for (int j = 1; j <= l; ++j) h += 1.0 / j;
  return h;
}

}  // namespace ddseries::special
