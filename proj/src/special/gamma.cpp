#include <array>
#include <cmath>

#include "ddseries/special.hpp"

namespace ddseries::special {
namespace {

constexpr double lanczos_c0 = 0.999999999999997092;
constexpr std::array<double, 14> lanczos_coef = {
    57.1562356658629235,     -59.5979603554754912,    14.1360979747417471,
    -0.491913816097620199,   .339946499848118887e-4,  .465236289270485756e-4,
    -.983744753048795646e-4, .158088703224912494e-3,  -.210264441724104883e-3,
    .217439618115212643e-3,  -.164318106536763890e-3, .844182239838527433e-4,
    -.261908384015814087e-4, .368991826595316234e-5};

// B_2, B_4, ..., B_20 for the asymptotic expansions of psi and psi'.
constexpr std::array<double, 10> bern_even = {
    1.0 / 6.0,     -1.0 / 30.0,  1.0 / 42.0,        -1.0 / 30.0,    5.0 / 66.0,
    -691.0 / 2730.0, 7.0 / 6.0, -3617.0 / 510.0, 43867.0 / 798.0, -174611.0 / 330.0};

double factorial(int n) {
  double f = 1.0;
  for (int j = 2; j <= n; ++j) f *= j;
  return f;
}

void check_pole(cplx s) {
  if (is_nonpositive_integer(s)) {
    const int n = int(-s.real());
    throw PoleError("Gamma at a non-positive integer", s, (n % 2 ? -1.0 : 1.0) / factorial(n));
  }
}

cplx log_gamma_lanczos(cplx z) {
  const cplx tmp = z + 5.24218750000000000;
  cplx ser = lanczos_c0;
  for (std::size_t j = 0; j < lanczos_coef.size(); ++j) ser += lanczos_coef[j] / (z + double(j + 1));
  return (z + 0.5) * std::log(tmp) - tmp + std::log(2.5066282746310005 * ser / z);
}

}  // namespace

cplx log_gamma(cplx s) {
  check_pole(s);
  if (s.real() < 0.5) return std::log(pi) - log_sin_pi(s) - log_gamma_lanczos(1.0 - s);
  return log_gamma_lanczos(s);
}

cplx gamma(cplx s) { return std::exp(log_gamma(s)); }

cplx rgamma(cplx s) {
  if (is_nonpositive_integer(s)) return 0.0;
  return std::exp(-log_gamma(s));
}

cplx digamma(cplx s) {
  if (is_nonpositive_integer(s)) throw PoleError("digamma at a non-positive integer", s, -1.0);
  if (s.real() < 0.5) return digamma(1.0 - s) - pi * cot_pi(s);
  cplx acc = 0.0;
  cplx z = s;
  while (std::abs(z) < 15.0) {
    acc -= 1.0 / z;
    z += 1.0;
  }
  const cplx inv2 = 1.0 / (z * z);
  cplx p = inv2;
  cplx series = 0.0;
  for (std::size_t k = 0; k < bern_even.size(); ++k) {
    series += bern_even[k] / double(2 * (k + 1)) * p;
    p *= inv2;
  }
  return acc + std::log(z) - 0.5 / z - series;
}

cplx trigamma(cplx s) {
  if (is_nonpositive_integer(s)) throw PoleError("trigamma at a non-positive integer", s, 0.0);
  if (s.real() < 0.5) {
    const cplx sn = sin_pi(s);
    return pi * pi / (sn * sn) - trigamma(1.0 - s);
  }
  cplx acc = 0.0;
  cplx z = s;
  while (std::abs(z) < 15.0) {
    acc += 1.0 / (z * z);
    z += 1.0;
  }
  const cplx inv = 1.0 / z;
  const cplx inv2 = inv * inv;
  cplx p = inv2 * inv;
  cplx series = 0.0;
  for (double b : bern_even) {
    series += b * p;
    p *= inv2;
  }
  return acc + inv + 0.5 * inv2 + series;
}

cplx digamma_ratio(cplx s2, int k) {
  const cplx w = s2 + double(k);
  if (is_nonpositive_integer(w)) {
    const int m = int(-w.real());
    const double res = (k % 2 ? 1.0 : -1.0) * factorial(k + m) / factorial(m);
    throw PoleError("Gamma'(s2+k)/Gamma(s2) at s2 = -k-m", s2, res);
  }
  const cplx poch = rising(s2, k);
  if (poch == cplx(0.0)) return 0.0;
  return digamma(w) * poch;
}

}  // namespace ddseries::special
