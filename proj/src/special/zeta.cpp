#include <array>
#include <cmath>

#include "ddseries/special.hpp"

namespace ddseries::special {
namespace {

// Truncated Taylor data (f, f', f'') propagated through arithmetic.
struct Jet {
  cplx v, d1, d2;
};

Jet operator+(const Jet& a, const Jet& b) { return {a.v + b.v, a.d1 + b.d1, a.d2 + b.d2}; }
Jet operator+(const Jet& a, cplx c) { return {a.v + c, a.d1, a.d2}; }
Jet operator*(const Jet& a, const Jet& b) {
  return {a.v * b.v, a.d1 * b.v + a.v * b.d1, a.d2 * b.v + 2.0 * a.d1 * b.d1 + a.v * b.d2};
}
Jet operator*(const Jet& a, cplx c) { return {a.v * c, a.d1 * c, a.d2 * c}; }
Jet reciprocal(const Jet& b) {
  const cplx r = 1.0 / b.v;
  return {r, -b.d1 * r * r, (2.0 * b.d1 * b.d1 - b.v * b.d2) * r * r * r};
}
Jet operator/(const Jet& a, const Jet& b) { return a * reciprocal(b); }

template <class T>
T variable(cplx s);
template <>
cplx variable<cplx>(cplx s) { return s; }
template <>
Jet variable<Jet>(cplx s) { return {s, 1.0, 0.0}; }

// n^{-s} given log n.
template <class T>
T power_neg(double log_n, cplx s);
template <>
cplx power_neg<cplx>(double log_n, cplx s) { return std::exp(-s * log_n); }
template <>
Jet power_neg<Jet>(double log_n, cplx s) {
  const cplx e = std::exp(-s * log_n);
  return {e, -log_n * e, log_n * log_n * e};
}

// B_{2j} / (2j)! for j = 1..12.
const std::array<double, 12>& em_coefficients() {
  static const std::array<double, 12> c = [] {
    std::array<double, 12> out{};
    double fact = 1.0;
    for (int j = 1; j <= 12; ++j) {
      fact *= double(2 * j - 1) * double(2 * j);
      out[j - 1] = bernoulli_value(2 * j) / fact;
    }
    return out;
  }();
  return c;
}

template <class T>
T zeta_euler_maclaurin(cplx s) {
  const int m = std::max(20, int(std::ceil(1.3 * (std::fabs(s.imag()) + 10.0))));
  const T S = variable<T>(s);
  T sum = T{} + 0.0;
  for (int n = 1; n < m; ++n) sum = sum + power_neg<T>(std::log(double(n)), s);
  const double md = m;
  const T pm = power_neg<T>(std::log(md), s);
  sum = sum + pm * md / (S + (-1.0)) + pm * 0.5;
  T poch = S;
  T mpow = pm * (1.0 / md);
  const auto& coef = em_coefficients();
  for (int j = 1; j <= 12; ++j) {
    sum = sum + poch * mpow * coef[j - 1];
    poch = poch * (S + double(2 * j - 1)) * (S + double(2 * j));
    mpow = mpow * (1.0 / (md * md));
  }
  return sum;
}

// Jet of chi(s) = 2^s pi^(s-1) sin(pi s/2) Gamma(1-s), so zeta(s) = chi(s) zeta(1-s).
Jet chi_jet(cplx s) {
  const cplx psi = digamma(1.0 - s);
  const cplx psi1 = trigamma(1.0 - s);
  if (std::fabs(s.imag()) <= 60.0) {
    const cplx a = std::exp(s * log_two_pi) / pi;
    const Jet A{a, log_two_pi * a, log_two_pi * log_two_pi * a};
    const cplx sn = sin_pi(0.5 * s);
    const cplx cs = cos_pi(0.5 * s);
    const Jet B{sn, 0.5 * pi * cs, -0.25 * pi * pi * sn};
    const cplx g = gamma(1.0 - s);
    const Jet C{g, -g * psi, g * (psi * psi + psi1)};
    return A * B * C;
  }
  const cplx logchi = s * log_two_pi - std::log(pi) + log_sin_pi(0.5 * s) + log_gamma(1.0 - s);
  const cplx ct = cot_pi(0.5 * s);
  const cplx l1 = log_two_pi + 0.5 * pi * ct - psi;
  const cplx l2 = -0.25 * pi * pi * (1.0 + ct * ct) + psi1;
  const cplx chi = std::exp(logchi);
  return {chi, chi * l1, chi * (l2 + l1 * l1)};
}

cplx chi_value(cplx s) {
  if (std::fabs(s.imag()) <= 60.0)
    return std::exp(s * log_two_pi) / pi * sin_pi(0.5 * s) * gamma(1.0 - s);
  return std::exp(s * log_two_pi - std::log(pi) + log_sin_pi(0.5 * s) + log_gamma(1.0 - s));
}

void check_zeta_pole(cplx s) {
  if (s == cplx(1.0)) throw PoleError("zeta at s = 1", s, 1.0);
}

}  // namespace

ZetaJet zeta_jet(cplx s) {
  check_zeta_pole(s);
  if (s.real() >= -0.5) {
    const Jet j = zeta_euler_maclaurin<Jet>(s);
    return {j.v, j.d1, j.d2};
  }
  const Jet w = zeta_euler_maclaurin<Jet>(1.0 - s);
  const Jet z{w.v, -w.d1, w.d2};
  const Jet r = chi_jet(s) * z;
  return {r.v, r.d1, r.d2};
}

cplx zeta(cplx s) {
  check_zeta_pole(s);
  if (s.real() >= -0.5) return zeta_euler_maclaurin<cplx>(s);
  return chi_value(s) * zeta_euler_maclaurin<cplx>(1.0 - s);
}

cplx mangoldt_M(cplx s) {
  if (s == cplx(1.0)) throw PoleError("M(s) at s = 1", s, 1.0);
  if (s.real() < -0.5) {
    if (s.imag() == 0.0 && std::remainder(s.real(), 2.0) == 0.0)
      throw PoleError("M(s) at a trivial zero of zeta", s, -1.0);
    const ZetaJet w = zeta_jet(1.0 - s);
    return -log_two_pi - 0.5 * pi * cot_pi(0.5 * s) + digamma(1.0 - s) + w.d1 / w.value;
  }
  const ZetaJet j = zeta_jet(s);
  if (std::abs(j.value) <= 4.0 * 2.220446049250313e-16 * std::abs(j.d1))
    throw PoleError("M(s) at a zero of zeta", s, -1.0);
  return -j.d1 / j.value;
}

}  // namespace ddseries::special
