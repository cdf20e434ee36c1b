#pragma once

#include <map>

#include <boost/multiprecision/cpp_int.hpp>

#include "ddseries/error.hpp"

namespace ddseries::special {

inline constexpr double pi = 3.141592653589793238462643383279502884;
inline constexpr double euler_gamma = 0.577215664901532860606512090082402431;
inline constexpr double log_two_pi = 1.837877066409345483560659472811235280;

// sin(pi z), cos(pi z) with exact reduction of the real part, so that
// integers and half-integers give exact zeros.
cplx sin_pi(cplx z);
cplx cos_pi(cplx z);
// cot(pi z) without overflow for large |Im z|.
cplx cot_pi(cplx z);
// A logarithm of sin(pi z) (branch unspecified) valid for large |Im z|.
cplx log_sin_pi(cplx z);

// True when z is exactly a non-positive integer.
bool is_nonpositive_integer(cplx z);

// Gamma via Lanczos (g = 607/128, 15 terms) with reflection for Re s < 1/2.
// Throws PoleError at non-positive integers.
cplx gamma(cplx s);
// A logarithm of Gamma; exp(log_gamma(s)) == gamma(s). Branch unspecified.
cplx log_gamma(cplx s);
// 1/Gamma(s); exactly zero at the poles of Gamma.
cplx rgamma(cplx s);
cplx digamma(cplx s);
cplx trigamma(cplx s);

// Pochhammer symbol (s)_k = s (s+1) ... (s+k-1).
cplx rising(cplx s, int k);
// Generalised binomial coefficient a (a-1) ... (a-k+1) / k!.
cplx binomial(cplx a, int k);
// Gamma'(s2 + k) / Gamma(s2) = psi(s2 + k) (s2)_k. At s2 = -k-m the
// ratio has a simple pole with residue (-1)^(k-1) (k+m)!/m!.
cplx digamma_ratio(cplx s2, int k);

// Value and first two derivatives of zeta at one point.
struct ZetaJet {
  cplx value;
  cplx d1;
  cplx d2;
};

// Euler-Maclaurin with cutoff max(20, ceil(1.3 (|Im s| + 10))) and 12
// Bernoulli corrections; functional equation for Re s < -1/2.
// Throws PoleError at s = 1.
ZetaJet zeta_jet(cplx s);
cplx zeta(cplx s);
// M(s) = -zeta'(s)/zeta(s). Throws PoleError at s = 1, at the trivial
// zeros and wherever zeta(s) vanishes to working precision.
cplx mangoldt_M(cplx s);

using Rational = boost::multiprecision::cpp_rational;

// Exact Bernoulli numbers with B_1 = +1/2, 0 <= n <= 64.
const Rational& bernoulli(int n);
double bernoulli_value(int n);

// Harmonic number H_l.
double harmonic(int l);

// Laurent data of M(s), Gamma(s) and 1/zeta(s) at the trivial points:
//   M(s)      = -1/(s+k) + a_k + ...         (k even, k >= 2)
//   Gamma(s)  = (-1)^l/(l! (s+l)) + b_l + ...
//   1/zeta(s) = 1/(zeta'(-k) (s+k)) + c_k + ...   (k even, k >= 2)
struct LaurentConstants {
  std::map<int, double> a;
  std::map<int, double> b;
  std::map<int, double> c;
  std::map<int, double> zeta_d1;  // zeta'(-k) for every 0 <= k <= k_max
  std::map<int, double> zeta_d2;  // zeta''(-k) for every 0 <= k <= k_max
  int k_max = 0;

  double a_at(int k) const;
  double b_at(int l) const;
  double c_at(int k) const;
};

LaurentConstants laurent_constants(int k_max);
// Shared table with k_max = 40, computed once.
const LaurentConstants& default_laurent_constants();

}  // namespace ddseries::special
