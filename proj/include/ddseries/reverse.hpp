#pragma once

#include <array>
#include <cstddef>

#include "ddseries/arith.hpp"
#include "ddseries/continuation.hpp"
#include "ddseries/error.hpp"
#include "ddseries/zeros.hpp"

namespace ddseries::reverse {

// Reverse value of the von Mangoldt series at (-m, -n), defined as
// lim_{s2 -> -n} lim_{s1 -> -m}. Closed form valid for m + n even with
// m >= 1 whenever n >= 2:
//   B_{m+n+2}/((n+1)(m+n+2)) + log(2 pi) B_{m+n+1}/(m+n+1)
//   - sum_{k odd <= n} C(n,k) ((k+1)/B_{k+1}) zeta'(-k) B_{m+n-k+1}/(m+n-k+1)
//   + sum_{k even <= n} C(n,k) (B_{m+n-k+1}/(m+n-k+1)) (-a_k + k! b_k)
//   - (-1)^m m! n!/(m+n+1)! M(-m-n-1).
// (m, n) = (1, 0) returns the published expression
//   (1/12) log(2 pi) - 3/4 - zeta''(-2)/(4 zeta'(-2)) + gamma/2;
// the iterated limit itself diverges there (see reverse_numeric).
// Other parity or hypothesis violations throw DivergenceError.
cplx reverse_lambda_closed(int m, int n);

// Reverse value at (1 + l + rho_n, -l) for l in {0, 1} and a simple zero:
//   -log(2 pi) zeta(1 + rho) + pi l!/((rho)_{l+1} sin(pi rho))
//   + sum_{k odd <= l} C(l,k) M(-k) zeta(1 + k + rho).
// n_index is 1-based into the table.
cplx reverse_lambda_rho(int l, std::size_t n_index, const zeros::ZeroTable& table);

enum class MuPoint { Origin, MinusOneZero, RhoLine, RhoLineShift };

// Closed reverse values of the Moebius-coefficient series:
//   Origin        (0, 0)            13
//   MinusOneZero  (-1, 0)           1/6 - (2 pi^2/zeta(3))(3/2 - gamma) - zeta''(-2)/(4 zeta'(-2)^2)
//   RhoLine       (1 + rho, 0)      -2 zeta(1+rho) - pi/(rho zeta'(rho) sin(pi rho))
//   RhoLineShift  (2 + rho, -1)     -2 zeta(1+rho) - pi/(rho (rho+1) zeta'(rho) sin(pi rho)) - 12 zeta(2+rho)
// The MinusOneZero expression is the published one; the iterated limit
// diverges there. n_index (1-based) selects rho for the two zero lines.
cplx reverse_mu_closed(MuPoint point, const zeros::ZeroTable& table = {}, std::size_t n_index = 1);

struct LimitConfig {
  continuation::EvalConfig eval;
  double h0 = 1e-2;  // ladder h0, h0/2, h0/4 in both variables
  // A fitted A/h component larger than this fraction of max(1, |limit|)
  // at the smallest step counts as divergence.
  double divergence_ratio = 0.1;
};

struct LimitResult {
  cplx value;
  double error_estimate = 0.0;
  std::array<cplx, 3> ladder{};  // outer-variable values at h0, h0/2, h0/4
};

// lim_{s2 -> u2} lim_{s1 -> u1} of the continued series. The inner limit
// is the value at s1 = u1 when that point is regular, otherwise a
// Richardson extrapolation along s1 = u1 + h. The outer limit is a
// second-order Richardson extrapolation along s2 = u2 + h.
// Throws DivergenceError when either ladder shows a 1/h component.
LimitResult reverse_numeric(const arith::SeriesSpec& series, cplx u1, cplx u2, const zeros::ZeroTable& table,
                            const LimitConfig& config = {});

// lim_{s1 -> u1} lim_{s2 -> u2}, the same machinery with the order swapped.
LimitResult regular_numeric(const arith::SeriesSpec& series, cplx u1, cplx u2, const zeros::ZeroTable& table,
                            const LimitConfig& config = {});

}  // namespace ddseries::reverse
