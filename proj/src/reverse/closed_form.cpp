#include <sstream>

#include "ddseries/reverse.hpp"
#include "ddseries/special.hpp"

namespace ddseries::reverse {
namespace {

using special::bernoulli_value;
using special::pi;

double factorial(int n) {
  double f = 1.0;
  for (int j = 2; j <= n; ++j) f *= j;
  return f;
}

double choose(int n, int k) { return factorial(n) / (factorial(k) * factorial(n - k)); }

// B_j / j, which equals -zeta(1 - j).
double bernoulli_ratio(int j) { return bernoulli_value(j) / double(j); }

cplx zero_at(const zeros::ZeroTable& table, std::size_t n_index) {
  if (n_index == 0 || n_index > table.size()) {
    std::ostringstream msg;
    msg << "zero index " << n_index << " outside the table of " << table.size() << " zeros";
    throw DomainError(msg.str());
  }
  return table.rho(n_index - 1);
}

}  // namespace

cplx reverse_lambda_closed(int m, int n) {
  if (m < 0 || n < 0) throw DomainError("reverse_lambda_closed needs m, n >= 0");
  const auto& lc = special::default_laurent_constants();
  const double zeta_d1_m2 = lc.zeta_d1.at(2);
  const double zeta_d2_m2 = lc.zeta_d2.at(2);

  if (m == 1 && n == 0)
    return special::log_two_pi / 12.0 - 0.75 - zeta_d2_m2 / (4.0 * zeta_d1_m2) + special::euler_gamma / 2.0;

  if ((m + n) % 2 != 0) {
    std::ostringstream msg;
    msg << "no reverse value at (" << -m << ", " << -n << "): m + n is odd and the iterated limit diverges";
    throw DivergenceError(msg.str());
  }
  if (m == 0 && n >= 2) {
    std::ostringstream msg;
    msg << "no reverse value at (0, " << -n << "): the closed form needs m >= 1 when n >= 2";
    throw DivergenceError(msg.str());
  }
  const int s = m + n;
  if (s + 2 > 64 || n > lc.k_max) throw DomainError("reverse_lambda_closed: m + n too large for the tables");

  double value = bernoulli_ratio(s + 2) / double(n + 1) + special::log_two_pi * bernoulli_ratio(s + 1);
  for (int k = 1; k <= n; k += 2)
    value -= choose(n, k) * (double(k + 1) / bernoulli_value(k + 1)) * lc.zeta_d1.at(k) *
             bernoulli_ratio(s - k + 1);
  for (int k = 2; k <= n; k += 2)
    value += choose(n, k) * bernoulli_ratio(s - k + 1) * (-lc.a_at(k) + factorial(k) * lc.b_at(k));
  const double sign = m % 2 == 0 ? 1.0 : -1.0;
  const cplx tail = sign * factorial(m) * factorial(n) / factorial(s + 1) * special::mangoldt_M(double(-s - 1));
  return value - tail;
}

cplx reverse_lambda_rho(int l, std::size_t n_index, const zeros::ZeroTable& table) {
  if (l != 0 && l != 1) throw DomainError("reverse_lambda_rho supports l = 0 and l = 1 only");
  const cplx rho = zero_at(table, n_index);
  cplx value = -special::log_two_pi * special::zeta(1.0 + rho) +
               pi * factorial(l) / (special::rising(rho, l + 1) * special::sin_pi(rho));
  for (int k = 1; k <= l; k += 2)
    value += choose(l, k) * special::mangoldt_M(double(-k)) * special::zeta(1.0 + double(k) + rho);
  return value;
}

cplx reverse_mu_closed(MuPoint point, const zeros::ZeroTable& table, std::size_t n_index) {
  switch (point) {
    case MuPoint::Origin:
      return 13.0;
    case MuPoint::MinusOneZero: {
      const auto& lc = special::default_laurent_constants();
      const double d1 = lc.zeta_d1.at(2);
      const double zeta3 = special::zeta(3.0).real();
      return 1.0 / 6.0 - (2.0 * pi * pi / zeta3) * (1.5 - special::euler_gamma) - lc.zeta_d2.at(2) / (4.0 * d1 * d1);
    }
    case MuPoint::RhoLine: {
      const cplx rho = zero_at(table, n_index);
      const cplx zp = table.derivatives.at(n_index - 1);
      return -2.0 * special::zeta(1.0 + rho) - pi / (rho * zp * special::sin_pi(rho));
    }
    case MuPoint::RhoLineShift: {
      const cplx rho = zero_at(table, n_index);
      const cplx zp = table.derivatives.at(n_index - 1);
      return -2.0 * special::zeta(1.0 + rho) - pi / (rho * (rho + 1.0) * zp * special::sin_pi(rho)) -
             12.0 * special::zeta(2.0 + rho);
    }
  }
  throw DomainError("unsupported Moebius reverse point");
}

}  // namespace ddseries::reverse
