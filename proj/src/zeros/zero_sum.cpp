#include <cmath>
#include <functional>

#include "ddseries/special.hpp"
#include "ddseries/zeros.hpp"

namespace ddseries::zeros {
namespace {

constexpr double singular_distance = 1e-8;

double zero_density(double gamma) {
  return std::max(std::log(gamma / (2.0 * special::pi)) / (2.0 * special::pi), 0.1);
}

void check_distance(cplx s2, cplx u, cplx rho) {
  const cplx w = s2 - rho;
  const double l = std::round(-w.real());
  if (l >= 0.0 && std::abs(w + l) < singular_distance)
    throw DomainError("zero sum: s2 lies on a line s2 = -l + rho");
  if (std::abs(u - rho - 1.0) < singular_distance)
    throw DomainError("zero sum: s1 + s2 lies on a line s1 + s2 = 1 + rho");
}

// sign * (1/Gamma(s2)) sum_rho Gamma(s2 - rho) Gamma(rho) w(rho, zeta'(rho)) zeta(u - rho)
ZeroSum zero_sum(cplx s1, cplx s2, const ZeroTable& table, double sign,
                 const std::function<cplx(cplx, cplx)>& weight) {
  if (special::is_nonpositive_integer(s2)) return {0.0, 0.0, 0};
  const cplx u = s1 + s2;
  const cplx lg_s2 = special::log_gamma(s2);
  auto term = [&](cplx rho, cplx dzeta) {
    check_distance(s2, u, rho);
    const cplx g = std::exp(special::log_gamma(s2 - rho) + special::log_gamma(rho) - lg_s2);
    return g * weight(rho, dzeta) * special::zeta(u - rho);
  };
  auto tail_from = [](double gamma, double pair_magnitude) {
    return 10.0 * zero_density(gamma) * pair_magnitude / special::pi;
  };

  if (table.empty()) {
    const cplx rho(0.5, first_ordinate);
    const cplx d = special::zeta_jet(rho).d1;
    const double mag = std::abs(term(rho, d)) + std::abs(term(std::conj(rho), std::conj(d)));
    return {0.0, 10.0 * mag + tail_from(first_ordinate, mag), 0};
  }

  const double reach = std::max(std::fabs(s2.imag()), std::fabs(u.imag())) + 10.0;
  if (table.ordinates.back() < reach)
    throw ToleranceError("zero table does not extend beyond the imaginary parts of the point", INFINITY);

  cplx sum = 0.0;
  double mag = 0.0;
  double tail = INFINITY;
  for (std::size_t i = 0; i < table.size(); ++i) {
    const cplx rho = table.rho(i);
    const cplx a = term(rho, table.derivatives[i]);
    const cplx b = term(std::conj(rho), std::conj(table.derivatives[i]));
    sum += a;
    sum += b;
    const double pair = std::abs(a) + std::abs(b);
    mag += pair;
    if (table.ordinates[i] >= reach) tail = std::min(tail, tail_from(table.ordinates[i], pair));
  }
  const double err = tail + 16.0 * 2.220446049250313e-16 * mag;
  return {sign * sum, err, table.size()};
}

}  // namespace

ZeroSum zero_sum_lambda(cplx s1, cplx s2, const ZeroTable& table) {
  return zero_sum(s1, s2, table, -1.0, [](cplx, cplx) { return cplx(1.0); });
}

ZeroSum zero_sum_tilde(const arith::SeriesSpec& spec, cplx s1, cplx s2, const ZeroTable& table) {
  if (spec.is_von_mangoldt()) throw DomainError("zero_sum_tilde called with the von Mangoldt series");
  return zero_sum(s1, s2, table, 1.0,
                  [&spec](cplx rho, cplx dzeta) { return arith::alpha_series(spec, rho) / dzeta; });
}

}  // namespace ddseries::zeros
