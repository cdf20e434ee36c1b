#include <cmath>
#include <limits>

#include "weights.hpp"

namespace ddseries::arith {
namespace detail {

// Rosser-Schoenfeld: psi(x) < 1.03883 x for x > 0.
constexpr double chebyshev_constant = 1.03883;

double WeightBound::abscissa() const {
  switch (type) {
    case Type::Unit: return 1.0;
    case Type::Linear: return 2.0;
    case Type::Chebyshev: return 1.0;
    case Type::Power: return 1.0 + kappa;
  }
  return 1.0;
}

double WeightBound::tail(double n_cut, double p) const {
  if (p <= abscissa()) return std::numeric_limits<double>::infinity();
  switch (type) {
    case Type::Unit: return std::pow(n_cut, 1.0 - p) / (p - 1.0);
    case Type::Linear: return std::pow(n_cut, 2.0 - p) / (p - 2.0);
    // Partial summation against psi(x) < c x.
    case Type::Chebyshev: return chebyshev_constant * p * std::pow(n_cut, 1.0 - p) / (p - 1.0);
    case Type::Power: return scale * std::pow(n_cut, 1.0 + kappa - p) / (p - 1.0 - kappa);
  }
  return std::numeric_limits<double>::infinity();
}

WeightBound weight_bound(const CoeffTable& coeffs, const SeriesSpec& spec) {
  switch (coeffs.kind()) {
    case CoeffKind::VonMangoldt: return {WeightBound::Type::Chebyshev};
    case CoeffKind::EulerPhi:
    case CoeffKind::Identity: return {WeightBound::Type::Linear};
    case CoeffKind::Custom: {
      const double kappa = std::max(0.0, spec.delta - 1.0);
      double scale = 0.0;
      for (std::size_t n = 1; n <= coeffs.n_max(); ++n)
        scale = std::max(scale, std::fabs(coeffs[n]) * std::pow(double(n), -kappa));
      return {WeightBound::Type::Power, scale, kappa};
    }
    default: return {WeightBound::Type::Unit};
  }
}

std::size_t cutoff_for(const std::function<double(double)>& bound, double target, std::size_t limit) {
  double hi = 1.0;
  while (bound(hi) > target) {
    hi *= 2.0;
    if (hi > 4.0 * double(limit) + 4.0) return 0;
  }
  double lo = std::max(1.0, hi / 2.0);
  if (bound(lo) <= target) return std::size_t(lo);
  while (hi - lo > 1.0) {
    const double mid = std::floor((lo + hi) / 2.0);
    (bound(mid) <= target ? hi : lo) = mid;
  }
  if (hi > double(limit)) return 0;
  return std::size_t(hi);
}

}  // namespace detail

SeriesValue dirichlet_eval(const CoeffTable& coeffs, const SeriesSpec& spec, cplx s, double tol) {
  if (!(tol > 0.0)) throw DomainError("dirichlet_eval: tolerance must be positive");
  const auto wb = detail::weight_bound(coeffs, spec);
  const double sigma = s.real();
  if (sigma <= wb.abscissa() + 0.05)
    throw DomainError("dirichlet_eval: Re s too close to the abscissa of absolute convergence");
  auto bound = [&](double n) { return wb.tail(n, sigma); };
  const std::size_t n_cut = detail::cutoff_for(bound, 0.5 * tol, coeffs.n_max());
  if (n_cut == 0)
    throw ToleranceError("dirichlet_eval: coefficient table too short for tolerance", bound(double(coeffs.n_max())));
  cplx sum = 0.0;
  double mag = 0.0;
  for (std::size_t n = 1; n <= n_cut; ++n) {
    const double b = coeffs[n];
    if (b == 0.0) continue;
    const cplx t = b * std::exp(-s * std::log(double(n)));
    sum += t;
    mag += std::abs(t);
  }
  const double err = bound(double(n_cut)) + 16.0 * std::numeric_limits<double>::epsilon() * mag;
  return {sum, err, n_cut};
}

namespace {

// sum_{n >= k} n^{-a} by Euler-Maclaurin at k (k large).
cplx power_tail(cplx a, double k) {
  const cplx p = std::exp(-a * std::log(k));
  return p * k / (a - 1.0) + 0.5 * p + a * p / (12.0 * k) -
         a * (a + 1.0) * (a + 2.0) * p / (720.0 * k * k * k);
}

}  // namespace

SeriesValue chebyshev_series(const CoeffTable& lambda, cplx s) {
  if (lambda.kind() != CoeffKind::VonMangoldt) throw DomainError("chebyshev_series needs a von Mangoldt table");
  if (s.real() <= 2.0) throw DomainError("chebyshev_series: needs Re s > 2");
  const std::size_t n_top = lambda.n_max();
  if (n_top < 100) throw DomainError("chebyshev_series: table too short");
  cplx sum = 0.0;
  double psi = 0.0;
  double mag = 0.0;
  double worst = 0.0;
  for (std::size_t n = 2; n <= n_top; ++n) {
    psi += lambda[n - 1];
    const cplx t = psi * std::exp(-s * std::log(double(n)));
    sum += t;
    mag += std::abs(t);
    const double x = double(n - 1);
    if (2 * (n - 1) >= n_top) worst = std::max(worst, std::fabs(psi - x) / x);
  }
  const double k = double(n_top + 1);
  sum += power_tail(s - 1.0, k) - power_tail(s, k);
  const double err = worst * std::abs(power_tail(cplx(s.real() - 1.0), k)) +
                     16.0 * std::numeric_limits<double>::epsilon() * mag;
  return {sum, err, n_top};
}

}  // namespace ddseries::arith
