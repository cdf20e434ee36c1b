#include <cmath>
#include <limits>
#include <sstream>

#include "ddseries/continuation.hpp"
#include "ddseries/special.hpp"

namespace ddseries::continuation {
namespace {

using special::binomial;
using special::zeta;
using special::zeta_jet;

constexpr double eps = std::numeric_limits<double>::epsilon();
constexpr int max_shift = 40;

std::vector<SingularityTag> guard(const arith::SeriesSpec& series, cplx s1, cplx s2,
                                  const zeros::ZeroTable& table) {
  auto tags = classify(series, s1, s2, table, inflate_distance);
  std::vector<SingularityTag> hits;
  for (const auto& t : tags)
    if (t.distance < refuse_distance) hits.push_back(t);
  if (!hits.empty()) {
    std::ostringstream msg;
    msg << "point lies on a singular set:";
    for (const auto& t : hits) msg << ' ' << t.label();
    throw SingularPointError(msg.str(), hits);
  }
  return tags;
}

contour::ContourSpec choose_contour(const EvalConfig& config, cplx s1, cplx s2) {
  contour::ContourSpec c;
  c.epsilon = config.epsilon;
  c.step = config.step;
  c.max_height = config.max_height;
  if (config.n_shift) {
    c.n_shift = *config.n_shift;
  } else {
    c.n_shift = contour::minimal_shift(config.epsilon, s1, s2) + 1;
    if (c.n_shift > max_shift) throw DomainError("point needs a contour shift beyond 40");
  }
  c.validate();
  if (!contour::admissible(c.n_shift, c.epsilon, s1, s2))
    throw DomainError("requested contour shift is not admissible at this point");
  return c;
}

double factorial(int n) {
  double f = 1.0;
  for (int j = 2; j <= n; ++j) f *= j;
  return f;
}

// Gamma(s2 - delta)/Gamma(s2), finite at the poles of Gamma(s2) for integer delta.
cplx gamma_ratio(cplx s2, double delta) {
  if (delta == std::floor(delta) && delta >= 0.0) {
    cplx p = 1.0;
    for (int j = 1; j <= int(delta); ++j) p *= s2 - double(j);
    return 1.0 / p;
  }
  if (special::is_nonpositive_integer(s2)) return 0.0;
  return std::exp(special::log_gamma(s2 - delta) - special::log_gamma(s2));
}

// Accumulates a sum and the magnitudes of its summands.
struct Acc {
  cplx sum = 0.0;
  double mag = 0.0;
  void add(cplx t) {
    sum += t;
    mag += std::abs(t);
  }
};

EvalResult finish(TermBreakdown terms, double mag, const zeros::ZeroSum& zs, const contour::LineIntegral& li,
                  int n_used, std::vector<SingularityTag> nearby) {
  EvalResult r;
  r.terms = terms;
  r.value = terms.total();
  r.error_estimate = zs.error_estimate + li.error_estimate + 64.0 * eps * mag;
  double closest = inflate_distance;
  for (const auto& t : nearby) closest = std::min(closest, t.distance);
  if (!nearby.empty()) r.error_estimate /= closest;
  r.n_used = n_used;
  r.zeros_used = zs.zeros_used;
  r.nearby = std::move(nearby);
  return r;
}

}  // namespace

EvalResult eval_lambda(cplx s1, cplx s2, const zeros::ZeroTable& table, const EvalConfig& config) {
  const auto series = arith::SeriesSpec::von_mangoldt();
  auto nearby = guard(series, s1, s2, table);
  const auto contour = choose_contour(config, s1, s2);
  const int n = contour.n_shift;
  const cplx u = s1 + s2;
  const auto& lc = special::default_laurent_constants();

  TermBreakdown t{};
  double mag = 0.0;
  t.main_pole = zeta(u - 1.0) / (s2 - 1.0);
  t.origin_term = -special::log_two_pi * zeta(u);
  mag += std::abs(t.main_pole) + std::abs(t.origin_term);

  Acc odd, even;
  for (int k = 1; k < n; ++k) {
    const cplx b = binomial(-s2, k);
    if (k % 2 == 1) {
      odd.add(b * special::mangoldt_M(-double(k)) * zeta(u + double(k)));
    } else {
      const auto z = zeta_jet(u + double(k));
      const double fk = factorial(k);
      const cplx coef = -lc.a_at(k) + fk * lc.b_at(k);
      const cplx dr = special::digamma_ratio(s2, k);
      even.add(-b * coef * z.value);
      even.add(b * z.d1);
      even.add(dr / fk * z.value);
    }
  }
  t.odd_k_sum = odd.sum;
  t.even_k_sum = even.sum;
  mag += odd.mag + even.mag;

  const auto zs = zeros::zero_sum_lambda(s1, s2, table);
  t.zero_sum = zs.value;
  const auto li = contour::mb_tail_integral(series, s1, s2, contour, config.tol);
  t.tail_integral = li.value;
  mag += std::abs(zs.value) + std::abs(li.value);
  return finish(t, mag, zs, li, n, std::move(nearby));
}

EvalResult eval_tilde(const arith::SeriesSpec& series, cplx s1, cplx s2, const zeros::ZeroTable& table,
                      const EvalConfig& config) {
  if (series.is_von_mangoldt()) throw DomainError("eval_tilde called with the von Mangoldt series");
  if (series.alpha == arith::BaseSeries::Unknown || series.alpha == arith::BaseSeries::None)
    throw DomainError("continuation needs a closed form of Phi(s; alpha); unsupported series " + series.name());
  auto nearby = guard(series, s1, s2, table);
  const auto contour = choose_contour(config, s1, s2);
  const int n = contour.n_shift;
  const cplx u = s1 + s2;
  const auto& lc = special::default_laurent_constants();

  TermBreakdown t{};
  double mag = 0.0;
  t.origin_term = -2.0 * arith::alpha_series(series, 0.0) * zeta(u);
  mag += std::abs(t.origin_term);

  Acc odd, even;
  for (int k = 1; k < n; ++k) {
    const cplx b = binomial(-s2, k);
    const cplx a0 = arith::alpha_series(series, -double(k));
    if (k % 2 == 1) {
      if (a0 == cplx(0.0)) continue;
      odd.add(-b * double(k + 1) * a0 / special::bernoulli_value(k + 1) * zeta(u + double(k)));
    } else {
      const double z1 = lc.zeta_d1.at(k);
      const double z2 = lc.zeta_d2.at(k);
      const cplx a1 = arith::alpha_series_derivative(series, -double(k));
      const cplx ck = a1 / z1 - a0 * z2 / (2.0 * z1 * z1);
      const double fk = factorial(k);
      const double sign = (k / 2) % 2 ? -1.0 : 1.0;
      // k! Phi(-k)/zeta'(-k) written through zeta(1 + k).
      const cplx q = sign * 2.0 * std::pow(2.0 * special::pi, k) * a0 / zeta(1.0 + double(k)).real();
      const auto z = zeta_jet(u + double(k));
      even.add(b * q * lc.b_at(k) * z.value);
      even.add(-b * q * z.d1 / fk);
      even.add(b * ck * z.value);
      if (q != cplx(0.0)) even.add(-special::digamma_ratio(s2, k) * q / (fk * fk) * z.value);
    }
  }
  t.odd_k_sum = odd.sum;
  t.even_k_sum = even.sum;
  mag += odd.mag + even.mag;

  if (series.has_pole && series.delta != 1.0) {
    const double delta = series.delta;
    t.delta_pole = gamma_ratio(s2, delta) * special::gamma(delta) * arith::pole_residue(series) * zeta(u - delta);
    mag += std::abs(t.delta_pole);
  }

  const auto zs = zeros::zero_sum_tilde(series, s1, s2, table);
  t.zero_sum = zs.value;
  const auto li = contour::mb_tail_integral(series, s1, s2, contour, config.tol);
  t.tail_integral = li.value;
  mag += std::abs(zs.value) + std::abs(li.value);
  return finish(t, mag, zs, li, n, std::move(nearby));
}

EvalResult evaluate(const arith::SeriesSpec& series, cplx s1, cplx s2, const zeros::ZeroTable& table,
                    const EvalConfig& config) {
  if (series.is_von_mangoldt()) return eval_lambda(s1, s2, table, config);
  return eval_tilde(series, s1, s2, table, config);
}

void require_tolerance(const EvalResult& result, double tol) {
  if (!(result.error_estimate <= tol)) {
    std::ostringstream msg;
    msg << "error estimate " << result.error_estimate << " exceeds tolerance " << tol;
    throw ToleranceError(msg.str(), result.error_estimate);
  }
}

}  // namespace ddseries::continuation
