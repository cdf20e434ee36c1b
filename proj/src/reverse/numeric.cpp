#include <algorithm>
#include <functional>
#include <sstream>

#include "ddseries/reverse.hpp"

namespace ddseries::reverse {
namespace {

struct Sample {
  cplx value;
  double error = 0.0;
};

using Path = std::function<Sample(double)>;

// Constant term at h = 0 of the quadratic through (h_i, h_i g_i), i.e. the
// coefficient A of a fit g(h) = A/h + B + C h.
cplx pole_coefficient(const std::array<double, 3>& h, const std::array<cplx, 3>& g) {
  cplx a = 0.0;
  for (int i = 0; i < 3; ++i) {
    double w = 1.0;
    for (int j = 0; j < 3; ++j)
      if (j != i) w *= -h[j] / (h[i] - h[j]);
    a += w * h[i] * g[i];
  }
  return a;
}

cplx constant_term(const std::array<double, 3>& h, const std::array<cplx, 3>& g, cplx a) {
  // With A known, B + C h is the line through the two smallest steps.
  const cplx r1 = g[1] - a / h[1];
  const cplx r2 = g[2] - a / h[2];
  return (h[1] * r2 - h[2] * r1) / (h[1] - h[2]);
}

LimitResult extrapolate(const Path& path, const LimitConfig& config, const std::string& what) {
  const std::array<double, 3> h{config.h0, config.h0 / 2.0, config.h0 / 4.0};
  LimitResult out;
  double sample_error = 0.0;
  for (int i = 0; i < 3; ++i) {
    const Sample s = path(h[i]);
    out.ladder[i] = s.value;
    sample_error = std::max(sample_error, s.error);
  }
  const auto& g = out.ladder;

  const cplx a = pole_coefficient(h, g);
  const cplx b = constant_term(h, g, a);
  if (std::abs(a) / h[2] > config.divergence_ratio * std::max(1.0, std::abs(b))) {
    std::ostringstream msg;
    msg << what << " diverges: the ladder behaves like A/h with |A| = " << std::abs(a);
    throw DivergenceError(msg.str());
  }

  // Richardson of order two: removes the h and h^2 terms.
  out.value = (8.0 * g[2] - 6.0 * g[1] + g[0]) / 3.0;
  const cplx first_order = 2.0 * g[2] - g[1];
  out.error_estimate = std::abs(out.value - first_order) + 5.0 * sample_error;
  return out;
}

Sample sample(const arith::SeriesSpec& series, cplx s1, cplx s2, const zeros::ZeroTable& table,
              const LimitConfig& config) {
  const auto r = continuation::evaluate(series, s1, s2, table, config.eval);
  return {r.value, r.error_estimate};
}

// Value of the continued series as the free variable tends to its target:
// the value itself when the target point is regular, otherwise a limit.
Sample limit_in(const arith::SeriesSpec& series, bool move_s1, cplx u, cplx fixed, const zeros::ZeroTable& table,
                const LimitConfig& config) {
  auto at = [&](cplx free) {
    return move_s1 ? sample(series, free, fixed, table, config) : sample(series, fixed, free, table, config);
  };
  try {
    return at(u);
  } catch (const continuation::SingularPointError&) {
  }
  const auto r = extrapolate([&](double h) { return at(u + h); }, config,
                             move_s1 ? "inner limit in s1" : "inner limit in s2");
  return {r.value, r.error_estimate};
}

}  // namespace

LimitResult reverse_numeric(const arith::SeriesSpec& series, cplx u1, cplx u2, const zeros::ZeroTable& table,
                            const LimitConfig& config) {
  return extrapolate([&](double h) { return limit_in(series, true, u1, u2 + h, table, config); }, config,
                     "outer limit in s2");
}

LimitResult regular_numeric(const arith::SeriesSpec& series, cplx u1, cplx u2, const zeros::ZeroTable& table,
                            const LimitConfig& config) {
  return extrapolate([&](double h) { return limit_in(series, false, u2, u1 + h, table, config); }, config,
                     "outer limit in s1");
}

}  // namespace ddseries::reverse
