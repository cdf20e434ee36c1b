#include "suite.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <ostream>
#include <random>
#include <set>
#include <sstream>

#include "ddseries/arith.hpp"
#include "ddseries/continuation.hpp"
#include "ddseries/contour.hpp"
#include "ddseries/reverse.hpp"
#include "ddseries/special.hpp"

namespace ddseries::suite {
namespace {

using arith::SeriesSpec;
using continuation::EvalConfig;

std::string sci(double x) {
  std::ostringstream s;
  s << std::scientific << std::setprecision(2) << x;
  return s.str();
}

std::string fixed(double x, int digits = 10) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(digits) << x;
  return s.str();
}

// Times body and fills in id, title and seconds.
CheckResult timed(int id, std::string title, const std::function<void(CheckResult&)>& body) {
  CheckResult r;
  r.id = id;
  r.title = std::move(title);
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(r);
  } catch (const std::exception& e) {
    r.status = Status::Fail;
    r.detail += (r.detail.empty() ? "" : "; ") + std::string("unexpected error: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

CheckResult skipped(int id, std::string title) {
  return {id, std::move(title), Status::Skipped, "needs a zero table", 0.0};
}

void within_runtime(CheckResult& r, double limit, const std::chrono::steady_clock::time_point& t0) {
  const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (s >= limit) {
    r.status = Status::Fail;
    r.detail += "; runtime " + fixed(s, 1) + " s exceeds " + fixed(limit, 0) + " s";
  }
}

// Mean of f over the circle |z - center| = radius, i.e. the constant term
// of the Laurent series of f at center. Trapezoid rule, spectrally accurate.
template <class F>
cplx circle_mean(F f, cplx center, double radius, int nodes = 64) {
  cplx sum = 0.0;
  for (int j = 0; j < nodes; ++j) {
    const double theta = 2.0 * special::pi * j / nodes;
    sum += f(center + radius * std::polar(1.0, theta));
  }
  return sum / double(nodes);
}

}  // namespace

std::string to_string(Status s) {
  switch (s) {
    case Status::Pass: return "PASS";
    case Status::Fail: return "FAIL";
    case Status::Skipped: return "SKIP";
  }
  return "?";
}

std::string format_line(const CheckResult& r) {
  std::ostringstream s;
  s << to_string(r.status) << " [" << r.id << "] " << r.title << " (" << fixed(r.seconds, 1) << " s)";
  if (!r.detail.empty()) s << ": " << r.detail;
  return s.str();
}

CheckResult check_mu_origin(const zeros::ZeroTable& table) {
  const std::string title = "Moebius reverse value at the origin is 13";
  if (table.empty()) return skipped(1, title);
  return timed(1, title, [&](CheckResult& r) {
    const auto t0 = std::chrono::steady_clock::now();
    const cplx closed = reverse::reverse_mu_closed(reverse::MuPoint::Origin);
    const auto num = reverse::reverse_numeric(SeriesSpec::moebius(), 0.0, 0.0, table);
    const double dev = std::abs(num.value - 13.0);
    const bool ok = closed == cplx(13.0) && dev <= 1e-3 && table.size() >= 100;
    r.status = ok ? Status::Pass : Status::Fail;
    r.detail = "closed " + fixed(closed.real(), 1) + ", numeric " + fixed(num.value.real()) + " (est " +
               sci(num.error_estimate) + "), |numeric - 13| = " + sci(dev) + " with " +
               std::to_string(table.size()) + " zeros";
    within_runtime(r, 60.0, t0);
  });
}

CheckResult check_lambda_reverse(const zeros::ZeroTable& table) {
  const std::string title = "von Mangoldt reverse values at (0,0), (-1,0), (-1,-1)";
  if (table.empty()) return skipped(2, title);
  return timed(2, title, [&](CheckResult& r) {
    const auto t0 = std::chrono::steady_clock::now();
    using special::zeta_jet;
    const double zd1_1 = zeta_jet(-1.0).d1.real();
    const double zd1_3 = zeta_jet(-3.0).d1.real();
    const auto j2 = zeta_jet(-2.0);
    struct Case {
      double u1, u2, expected;
    };
    const Case cases[] = {
        {0.0, 0.0, 0.5 * special::log_two_pi + 1.0 / 12.0 - 12.0 * zd1_1},
        {-1.0, 0.0,
         special::log_two_pi / 12.0 - 0.75 - j2.d2.real() / (4.0 * j2.d1.real()) + special::euler_gamma / 2.0},
        {-1.0, -1.0, -1.0 / 240.0 - zd1_1 - 20.0 * zd1_3},
    };
    bool ok = true;
    std::string detail;
    for (const auto& c : cases) {
      detail += detail.empty() ? "" : "; ";
      detail += "(" + fixed(c.u1, 0) + "," + fixed(c.u2, 0) + ") expected " + fixed(c.expected);
      try {
        const auto num = reverse::reverse_numeric(SeriesSpec::von_mangoldt(), c.u1, c.u2, table);
        const double dev = std::abs(num.value - c.expected);
        detail += ", numeric " + fixed(num.value.real()) + ", deviation " + sci(dev);
        ok = ok && dev <= 1e-4;
      } catch (const DivergenceError& e) {
        detail += std::string(", numeric limit does not exist: ") + e.what();
        ok = false;
      }
    }
    r.status = ok ? Status::Pass : Status::Fail;
    r.detail = detail;
    within_runtime(r, 120.0, t0);
  });
}

CheckResult check_oracle_equivalence(const zeros::ZeroTable& table) {
  const std::string title = "continuation agrees with the direct double sum";
  if (table.empty()) return skipped(3, title);
  return timed(3, title, [&](CheckResult& r) {
    const cplx points[][2] = {{2.0, 3.0}, {2.5, 3.5}, {cplx(1.5, 0.5), 3.0}};
    bool ok = true;
    std::string detail;
    for (const auto& spec : {SeriesSpec::von_mangoldt(), SeriesSpec::moebius(), SeriesSpec::euler_phi(),
                             SeriesSpec::liouville()}) {
      const auto t0 = std::chrono::steady_clock::now();
      // The totient sum converges slowly; a looser oracle tolerance keeps
      // the combined budget below 1e-5.
      const bool slow = spec.coeff == arith::CoeffKind::EulerPhi;
      const auto coeffs = arith::sieve(spec.coeff, slow ? 2'000'000 : 1'000'000);
      const double oracle_tol = slow ? 5e-6 : 1e-8;
      double worst_diff = 0.0, worst_budget = 0.0;
      bool series_ok = true;
      for (const auto& p : points) {
        const auto o = arith::oracle_double(coeffs, spec, p[0], p[1], oracle_tol);
        const auto e = continuation::evaluate(spec, p[0], p[1], table);
        const double diff = std::abs(o.value - e.value);
        const double budget = o.error_estimate + e.error_estimate;
        worst_diff = std::max(worst_diff, diff);
        worst_budget = std::max(worst_budget, budget);
        series_ok = series_ok && diff <= budget && budget <= 1e-5;
      }
      const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      series_ok = series_ok && secs < 300.0;
      ok = ok && series_ok;
      detail += (detail.empty() ? "" : "; ") + spec.name() + " max diff " + sci(worst_diff) + " vs budget " +
                sci(worst_budget) + " (" + fixed(secs, 1) + " s)";
    }
    r.status = ok ? Status::Pass : Status::Fail;
    r.detail = detail;
  });
}

CheckResult check_chebyshev(const zeros::ZeroTable& table) {
  const std::string title = "value on s1 = 0 equals the Chebyshev psi series";
  if (table.empty()) return skipped(4, title);
  return timed(4, title, [&](CheckResult& r) {
    const auto t0 = std::chrono::steady_clock::now();
    const auto lambda = arith::sieve(arith::CoeffKind::VonMangoldt, 1'000'000);
    bool ok = true;
    std::string detail;
    for (double s : {3.0, 4.0}) {
      const auto e = continuation::eval_lambda(0.0, s, table);
      const auto c = arith::chebyshev_series(lambda, s);
      const double diff = std::abs(e.value - c.value);
      ok = ok && diff <= 1e-6;
      detail += (detail.empty() ? "" : "; ") + std::string("s = ") + fixed(s, 0) + ": diff " + sci(diff);
    }
    r.status = ok ? Status::Pass : Status::Fail;
    r.detail = detail;
    within_runtime(r, 60.0, t0);
  });
}

CheckResult check_shift_invariance(const zeros::ZeroTable& table) {
  const std::string title = "value independent of the contour shift N";
  if (table.empty()) return skipped(5, title);
  return timed(5, title, [&](CheckResult& r) {
    const auto t0 = std::chrono::steady_clock::now();
    std::mt19937_64 rng(20240611);
    std::uniform_real_distribution<double> re(-4.0, 4.0), im(-6.0, 6.0);
    double worst = 0.0;
    int accepted = 0;
    std::string where;
    while (accepted < 10) {
      const cplx s1(re(rng), im(rng));
      const cplx s2(re(rng), im(rng));
      const auto spec = accepted % 2 == 0 ? SeriesSpec::von_mangoldt() : SeriesSpec::moebius();
      if (!continuation::classify(spec, s1, s2, table, 0.05).empty()) continue;
      EvalConfig a, b;
      a.n_shift = contour::minimal_shift(a.epsilon, s1, s2) + 1;
      b.n_shift = *a.n_shift + 2;
      const double d = std::abs(continuation::evaluate(spec, s1, s2, table, a).value -
                                continuation::evaluate(spec, s1, s2, table, b).value);
      if (d > worst) {
        worst = d;
        where = spec.name();
      }
      ++accepted;
    }
    r.status = worst < 1e-8 ? Status::Pass : Status::Fail;
    r.detail = "10 points, largest |F_N - F_{N+2}| = " + sci(worst) + " (" + where + ")";
    within_runtime(r, 300.0, t0);
  });
}

CheckResult check_special_functions() {
  return timed(6, "special-function identities", [](CheckResult& r) {
    using namespace special;
    bool ok = true;
    std::string detail;

    const double zp2 = zeta_jet(-2.0).d1.real();
    const double expect = -zeta(3.0).real() / (4.0 * pi * pi);
    const double d_zp2 = std::abs(zp2 - expect);
    ok = ok && d_zp2 <= 1e-12;
    detail += "zeta'(-2) residual " + sci(d_zp2);

    // Both sides of zeta(s) = chi(s) zeta(1-s) by direct summation.
    double fe = 0.0;
    for (double x : {-0.4, -0.1, 0.25, 0.5, 0.75, 1.1, 1.4})
      for (double y : {-40.0, -20.0, -5.0, 0.5, 3.0, 14.134725, 25.0, 40.0}) {
        const cplx s(x, y);
        const cplx chi = std::pow(cplx(2.0), s) * std::pow(cplx(pi), s - 1.0) * sin_pi(s / 2.0) * gamma(1.0 - s);
        const cplx lhs = zeta(s);
        fe = std::max(fe, std::abs(lhs - chi * zeta(1.0 - s)) / std::max(1.0, std::abs(lhs)));
      }
    ok = ok && fe < 1e-9;
    detail += "; functional equation residual " + sci(fe);

    const auto& lc = default_laurent_constants();
    double bdev = 0.0;
    for (int l = 0; l <= 6; ++l) {
      const cplx q = circle_mean([](cplx z) { return gamma(z); }, -double(l), 0.5);
      bdev = std::max(bdev, std::abs(q - lc.b_at(l)));
    }
    ok = ok && bdev <= 1e-9;
    detail += "; b_l vs contour extraction " + sci(bdev);

    double cdev = 0.0;
    for (int k = 2; k <= 12; k += 2) {
      const cplx a = circle_mean([](cplx z) { return mangoldt_M(z); }, -double(k), 0.5);
      const cplx c = circle_mean([](cplx z) { return 1.0 / zeta(z); }, -double(k), 0.5);
      const double zp = zeta_jet(-double(k)).d1.real();
      cdev = std::max({cdev, std::abs(c * zp - a), std::abs(lc.c_at(k) * zp - lc.a_at(k)),
                       std::abs(a - lc.a_at(k))});
    }
    ok = ok && cdev <= 1e-9;
    detail += "; c_k zeta'(-k) - a_k " + sci(cdev);

    r.status = ok ? Status::Pass : Status::Fail;
    r.detail = detail;
  });
}

CheckResult check_classifier(const zeros::ZeroTable& table) {
  return timed(7, "singularity classifier on the labelled fixture", [&](CheckResult& r) {
    struct Entry {
      SeriesSpec spec;
      cplx s1, s2;
      std::set<std::string> labels;
      bool needs_zeros = false;
    };
    const auto L = SeriesSpec::von_mangoldt();
    const auto mu = SeriesSpec::moebius();
    const auto phi = SeriesSpec::euler_phi();
    const auto liou = SeriesSpec::liouville();
    const bool have = table.size() >= 5;
    auto rho = [&](int n) { return have ? table.rho(std::size_t(n - 1)) : cplx(0.5, 0.0); };
    auto crho = [&](int n) { return std::conj(rho(n)); };
    const cplx i(0.0, 1.0);

    const std::vector<Entry> fixture = {
        {L, 0.3, 1.0, {"S2eq1"}},
        {L, 0.3, -2.0, {"S2NegInt(l=2)"}},
        {L, 0.7, -5.0, {"S2NegInt(l=5)"}},
        {L, 0.5, 1.5, {"SumInt(l=0)"}},
        {L, -1.3, 2.3, {"SumInt(l=1)"}},
        {L, 0.25, -0.25, {"SumInt(l=2)"}},
        {L, cplx(3, 2), cplx(-10, -2), {"SumInt(l=9)"}},
        {L, 0.0, 0.0, {"SumInt(l=2)"}},
        {L, -1.0, 0.0, {"SumInt(l=3)"}},
        {L, 0.0, -3.0, {"SumInt(l=5)", "S2NegInt(l=3)"}},
        {L, -1.0, -2.0, {"SumInt(l=5)", "S2NegInt(l=2)"}},
        {L, 1.0, 1.0, {"S2eq1", "SumInt(l=0)"}},
        {L, 2.0, 3.0, {}},
        {L, 0.0, -1.0, {"SumInt(l=3)"}},
        {L, 0.3, 1.0 + 2e-6, {}},
        {L, 0.3, 1.0 + 5e-7, {"S2eq1"}},
        {L, 0.5 + 1.2e-6, 1.5, {"SumInt(l=0)"}},
        {L, 0.5 + 1.6e-6, 1.5, {}},
        {L, 0.1, rho(1), {"S2Zero(l=0,n=1)"}, true},
        {L, 0.1, rho(1) + 2e-6, {}, true},
        {L, 0.1, rho(1) + 5e-7 * i, {"S2Zero(l=0,n=1)"}, true},
        {L, 0.1, rho(2) - 1.0, {"S2Zero(l=1,n=2)"}, true},
        {L, 0.2, crho(3) - 2.0, {"S2Zero(l=2,n=-3)"}, true},
        {L, 0.3, rho(4) - 3.0, {"S2Zero(l=3,n=4)"}, true},
        {L, 0.4, crho(5), {"S2Zero(l=0,n=-5)"}, true},
        {L, rho(1) - 1.0, 2.0, {"SumZero(n=1)"}, true},
        {L, crho(2) + 0.5, 0.5, {"SumZero(n=-2)"}, true},
        {L, rho(3) + 3.0, -2.0, {"SumZero(n=3)", "S2NegInt(l=2)"}, true},
        {L, rho(4) - 1.5, 2.5, {"SumZero(n=4)"}, true},
        {L, crho(5) + 0.3, 0.7, {"SumZero(n=-5)"}, true},
        {L, 2.0, rho(1) - 1.0, {"SumZero(n=1)", "S2Zero(l=1,n=1)"}, true},
        {mu, 0.0, 0.0, {"SumInt(l=1)"}},
        {mu, -1.0, 0.0, {"SumInt(l=2)"}},
        {mu, 0.5, 0.5, {"SumInt(l=0)"}},
        {mu, 0.3, 1.0, {}},
        {mu, 0.5, -2.0, {"S2NegInt(l=2)"}},
        {mu, 1.0, -3.0, {"S2NegInt(l=3)", "SumInt(l=3)"}},
        {mu, rho(1), 1.0, {"SumZero(n=1)"}, true},
        {mu, 0.2, rho(2) - 2.0, {"S2Zero(l=2,n=2)"}, true},
        {mu, 0.0, -1.0, {"SumInt(l=2)"}},
        {mu, 2.0, 3.0, {}},
        {phi, 0.5, 2.0, {"S2Delta(l=0)"}},
        {phi, 0.5, 2.5, {"SumDelta"}},
        {phi, 0.3, -2.0, {"S2NegInt(l=2)", "S2Delta(l=4)"}},
        {phi, 0.3, 0.0, {"S2Delta(l=2)"}},
        {liou, 0.3, 0.5, {"S2Delta(l=0)"}},
        {liou, 0.5, -0.5, {"S2Delta(l=1)", "SumInt(l=1)"}},
        {liou, 1.0, 0.5, {"SumDelta", "S2Delta(l=0)"}},
        {liou, rho(1), 1.0, {"SumZero(n=1)"}, true},
        {liou, 2.0, 3.0, {}},
    };

    int checked = 0, false_pos = 0, false_neg = 0;
    std::string first_miss;
    for (std::size_t k = 0; k < fixture.size(); ++k) {
      const auto& e = fixture[k];
      if (e.needs_zeros && !have) continue;
      ++checked;
      std::set<std::string> got;
      for (const auto& t : continuation::classify(e.spec, e.s1, e.s2, table, 1e-6)) got.insert(t.label());
      for (const auto& g : got)
        if (!e.labels.count(g)) ++false_pos;
      for (const auto& w : e.labels)
        if (!got.count(w)) ++false_neg;
      if (got != e.labels && first_miss.empty()) first_miss = "first mismatch at entry " + std::to_string(k + 1);
    }
    r.status = false_pos == 0 && false_neg == 0 ? Status::Pass : Status::Fail;
    r.detail = std::to_string(checked) + " of " + std::to_string(fixture.size()) + " points checked, " +
               std::to_string(false_pos) + " false positives, " + std::to_string(false_neg) + " false negatives";
    if (!first_miss.empty()) r.detail += "; " + first_miss;
  });
}

CheckResult check_divergence(const zeros::ZeroTable& table) {
  const std::string title = "divergence detection at odd-parity points";
  if (table.empty()) return skipped(8, title);
  return timed(8, title, [&](CheckResult& r) {
    const auto L = SeriesSpec::von_mangoldt();
    std::string missed, spurious;
    double worst_closed = 0.0;
    for (int total = 0; total <= 5; ++total)
      for (int n = 0; n <= total; ++n) {
        const int m = total - n;
        const bool must_diverge = total % 2 == 1 && n >= 2;
        const bool must_converge = total % 2 == 0 && total <= 4 && (n < 2 || m >= 1);
        if (!must_diverge && !must_converge) continue;
        const std::string pt = "(" + std::to_string(-m) + "," + std::to_string(-n) + ")";
        try {
          const auto num = reverse::reverse_numeric(L, -double(m), -double(n), table);
          if (must_diverge) {
            missed += (missed.empty() ? "" : " ") + pt + "=" + fixed(num.value.real());
          } else {
            worst_closed = std::max(worst_closed, std::abs(num.value - reverse::reverse_lambda_closed(m, n)));
          }
        } catch (const DivergenceError&) {
          if (must_converge) spurious += (spurious.empty() ? "" : " ") + pt;
        }
      }
    const bool ok = missed.empty() && spurious.empty() && worst_closed <= 1e-4;
    r.status = ok ? Status::Pass : Status::Fail;
    r.detail = "convergent points match closed forms within " + sci(worst_closed);
    if (!spurious.empty()) r.detail += "; spurious divergence at " + spurious;
    if (!missed.empty()) r.detail += "; finite limits where divergence was expected: " + missed;
  });
}

std::vector<CheckResult> run_all(const zeros::ZeroTable& table, std::ostream& out) {
  const std::function<CheckResult()> checks[] = {
      [&] { return check_mu_origin(table); },       [&] { return check_lambda_reverse(table); },
      [&] { return check_oracle_equivalence(table); }, [&] { return check_chebyshev(table); },
      [&] { return check_shift_invariance(table); }, [] { return check_special_functions(); },
      [&] { return check_classifier(table); },      [&] { return check_divergence(table); },
  };
  std::vector<CheckResult> results;
  for (const auto& c : checks) {
    results.push_back(c());
    out << format_line(results.back()) << '\n' << std::flush;
  }
  return results;
}

}  // namespace ddseries::suite
