#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "ddseries/continuation.hpp"
#include "ddseries/special.hpp"
#include "support.hpp"

using namespace ddseries;
using namespace ddseries::continuation;
using arith::SeriesSpec;
using testing::bundled_zeros;

namespace {

std::set<std::string> labels(const SeriesSpec& spec, cplx s1, cplx s2, double tol = 1e-8) {
  std::set<std::string> out;
  for (const auto& t : classify(spec, s1, s2, bundled_zeros(), tol)) out.insert(t.label());
  return out;
}

EvalConfig with_shift(int n) {
  EvalConfig c;
  c.n_shift = n;
  return c;
}

}  // namespace

TEST_SUITE("continuation") {
  TEST_CASE("von Mangoldt series against a frozen double-sum value") {
    // oracle_double(Lambda, 2, 3, tol 1e-9) = 0.0793029753019
    const auto r = eval_lambda(2.0, 3.0, bundled_zeros());
    CHECK(std::abs(r.value - 0.0793029753019) < 2e-9);
    CHECK(r.error_estimate < 1e-8);
    CHECK(r.value == r.terms.total());
  }

  TEST_CASE("agreement with the double-sum oracle") {
    const auto& t = bundled_zeros();
    for (const auto& spec : {SeriesSpec::von_mangoldt(), SeriesSpec::moebius(), SeriesSpec::liouville()}) {
      const auto coeffs = arith::sieve(spec.coeff, 1'000'000);
      for (auto [s1, s2] : {std::pair<cplx, cplx>{2.0, 3.0}, {cplx(1.5, 0.5), 3.0}, {cplx(3.0, -2.0), cplx(2.6, 1.0)}}) {
        const auto o = arith::oracle_double(coeffs, spec, s1, s2, 1e-8);
        const auto e = evaluate(spec, s1, s2, t);
        INFO(spec.name(), " at ", s1, ", ", s2);
        CHECK(std::abs(o.value - e.value) <= o.error_estimate + e.error_estimate);
      }
    }
  }

  TEST_CASE("Chebyshev line s1 = 0") {
    const auto L = arith::sieve(arith::CoeffKind::VonMangoldt, 1'000'000);
    for (cplx s : {cplx(3.0), cplx(4.0), cplx(3.0, 2.0)}) {
      const auto e = eval_lambda(0.0, s, bundled_zeros());
      const auto c = arith::chebyshev_series(L, s);
      CHECK(std::abs(e.value - c.value) < 1e-6);
    }
  }

  TEST_CASE("shift invariance") {
    const auto& t = bundled_zeros();
    const std::pair<cplx, cplx> pts[] = {{2.0, 3.0}, {cplx(-1.3, 2.0), cplx(0.4, -1.0)}, {cplx(-2.5, 0.5), cplx(-3.5, 0.3)}};
    for (const auto& spec : {SeriesSpec::von_mangoldt(), SeriesSpec::moebius(), SeriesSpec::euler_phi(),
                             SeriesSpec::liouville()}) {
      for (const auto& [s1, s2] : pts) {
        const int n = contour::minimal_shift(0.25, s1, s2);
        const auto a = evaluate(spec, s1, s2, t, with_shift(n));
        const auto b = evaluate(spec, s1, s2, t, with_shift(n + 2));
        const auto c = evaluate(spec, s1, s2, t, with_shift(n + 5));
        INFO(spec.name(), " at ", s1, ", ", s2);
        CHECK(std::abs(a.value - b.value) <= a.error_estimate + b.error_estimate);
        CHECK(std::abs(a.value - c.value) < 1e-8);
      }
    }
  }

  TEST_CASE("conjugation symmetry") {
    const auto& t = bundled_zeros();
    const cplx s1(-0.8, 1.7), s2(0.3, -2.2);
    for (const auto& spec : {SeriesSpec::von_mangoldt(), SeriesSpec::moebius(), SeriesSpec::euler_phi(),
                             SeriesSpec::liouville()}) {
      const auto a = evaluate(spec, s1, s2, t).value;
      const auto b = evaluate(spec, std::conj(s1), std::conj(s2), t).value;
      CHECK(std::abs(a - std::conj(b)) < 1e-12 * std::max(1.0, std::abs(a)));
    }
  }

  TEST_CASE("pole at s2 = 1") {
    // eps * Phi(2, 1 + eps) tends to zeta(2).
    const auto& t = bundled_zeros();
    auto g = [&](double e) { return (eval_lambda(2.0, 1.0 + e, t).value * e).real(); };
    const double g0 = g(1e-2), g1 = g(5e-3), g2 = g(2.5e-3);
    const double limit = (8.0 * g2 - 6.0 * g1 + g0) / 3.0;
    CHECK(std::abs(limit - special::zeta(2.0).real()) < 1e-4);
  }

  TEST_CASE("singular points are refused with tags") {
    const auto& t = bundled_zeros();
    try {
      eval_lambda(0.0, 1.0, t);
      FAIL("expected refusal");
    } catch (const SingularPointError& e) {
      std::set<std::string> got;
      for (const auto& tag : e.tags()) got.insert(tag.label());
      CHECK(got.count("S2eq1") == 1);
    }
    CHECK_THROWS_AS(eval_tilde(SeriesSpec::moebius(), 0.0, 0.0, t), SingularPointError);
    CHECK_THROWS_AS(eval_tilde(SeriesSpec::von_mangoldt(), 2.0, 3.0, t), DomainError);
    CHECK_THROWS_AS(eval_tilde(SeriesSpec::custom(1.0), 2.0, 3.0, t), DomainError);
  }

  TEST_CASE("error bars inflate near singular sets") {
    const auto& t = bundled_zeros();
    const auto far = eval_lambda(0.3, 1.1, t);
    const auto near = eval_lambda(0.3, 1.0001, t);
    CHECK(far.nearby.empty());
    REQUIRE(near.nearby.size() == 1);
    CHECK(near.nearby[0].label() == "S2eq1");
    CHECK(near.error_estimate > far.error_estimate);
  }

  TEST_CASE("requested tolerance") {
    const auto r = eval_tilde(SeriesSpec::moebius(), 2.0, 3.0, bundled_zeros());
    CHECK_NOTHROW(require_tolerance(r, 1e-6));
    CHECK_THROWS_AS(require_tolerance(r, 1e-30), ToleranceError);
  }

  TEST_CASE("classifier examples") {
    const auto L = SeriesSpec::von_mangoldt();
    CHECK(labels(L, 1.0, 1.0) == std::set<std::string>{"S2eq1", "SumInt(l=0)"});
    CHECK(labels(L, 0.5, -3.0) == std::set<std::string>{"S2NegInt(l=3)"});
    CHECK(labels(L, cplx(10, 10), cplx(10, -9)).empty());
    CHECK(labels(L, 0.5, -1.0).empty());  // s2 = -1 is not on the list
    const auto rho1 = bundled_zeros().rho(0);
    CHECK(labels(L, 0.1, rho1 - 2.0) == std::set<std::string>{"S2Zero(l=2,n=1)"});
    CHECK(labels(L, 1.0 + std::conj(rho1) - 0.25, 0.25) == std::set<std::string>{"SumZero(n=-1)"});
    const auto mu = SeriesSpec::moebius();
    CHECK(labels(mu, 0.0, 1.0) == std::set<std::string>{"SumInt(l=0)"});
    CHECK(labels(mu, 0.5, 1.0).empty());
    const auto phi = SeriesSpec::euler_phi();
    CHECK(labels(phi, 0.5, 1.0) == std::set<std::string>{"S2Delta(l=1)"});
    const auto tags = classify(L, 0.3, 1.0 + 1e-4, bundled_zeros(), 1e-3);
    REQUIRE(tags.size() == 1);
    CHECK(std::abs(tags[0].distance - 1e-4) < 1e-12);
  }

  TEST_CASE("grid scans") {
    const auto& t = bundled_zeros();
    ScanWindow w;
    w.re_s1 = {-2.0, 2.0, 11};
    w.im_s1 = {-2.0, 2.0, 11};
    w.re_s2 = {3.0, 3.0, 1};
    w.im_s2 = {0.0, 0.0, 1};
    const auto rows = scan_grid(SeriesSpec::von_mangoldt(), w, t, {}, 4);
    REQUIRE(rows.size() == 121);
    // The grid point s1 = -2 lies on s1 + s2 = 1; nothing else is singular.
    std::vector<std::string> hit;
    for (const auto& r : rows)
      if (!r.value) hit.push_back(r.tags.at(0).label());
    CHECK(hit == std::vector<std::string>{"SumInt(l=1)"});

    ScanWindow line;
    line.re_s1 = {0.0, 0.0, 1};
    line.im_s1 = {0.0, 0.0, 1};
    line.re_s2 = {0.5, 1.5, 11};
    line.im_s2 = {0.0, 0.0, 1};
    const auto lrows = scan_grid(SeriesSpec::von_mangoldt(), line, t);
    REQUIRE(lrows.size() == 11);
    CHECK_FALSE(lrows[5].value);
    CHECK(lrows[5].tags.at(0).label() == "S2eq1");

    // Deterministic output regardless of the worker count.
    std::ostringstream a, b, j;
    write_csv(a, scan_grid(SeriesSpec::moebius(), w, t, {}, 1));
    write_csv(b, scan_grid(SeriesSpec::moebius(), w, t, {}, 3));
    CHECK(a.str() == b.str());
    CHECK(a.str().rfind("re_s1,im_s1,re_s2,im_s2,re_val,im_val,err,singular_tags\n", 0) == 0);
    write_json_lines(j, lrows);
    const std::string lines = j.str();
    CHECK(std::count(lines.begin(), lines.end(), '\n') == 11);
  }

  TEST_CASE("CSV number formatting") {
    CHECK(format_double(0.1) == "0.1");
    CHECK(format_double(-2.0) == "-2");
    CHECK(std::stod(format_double(0.07930297543567377)) == 0.07930297543567377);
  }
}
