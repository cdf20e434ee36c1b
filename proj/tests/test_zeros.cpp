#include <doctest.h>

#include <cmath>
#include <sstream>

#include "ddseries/special.hpp"
#include "ddseries/zeros.hpp"
#include "support.hpp"

using namespace ddseries;
using namespace ddseries::zeros;
using testing::bundled_zeros;

TEST_SUITE("zeros") {
  TEST_CASE("bundled table") {
    const auto& t = bundled_zeros();
    REQUIRE(t.size() == 100);
    CHECK(std::abs(t.ordinates[0] - first_ordinate) < 1e-13);
    CHECK(std::abs(t.ordinates[99] - 236.52422966581620580) < 1e-10);
    CHECK(t.assume_rh);
    CHECK(t.rho(0).real() == 0.5);
    for (std::size_t i = 0; i < t.size(); ++i) CHECK(std::abs(t.derivatives[i]) > 0.1);
    CHECK(t.prefix(30).size() == 30);
    CHECK(t.prefix(500).size() == 100);
  }

  TEST_CASE("reading and validation") {
    std::istringstream ok("# two zeros\n14.134725141734693790\n21.022039638771554993 1\n");
    const auto t = read_zeros(ok);
    CHECK(t.size() == 2);
    CHECK(t.derivatives.size() == 2);

    std::istringstream off("14.0\n");
    CHECK_THROWS_AS(read_zeros(off), ValidationError);
    std::istringstream corrupt("14.134725141734693790\n21.5\n");
    try {
      read_zeros(corrupt);
      FAIL("corrupted entry accepted");
    } catch (const ValidationError& e) {
      CHECK(std::string(e.what()).find("|zeta(rho)|") != std::string::npos);
    }
    std::istringstream unordered("21.022039638771554993\n14.134725141734693790\n");
    CHECK_THROWS_AS(read_zeros(unordered), ParseError);
    std::istringstream doubled("14.134725141734693790 2\n");
    CHECK_THROWS_AS(read_zeros(doubled), ValidationError);
    std::istringstream junk("14,13\n");
    CHECK_THROWS_AS(read_zeros(junk), ParseError);
    std::istringstream empty("# nothing\n");
    CHECK(read_zeros(empty).empty());
    std::istringstream explicit_re("14.134725141734693790 1 0.5\n");
    const auto r = read_zeros(explicit_re);
    CHECK_FALSE(r.assume_rh);
    CHECK(r.rho(0) == cplx(0.5, 14.134725141734693790));
  }

  TEST_CASE("residual report") {
    std::istringstream in("14.134725141734693790\n21.5\n");
    const auto res = residuals(parse_zeros(in));
    REQUIRE(res.size() == 2);
    CHECK(res[0].residual < 1e-12);
    CHECK(res[1].residual > 1e-3);
  }

  TEST_CASE("zero sums vanish on the poles of Gamma(s2)") {
    const auto& t = bundled_zeros();
    for (double s2 : {0.0, -1.0, -3.0}) {
      CHECK(zero_sum_lambda(0.7, s2, t).value == cplx(0.0));
      CHECK(zero_sum_tilde(arith::SeriesSpec::moebius(), 0.7, s2, t).value == cplx(0.0));
    }
  }

  TEST_CASE("zero sums are dominated by the first zeros") {
    const auto& t = bundled_zeros();
    const auto full = zero_sum_lambda(2.0, 3.0, t);
    const auto part = zero_sum_lambda(2.0, 3.0, t.prefix(30));
    CHECK(std::abs(full.value - part.value) < 1e-20);
    const auto mu = arith::SeriesSpec::moebius();
    const auto tf = zero_sum_tilde(mu, 2.0, 3.0, t);
    CHECK(std::abs(tf.value) < 1e-10);
    CHECK(std::abs(tf.value - zero_sum_tilde(mu, 2.0, 3.0, t.prefix(30)).value) < 1e-15);
  }

  TEST_CASE("zero-sum error estimates shrink with the table") {
    const auto& t = bundled_zeros();
    const cplx s1(0.3, 2.0), s2(-1.5, 4.0);
    double last = INFINITY;
    for (std::size_t n : {20, 40, 60, 80, 100}) {
      const double e = zero_sum_lambda(s1, s2, t.prefix(n)).error_estimate;
      CHECK(e <= last);
      last = e;
    }
    CHECK(std::abs(zero_sum_lambda(s1, s2, t).value - zero_sum_lambda(s1, s2, t.prefix(40)).value) <=
          zero_sum_lambda(s1, s2, t.prefix(40)).error_estimate);
  }

  TEST_CASE("conjugation symmetry") {
    const auto& t = bundled_zeros();
    const cplx s1(0.4, 3.0), s2(-0.7, -5.0);
    const auto a = zero_sum_lambda(s1, s2, t).value;
    const auto b = zero_sum_lambda(std::conj(s1), std::conj(s2), t).value;
    CHECK(std::abs(a - std::conj(b)) <= 1e-14 * std::max(1.0, std::abs(a)));
    for (const auto& spec : {arith::SeriesSpec::moebius(), arith::SeriesSpec::euler_phi(),
                             arith::SeriesSpec::liouville()}) {
      const auto c = zero_sum_tilde(spec, s1, s2, t).value;
      const auto d = zero_sum_tilde(spec, std::conj(s1), std::conj(s2), t).value;
      CHECK(std::abs(c - std::conj(d)) <= 1e-14 * std::max(1.0, std::abs(c)));
    }
  }

  TEST_CASE("short tables are refused at large heights") {
    const auto t = bundled_zeros().prefix(3);
    CHECK_THROWS_AS(zero_sum_lambda(0.5, cplx(3.0, 20.0), t), ToleranceError);
    CHECK_NOTHROW(zero_sum_lambda(0.5, cplx(3.0, 20.0), bundled_zeros()));
    CHECK_THROWS_AS(zero_sum_tilde(arith::SeriesSpec::von_mangoldt(), 0.5, 3.0, bundled_zeros()), DomainError);
  }
}
