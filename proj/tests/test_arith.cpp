#include <doctest.h>

#include <cmath>
#include <sstream>

#include "ddseries/arith.hpp"
#include "ddseries/special.hpp"

using namespace ddseries;
using namespace ddseries::arith;

TEST_SUITE("arith") {
  TEST_CASE("sieved values") {
    const auto L = sieve(CoeffKind::VonMangoldt, 12);
    CHECK(L[8] == std::log(2.0));
    CHECK(L[12] == 0.0);
    CHECK(L[1] == 0.0);
    const auto mu = sieve(CoeffKind::Moebius, 30);
    CHECK(mu[1] == 1.0);
    CHECK(mu[4] == 0.0);
    CHECK(mu[30] == -1.0);
    CHECK(sieve(CoeffKind::Liouville, 12)[12] == -1.0);
    CHECK(sieve(CoeffKind::EulerPhi, 10)[10] == 4.0);
    CHECK_THROWS_AS(sieve(CoeffKind::Custom, 10), DomainError);
    CHECK_THROWS_AS(L.at(13), DomainError);
  }

  TEST_CASE("coefficient invariants up to 10^4") {
    const std::size_t n = 10'000;
    const auto L = sieve(CoeffKind::VonMangoldt, n);
    const auto mu = sieve(CoeffKind::Moebius, n);
    const auto liou = sieve(CoeffKind::Liouville, n);
    for (std::size_t k = 1; k <= n; ++k) {
      CHECK((mu[k] == 0.0 || std::abs(mu[k]) == 1.0));
      CHECK(std::abs(liou[k]) == 1.0);
      if (L[k] != 0.0) {
        // k is a power of the prime exp(L[k])
        const auto p = std::llround(std::exp(L[k]));
        long long q = static_cast<long long>(k);
        while (q % p == 0) q /= p;
        CHECK(q == 1);
      }
    }
  }

  TEST_CASE("tilde convolution recognises the classical cases") {
    const std::size_t n = 200;
    const auto mu = sieve(CoeffKind::Moebius, n);
    const auto d = tilde_convolve(sieve(CoeffKind::One, n), mu);
    CHECK(d.kind() == CoeffKind::Delta1);
    CHECK(d[1] == 1.0);
    for (std::size_t k = 2; k <= n; ++k) CHECK(d[k] == 0.0);
    const auto phi = tilde_convolve(sieve(CoeffKind::Identity, n), mu);
    CHECK(phi.kind() == CoeffKind::EulerPhi);
    CHECK(phi[10] == 4.0);
    CHECK(phi[1] == 1.0);
    CHECK(tilde_convolve(sieve(CoeffKind::Delta1, n), mu).kind() == CoeffKind::Moebius);
    CHECK_THROWS_AS(tilde_convolve(sieve(CoeffKind::One, n), sieve(CoeffKind::Moebius, n + 1)), DomainError);
  }

  TEST_CASE("Moebius inversion round trip") {
    const std::size_t n = 2000;
    const auto mu = sieve(CoeffKind::Moebius, n);
    const auto ones = sieve(CoeffKind::One, n);
    for (auto kind : {CoeffKind::VonMangoldt, CoeffKind::Moebius, CoeffKind::EulerPhi, CoeffKind::Liouville,
                      CoeffKind::Delta1, CoeffKind::One, CoeffKind::Identity}) {
      const auto a = sieve(kind, n);
      const auto back = dirichlet_convolve(tilde_convolve(a, mu).raw(), ones.raw());
      double worst = 0.0;
      for (std::size_t k = 1; k <= n; ++k) worst = std::max(worst, std::abs(back[k] - a[k]));
      INFO(to_string(kind));
      if (kind == CoeffKind::VonMangoldt) CHECK(worst < 1e-12);
      else CHECK(worst == 0.0);
    }
    const auto sum_mu = dirichlet_convolve(mu.raw(), ones.raw());
    CHECK(sum_mu[1] == 1.0);
    for (std::size_t k = 2; k <= n; ++k) CHECK(sum_mu[k] == 0.0);
  }

  TEST_CASE("custom coefficient files") {
    std::istringstream good("# comment\n1 1\n3 2.5\n\n7 -1\n");
    const auto t = read_custom_coefficients(good, 10);
    CHECK(t.kind() == CoeffKind::Custom);
    CHECK(t[1] == 1.0);
    CHECK(t[2] == 0.0);
    CHECK(t[3] == 2.5);
    CHECK(t[7] == -1.0);
    std::istringstream unordered("3 1\n2 1\n");
    CHECK_THROWS_AS(read_custom_coefficients(unordered, 10), ParseError);
    std::istringstream junk("1 x\n");
    CHECK_THROWS_AS(read_custom_coefficients(junk, 10), ParseError);
  }

  TEST_CASE("series specifications") {
    CHECK(series_by_name("lambda").is_von_mangoldt());
    CHECK(series_by_name("mu").alpha == BaseSeries::One);
    const auto phi = series_by_name("phi");
    CHECK(phi.has_pole);
    CHECK(phi.delta == 2.0);
    CHECK(std::abs(pole_residue(phi) - 1.0 / special::zeta(2.0)) < 1e-15);
    const auto liou = series_by_name("liouville");
    CHECK(liou.delta == 0.5);
    CHECK(std::abs(pole_residue(liou) - 0.5 / special::zeta(0.5)) < 1e-15);
    CHECK_FALSE(series_by_name("mu").has_pole);
    CHECK_THROWS_AS(series_by_name("omega"), ParseError);
    CHECK(std::abs(alpha_series(phi, 3.0) - special::zeta(2.0)) < 1e-15);
  }

  TEST_CASE("single Dirichlet series") {
    const std::size_t n = 1'000'000;
    const auto one = sieve(CoeffKind::One, n);
    const auto z2 = dirichlet_eval(one, SeriesSpec::custom(1.0), 2.0, 1e-5);
    CHECK(std::abs(z2.value - special::pi * special::pi / 6.0) <= z2.error_estimate);
    CHECK(z2.error_estimate <= 1e-5);
    const auto L = sieve(CoeffKind::VonMangoldt, n);
    const auto m3 = dirichlet_eval(L, SeriesSpec::von_mangoldt(), 3.0, 1e-10);
    CHECK(std::abs(m3.value - special::mangoldt_M(3.0)) < 1e-9);
    const auto mu = sieve(CoeffKind::Moebius, n);
    for (double s : {3.0, 4.0}) {
      const auto inv = dirichlet_eval(mu, SeriesSpec::moebius(), s, 1e-10);
      CHECK(std::abs(inv.value * special::zeta(s) - 1.0) < 1e-8);
    }
    CHECK_THROWS_AS(dirichlet_eval(L, SeriesSpec::von_mangoldt(), 1.02, 1e-6), DomainError);
    CHECK_THROWS_AS(dirichlet_eval(sieve(CoeffKind::VonMangoldt, 100), SeriesSpec::von_mangoldt(), 1.5, 1e-12),
                    ToleranceError);
  }

  TEST_CASE("Chebyshev psi") {
    CHECK(chebyshev_psi(1.0) == 0.0);
    const double ten = 3 * std::log(2.0) + 2 * std::log(3.0) + std::log(5.0) + std::log(7.0);
    CHECK(std::abs(chebyshev_psi(10.0) - ten) < 1e-14);
    CHECK(chebyshev_psi(10.5) == chebyshev_psi(10.0));
    // psi(x) < 1.03883 x for all x > 0
    const auto L = sieve(CoeffKind::VonMangoldt, 100'000);
    for (double x : {100.0, 1000.0, 99'999.0}) CHECK(chebyshev_psi(L, x) < 1.03883 * x);
  }

  TEST_CASE("double-sum oracle") {
    const auto L = sieve(CoeffKind::VonMangoldt, 1'000'000);
    // On s1 = 0 the double sum collapses to sum psi(n-1) n^-s.
    for (cplx s : {cplx(3.0), cplx(4.0), cplx(3.0, 2.0)}) {
      const auto o = oracle_double(L, SeriesSpec::von_mangoldt(), 0.0, s, 1e-5);
      const auto c = chebyshev_series(L, s);
      CHECK(std::abs(o.value - c.value) <= o.error_estimate + c.error_estimate);
    }
    // Outside the region of absolute convergence the oracle refuses.
    CHECK_THROWS_AS(oracle_double(L, SeriesSpec::von_mangoldt(), 0.5, 1.1, 1e-6), DomainError);
    CHECK_THROWS_AS(oracle_double(L, SeriesSpec::von_mangoldt(), -1.0, 3.0, 1e-6), DomainError);
    const auto phi = sieve(CoeffKind::EulerPhi, 1000);
    CHECK_THROWS_AS(oracle_double(phi, SeriesSpec::euler_phi(), 2.0, 2.1, 1e-6), DomainError);
  }
}
