#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "ddseries/error.hpp"

namespace ddseries::arith {

enum class CoeffKind { VonMangoldt, Moebius, EulerPhi, Liouville, Delta1, One, Identity, Custom };

std::string to_string(CoeffKind kind);

// Arithmetic function sampled on 1..n_max.
class CoeffTable {
 public:
  CoeffTable(CoeffKind kind, std::vector<double> values_from_one);

  CoeffKind kind() const noexcept { return kind_; }
  std::size_t n_max() const noexcept { return values_.size() - 1; }
  // n in 1..n_max.
  double operator[](std::size_t n) const { return values_[n]; }
  double at(std::size_t n) const;
  // Values indexed from 0; entry 0 is always zero.
  std::span<const double> raw() const noexcept { return values_; }

 private:
  CoeffKind kind_;
  std::vector<double> values_;
};

// Linear sieve over smallest prime factors. Custom is not sievable.
CoeffTable sieve(CoeffKind kind, std::size_t n_max = 1'000'000);

// Custom coefficients: lines "index value", indices strictly ascending,
// '#' starts a comment, missing indices are zero.
CoeffTable read_custom_coefficients(std::istream& in, std::size_t n_max);
CoeffTable load_custom_coefficients(const std::filesystem::path& path, std::size_t n_max);

// Dirichlet convolution (a * b)(n) = sum_{d | n} a(d) b(n/d).
std::vector<double> dirichlet_convolve(std::span<const double> a, std::span<const double> b);

// alpha * mu. Recognises the classical outputs (One -> Delta1,
// Identity -> EulerPhi, Delta1 -> Moebius); anything else is Custom.
CoeffTable tilde_convolve(const CoeffTable& alpha, const CoeffTable& mu);

// Closed form of Phi(s; alpha) = sum alpha(n) n^{-s} for the supported
// families, where the double-series coefficient is alpha * mu.
enum class BaseSeries {
  None,         // von Mangoldt case, handled by its own formula
  One,          // Phi = 1              (coefficients mu)
  ZetaShifted,  // Phi = zeta(s - 1)    (coefficients phi)
  ZetaDoubled,  // Phi = zeta(2 s)      (coefficients Liouville lambda)
  Unknown       // custom data, no closed form
};

// How Res_{s=delta} Phi(s; alpha)/zeta(s) is obtained.
enum class ResidueForm { None, InverseZetaTwo, HalfInverseZetaHalf, Value };

struct SeriesSpec {
  CoeffKind coeff = CoeffKind::VonMangoldt;
  BaseSeries alpha = BaseSeries::None;
  double delta = 1.0;  // abscissa of absolute convergence of Phi(s; alpha)
  bool has_pole = false;
  ResidueForm residue = ResidueForm::None;
  cplx residue_value = 0.0;  // used when residue == Value

  static SeriesSpec von_mangoldt();
  static SeriesSpec moebius();
  static SeriesSpec euler_phi();
  static SeriesSpec liouville();
  static SeriesSpec custom(double delta);

  bool is_von_mangoldt() const noexcept { return coeff == CoeffKind::VonMangoldt; }
  std::string name() const;
};

// "lambda", "mu", "phi", "liouville". Throws ParseError otherwise.
SeriesSpec series_by_name(const std::string& name);

// Phi(s; alpha), its derivative, and the residue of Phi/zeta at delta.
cplx alpha_series(const SeriesSpec& spec, cplx s);
cplx alpha_series_derivative(const SeriesSpec& spec, cplx s);
cplx pole_residue(const SeriesSpec& spec);

struct SeriesValue {
  cplx value;
  double error_estimate = 0.0;
  std::size_t terms = 0;
};

// sum beta(n) n^{-s}, truncated where an analytic tail bound drops below
// tol/2. Needs Re s > delta + 0.05 and a table long enough for the cutoff.
SeriesValue dirichlet_eval(const CoeffTable& coeffs, const SeriesSpec& spec, cplx s, double tol);

// Brute-force sum_{m,n >= 1} beta(n) m^{-s1} (m+n)^{-s2} with the inner sum
// by Euler-Maclaurin. Independent of every continuation formula.
// Refuses unless Re s2 > max(1, delta) + 1/4 and
// Re(s1 + s2) > max(2, 1 + delta) + 1/4.
SeriesValue oracle_double(const CoeffTable& coeffs, const SeriesSpec& spec, cplx s1, cplx s2,
                          double tol);

// psi(x) = sum_{n <= x} Lambda(n).
double chebyshev_psi(double x);
double chebyshev_psi(const CoeffTable& lambda, double x);

// sum_{n >= 2} psi(n - 1) n^{-s} over the whole table plus a smooth tail
// correction from psi(x) ~ x; the error is estimated from the observed
// |psi(x) - x| near the end of the table. Needs Re s > 2.
SeriesValue chebyshev_series(const CoeffTable& lambda, cplx s);

}  // namespace ddseries::arith
