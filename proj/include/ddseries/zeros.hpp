#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <vector>

#include "ddseries/arith.hpp"
#include "ddseries/error.hpp"

namespace ddseries::zeros {

// Residual |zeta(rho)| above which a tabulated zero is rejected.
inline constexpr double validation_threshold = 1e-6;
// Ordinate of the first non-trivial zero, used for envelopes when no
// table is available.
inline constexpr double first_ordinate = 14.134725141734693790;

// Non-trivial zeros in the upper half plane; conjugates are implicit.
struct ZeroTable {
  std::vector<double> ordinates;    // strictly ascending, all > 14
  std::vector<double> real_parts;   // empty when assume_rh
  std::vector<cplx> derivatives;    // zeta'(rho_n)
  double precision = 1e-9;
  bool assume_simple = true;
  bool assume_rh = true;

  std::size_t size() const noexcept { return ordinates.size(); }
  bool empty() const noexcept { return ordinates.empty(); }
  // Zero number i (0-based) in the upper half plane.
  cplx rho(std::size_t i) const;
  // The first count zeros.
  ZeroTable prefix(std::size_t count) const;
};

// Format: one zero per line, "ordinate [multiplicity [real_part]]";
// '#' starts a comment. Multiplicity must be 1. A real-part column, when
// present, must appear on every line and disables the RH assumption.
// Every entry is checked against |zeta(rho)| < validation_threshold.
ZeroTable read_zeros(std::istream& in, double precision = 1e-9);
ZeroTable load_zeros(const std::filesystem::path& path, double precision = 1e-9);

// The same format without the numerical checks; derivatives stay empty.
ZeroTable parse_zeros(std::istream& in, double precision = 1e-9);

struct ZeroResidual {
  double ordinate = 0.0;
  double residual = 0.0;  // |zeta(rho)|
  cplx derivative;        // zeta'(rho)
};

std::vector<ZeroResidual> residuals(const ZeroTable& table);

struct ZeroSum {
  cplx value;
  double error_estimate = 0.0;
  std::size_t zeros_used = 0;
};

// Contribution of the non-trivial zeros to the von Mangoldt continuation:
//   -(1/Gamma(s2)) sum_rho Gamma(s2 - rho) Gamma(rho) zeta(s1 + s2 - rho),
// summed over the table and the conjugate zeros. The error estimate
// bounds the omitted zeros by ten times a Stirling-type envelope.
ZeroSum zero_sum_lambda(cplx s1, cplx s2, const ZeroTable& table);

// Same for the alpha-twisted families, with weight Phi(rho; alpha)/zeta'(rho)
// and the opposite sign:
//   (1/Gamma(s2)) sum_rho Gamma(s2 - rho) Gamma(rho) Phi(rho)/zeta'(rho) zeta(s1 + s2 - rho).
ZeroSum zero_sum_tilde(const arith::SeriesSpec& spec, cplx s1, cplx s2, const ZeroTable& table);

}  // namespace ddseries::zeros
