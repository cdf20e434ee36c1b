#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ddseries/arith.hpp"
#include "ddseries/contour.hpp"
#include "ddseries/error.hpp"
#include "ddseries/zeros.hpp"

namespace ddseries::continuation {

// Families of possible singular sets of the continued series:
//   von Mangoldt: s2 = 1; s2 = -l (l >= 2); s1+s2 = 2-l (l >= 0);
//                 s2 = -l + rho; s1+s2 = 1 + rho.
//   alpha-twisted: s2 = -k (k >= 2); s1+s2 = 1-k (k >= 0);
//                 s2 = -l + rho; s1+s2 = 1 + rho; and, when Phi(s; alpha)
//                 has a pole at delta != 1, s2 = -l + delta; s1+s2 = 1 + delta.
// rho runs over the tabulated zeros and their conjugates.
enum class SingularKind { S2eq1, S2NegInt, SumInt, S2Zero, SumZero, S2Delta, SumDelta };

struct SingularityTag {
  SingularKind kind;
  int l = 0;         // integer parameter of the family (unused for S2eq1, SumZero, SumDelta)
  int zero = 0;      // 1-based zero index, negative for the conjugate zero
  double distance = 0.0;  // Euclidean distance in C^2 to the hyperplane

  std::string label() const;
  friend bool operator==(const SingularityTag& a, const SingularityTag& b) {
    return a.kind == b.kind && a.l == b.l && a.zero == b.zero;
  }
};

// Every listed hyperplane within distance tol of (s1, s2).
std::vector<SingularityTag> classify(const arith::SeriesSpec& series, cplx s1, cplx s2,
                                     const zeros::ZeroTable& table, double tol = 1e-8);

// Points closer than this to a singular set are refused.
inline constexpr double refuse_distance = 1e-8;
// Below this distance the error estimate is multiplied by 1/distance.
inline constexpr double inflate_distance = 1e-3;

class SingularPointError : public Error {
 public:
  SingularPointError(const std::string& what, std::vector<SingularityTag> tags)
      : Error(what), tags_(std::move(tags)) {}
  const std::vector<SingularityTag>& tags() const noexcept { return tags_; }

 private:
  std::vector<SingularityTag> tags_;
};

// Every piece of the continuation formula; value is their sum.
//   main_pole      zeta(s1+s2-1)/(s2-1)                 (von Mangoldt only)
//   origin_term    -log(2 pi) zeta(s1+s2), resp. -2 Phi(0) zeta(s1+s2)
//   odd_k_sum      residues at odd positive integers below the line
//   even_k_sum     residues at even positive integers below the line
//   zero_sum       residues at the non-trivial zeros
//   tail_integral  integral along the shifted line
//   delta_pole     residue at the pole of Phi(s; alpha)  (alpha-twisted only)
struct TermBreakdown {
  cplx main_pole;
  cplx origin_term;
  cplx odd_k_sum;
  cplx even_k_sum;
  cplx zero_sum;
  cplx tail_integral;
  cplx delta_pole;

  // Fixed summation order; EvalResult::value is exactly this.
  cplx total() const {
    return main_pole + origin_term + odd_k_sum + even_k_sum + zero_sum + tail_integral + delta_pole;
  }
};

struct EvalResult {
  cplx value;
  double error_estimate = 0.0;
  TermBreakdown terms;
  int n_used = 0;
  std::size_t zeros_used = 0;
  std::vector<SingularityTag> nearby;  // singular sets within inflate_distance
};

struct EvalConfig {
  double tol = 1e-8;
  std::optional<int> n_shift;  // default: minimal admissible shift + 1, capped at 40
  double epsilon = 0.25;
  double step = 0.05;
  double max_height = 400.0;
};

EvalResult eval_lambda(cplx s1, cplx s2, const zeros::ZeroTable& table, const EvalConfig& config = {});
EvalResult eval_tilde(const arith::SeriesSpec& series, cplx s1, cplx s2, const zeros::ZeroTable& table,
                      const EvalConfig& config = {});
// Dispatches on the series.
EvalResult evaluate(const arith::SeriesSpec& series, cplx s1, cplx s2, const zeros::ZeroTable& table,
                    const EvalConfig& config = {});

// Throws ToleranceError when the estimate exceeds tol.
void require_tolerance(const EvalResult& result, double tol);

// One real axis of a scan window; count == 1 pins it to lo.
struct Axis {
  double lo = 0.0;
  double hi = 0.0;
  int count = 1;
  double at(int i) const { return count == 1 ? lo : lo + (hi - lo) * double(i) / double(count - 1); }
};

struct ScanWindow {
  Axis re_s1, im_s1, re_s2, im_s2;
};

struct ScanRow {
  cplx s1;
  cplx s2;
  std::optional<cplx> value;  // empty at singular points
  double error_estimate = 0.0;
  std::vector<SingularityTag> tags;
  std::string failure;  // non-singular evaluation failure, if any
};

// Row-major over (im_s2, re_s2, im_s1, re_s1), re_s1 varying fastest.
// Rows are identical for any worker count.
std::vector<ScanRow> scan_grid(const arith::SeriesSpec& series, const ScanWindow& window,
                               const zeros::ZeroTable& table, const EvalConfig& config = {}, int workers = 1);

void write_csv(std::ostream& out, const std::vector<ScanRow>& rows);
void write_json_lines(std::ostream& out, const std::vector<ScanRow>& rows);

// Shortest round-trip decimal form, independent of the C locale.
std::string format_double(double x);

}  // namespace ddseries::continuation
