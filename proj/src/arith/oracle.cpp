#include <cmath>
#include <limits>
#include <vector>

#include <boost/math/quadrature/gauss.hpp>

#include "weights.hpp"

namespace ddseries::arith {
namespace {

constexpr double eps = std::numeric_limits<double>::epsilon();
constexpr int em_order = 4;  // Bernoulli corrections B_2 .. B_8
// B_{2j}/(2j)! for j = 1..4.
constexpr double em_coef[em_order] = {1.0 / 12.0, -1.0 / 720.0, 1.0 / 30240.0, -1.0 / 1209600.0};
// 2 zeta(8) / (2 pi)^8, the Euler-Maclaurin remainder constant at order 4.
constexpr double em_remainder_coef = 8.096e-7;

cplx pow_real(double x, cplx e) { return std::exp(e * std::log(x)); }

// (e^w - 1)/w, accurate near w = 0.
cplx expm1_over(cplx w) {
  if (std::abs(w) > 0.5) return (std::exp(w) - 1.0) / w;
  cplx term = 1.0, sum = 1.0;
  for (int k = 2; k < 30; ++k) {
    term *= w / double(k);
    sum += term;
    if (std::abs(term) < 1e-18) break;
  }
  return sum;
}

// S(n) = sum_{m >= 1} m^{-s1} (m + n)^{-s2}.
class InnerSum {
 public:
  InnerSum(cplx s1, cplx s2) : s1_(s1), s2_(s2), u_(s1 + s2) {
    m0_ = 12 + int(std::ceil(std::abs(s1) + std::abs(s2)));
    md_ = m0_;
    for (int m = 1; m < m0_; ++m) {
      head_.push_back(pow_real(m, -s1));
    }
    // (s1)_i m0^{-s1-i}
    cplx p = pow_real(md_, -s1);
    for (int i = 0; i < 8; ++i) {
      poch1_[i] = p;
      p *= (s1 + double(i)) / md_;
    }
    cplx b = 1.0;
    for (int j = 0; j < max_terms; ++j) {
      binom_.push_back(b);
      b *= (-s2 - double(j)) / double(j + 1);
    }
    // int_2^inf y^{-s1} (1+y)^{-s2} dy
    c_hi_ = 0.0;
    for (int j = 0; j < max_terms; ++j) {
      const cplx t = binom_[j] * pow_real(2.0, 1.0 - u_ - double(j)) / (u_ + double(j) - 1.0);
      c_hi_ += t;
      if (j > 4 && std::abs(t) < 1e-19 * std::abs(c_hi_)) break;
    }
    c_mid_ = integrate(0.5, 2.0);
    // Constant half of the series for int_a^{1/2}, over exponents kept away from 0.
    k_half_ = 0.0;
    for (int j = 0; j < max_terms; ++j) {
      const cplx e = double(j) + 1.0 - s1;
      binom_over_e_.push_back(std::abs(e) < 0.25 ? cplx(0.0) : binom_[j] / e);
      if (std::abs(e) < 0.25) continue;
      k_half_ += binom_[j] * pow_real(0.5, e) / e;
    }
  }

  struct Value {
    cplx value;
    double remainder;
  };

  Value operator()(std::size_t n) const {
    const double nd = double(n);
    cplx head = 0.0;
    for (int m = 1; m < m0_; ++m) head += head_[m - 1] * pow_real(double(m) + nd, -s2_);
    // (s2)_j (m0 + n)^{-s2-j}
    cplx q[8];
    const double mn = md_ + nd;
    q[0] = pow_real(mn, -s2_);
    for (int j = 1; j < 8; ++j) q[j] = q[j - 1] * (s2_ + double(j - 1)) / mn;
    const cplx f0 = poch1_[0] * q[0];
    cplx corr = 0.0;
    cplx d7 = 0.0;
    for (int jj = 1; jj <= em_order; ++jj) {
      const int r = 2 * jj - 1;
      cplx d = 0.0;
      double c = 1.0;  // binomial(r, i)
      for (int i = 0; i <= r; ++i) {
        d += c * poch1_[i] * q[r - i];
        c = c * double(r - i) / double(i + 1);
      }
      d = -d;  // (-1)^r with r odd
      corr += em_coef[jj - 1] * d;
      if (r == 7) d7 = d;
    }
    const cplx total = head + integral(nd) + 0.5 * f0 - corr;
    return {total, 4.0 * em_remainder_coef * std::abs(d7)};
  }

 private:
  static constexpr int max_terms = 200;

  cplx integrand(double y) const { return pow_real(y, -s1_) * pow_real(1.0 + y, -s2_); }

  cplx integrate(double a, double b) const {
    return boost::math::quadrature::gauss<double, 30>::integrate([this](double y) { return integrand(y); }, a, b);
  }

  // int_{m0}^inf x^{-s1} (x + n)^{-s2} dx
  cplx integral(double nd) const {
    if (nd <= 0.5 * md_) {
      const double r = nd / md_;
      cplx sum = 0.0, rp = 1.0;
      for (int j = 0; j < max_terms; ++j) {
        const cplx t = binom_[j] * rp / (u_ + double(j) - 1.0);
        sum += t;
        if (j > 4 && std::abs(t) < 1e-19 * std::abs(sum)) break;
        rp *= r;
      }
      return pow_real(md_, 1.0 - u_) * sum;
    }
    const double a = md_ / nd;
    cplx mid;
    if (a >= 0.5) {
      mid = integrate(a, 2.0);
    } else {
      const double ell = std::log(0.5 / a);
      const double loga = std::log(a);
      cplx sum = k_half_;
      cplx ap = pow_real(a, 1.0 - s1_);  // a^{e_j}
      double half_pow = 1.0;
      const double stop = 1e-38 * std::norm(k_half_ + c_mid_);
      for (int j = 0; j < max_terms; ++j) {
        const cplx e = double(j) + 1.0 - s1_;
        cplx t;
        if (std::abs(e) < 0.25)
          t = binom_[j] * std::exp(e * loga) * ell * expm1_over(e * ell);
        else
          t = -binom_over_e_[j] * ap;
        sum += t;
        if (j > 4 && std::norm(binom_[j]) * half_pow < stop) break;
        ap *= a;
        half_pow *= 0.25;
      }
      mid = c_mid_ + sum;
    }
    return pow_real(nd, 1.0 - u_) * (mid + c_hi_);
  }

  cplx s1_, s2_, u_;
  int m0_ = 0;
  double md_ = 0.0;
  std::vector<cplx> head_;
  cplx poch1_[8];
  std::vector<cplx> binom_;
  std::vector<cplx> binom_over_e_;
  cplx c_hi_, c_mid_, k_half_;
};

}  // namespace

SeriesValue oracle_double(const CoeffTable& coeffs, const SeriesSpec& spec, cplx s1, cplx s2, double tol) {
  if (!(tol > 0.0)) throw DomainError("oracle_double: tolerance must be positive");
  const double sig1 = s1.real(), sig2 = s2.real(), sigu = sig1 + sig2;
  if (sig2 <= std::max(1.0, spec.delta) + 0.25 || sigu <= std::max(2.0, 1.0 + spec.delta) + 0.25)
    throw DomainError("oracle_double: point outside the region of absolute convergence (with margin 1/4)");

  // |S(n)| <= sum_i coef_i n^{-p_i}
  struct Piece {
    double coef, p;
  };
  std::vector<Piece> pieces;
  if (sig1 >= 1.25) {
    pieces.push_back({1.0 + 1.0 / (sig1 - 1.0), sig2});
  } else {
    const double s1c = std::min(sig1, 0.75);
    if (s1c >= 0.0) {
      pieces.push_back({1.0, sig2});
      pieces.push_back({1.0 / (1.0 - s1c), sig2 - 1.0 + s1c});
    } else {
      pieces.push_back({1.0, sig2 - 1.0 + s1c});
    }
    pieces.push_back({1.0 / (sigu - 1.0), sigu - 1.0});
  }
  const auto wb = detail::weight_bound(coeffs, spec);
  auto bound = [&](double n) {
    double b = 0.0;
    for (const auto& pc : pieces) b += pc.coef * wb.tail(n, pc.p);
    return b;
  };
  const std::size_t n_cut = detail::cutoff_for(bound, 0.5 * tol, coeffs.n_max());
  if (n_cut == 0)
    throw ToleranceError("oracle_double: coefficient table too short for tolerance", bound(double(coeffs.n_max())));

  const InnerSum inner(s1, s2);
  cplx sum = 0.0;
  double remainder = 0.0, mag = 0.0;
  for (std::size_t n = 1; n <= n_cut; ++n) {
    const double b = coeffs[n];
    if (b == 0.0) continue;
    const auto v = inner(n);
    const cplx t = b * v.value;
    sum += t;
    mag += std::abs(t);
    remainder += std::fabs(b) * v.remainder;
  }
  const double err = bound(double(n_cut)) + remainder + 64.0 * eps * mag;
  return {sum, err, n_cut};
}

}  // namespace ddseries::arith
