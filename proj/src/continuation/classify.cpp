#include <cmath>

#include "ddseries/continuation.hpp"

namespace ddseries::continuation {
namespace {

constexpr double inv_sqrt2 = 0.70710678118654752440;

}  // namespace

std::string SingularityTag::label() const {
  const std::string n = std::to_string(zero);
  switch (kind) {
    case SingularKind::S2eq1: return "S2eq1";
    case SingularKind::S2NegInt: return "S2NegInt(l=" + std::to_string(l) + ")";
    case SingularKind::SumInt: return "SumInt(l=" + std::to_string(l) + ")";
    case SingularKind::S2Zero: return "S2Zero(l=" + std::to_string(l) + ",n=" + n + ")";
    case SingularKind::SumZero: return "SumZero(n=" + n + ")";
    case SingularKind::S2Delta: return "S2Delta(l=" + std::to_string(l) + ")";
    case SingularKind::SumDelta: return "SumDelta";
  }
  return "?";
}

std::vector<SingularityTag> classify(const arith::SeriesSpec& series, cplx s1, cplx s2,
                                     const zeros::ZeroTable& table, double tol) {
  std::vector<SingularityTag> tags;
  const cplx u = s1 + s2;
  const bool lambda = series.is_von_mangoldt();
  auto add = [&](SingularKind kind, int l, int zero, double d) {
    if (d <= tol) tags.push_back({kind, l, zero, d});
  };

  if (lambda) add(SingularKind::S2eq1, 0, 0, std::abs(s2 - 1.0));

  // s2 = -l, l >= 2
  if (const double l = std::round(-s2.real()); l >= 2.0)
    add(SingularKind::S2NegInt, int(l), 0, std::abs(s2 + l));

  // von Mangoldt: s1 + s2 = 2 - l; twisted: s1 + s2 = 1 - l; l >= 0
  const double top = lambda ? 2.0 : 1.0;
  if (const double l = std::round(top - u.real()); l >= 0.0)
    add(SingularKind::SumInt, int(l), 0, std::abs(u - (top - l)) * inv_sqrt2);

  for (std::size_t i = 0; i < table.size(); ++i) {
    for (int side : {1, -1}) {
      const cplx rho = side > 0 ? table.rho(i) : std::conj(table.rho(i));
      const int idx = side * int(i + 1);
      if (const double l = std::round((rho - s2).real()); l >= 0.0)
        add(SingularKind::S2Zero, int(l), idx, std::abs(s2 + l - rho));
      add(SingularKind::SumZero, 0, idx, std::abs(u - 1.0 - rho) * inv_sqrt2);
    }
  }

  if (!lambda && series.has_pole && series.delta != 1.0) {
    const double delta = series.delta;
    if (const double l = std::round(delta - s2.real()); l >= 0.0)
      add(SingularKind::S2Delta, int(l), 0, std::abs(s2 + l - delta));
    add(SingularKind::SumDelta, 0, 0, std::abs(u - 1.0 - delta) * inv_sqrt2);
  }
  return tags;
}

}  // namespace ddseries::continuation
