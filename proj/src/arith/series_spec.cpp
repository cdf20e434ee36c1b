#include "ddseries/arith.hpp"
#include "ddseries/special.hpp"

namespace ddseries::arith {

SeriesSpec SeriesSpec::von_mangoldt() {
  return {CoeffKind::VonMangoldt, BaseSeries::None, 1.0, false, ResidueForm::None, 0.0};
}

SeriesSpec SeriesSpec::moebius() {
  return {CoeffKind::Moebius, BaseSeries::One, 0.0, false, ResidueForm::None, 0.0};
}

SeriesSpec SeriesSpec::euler_phi() {
  return {CoeffKind::EulerPhi, BaseSeries::ZetaShifted, 2.0, true, ResidueForm::InverseZetaTwo, 0.0};
}

// zeta(2s) has a simple pole at s = 1/2 with residue 1/2.
SeriesSpec SeriesSpec::liouville() {
  return {CoeffKind::Liouville, BaseSeries::ZetaDoubled, 0.5, true, ResidueForm::HalfInverseZetaHalf, 0.0};
}

SeriesSpec SeriesSpec::custom(double delta) {
  return {CoeffKind::Custom, BaseSeries::Unknown, delta, false, ResidueForm::None, 0.0};
}

std::string SeriesSpec::name() const {
  switch (coeff) {
    case CoeffKind::VonMangoldt: return "lambda";
    case CoeffKind::Moebius: return "mu";
    case CoeffKind::EulerPhi: return "phi";
    case CoeffKind::Liouville: return "liouville";
    default: return to_string(coeff);
  }
}

SeriesSpec series_by_name(const std::string& name) {
  if (name == "lambda") return SeriesSpec::von_mangoldt();
  if (name == "mu") return SeriesSpec::moebius();
  if (name == "phi") return SeriesSpec::euler_phi();
  if (name == "liouville") return SeriesSpec::liouville();
  throw ParseError("unknown series '" + name + "' (expected lambda, mu, phi or liouville)");
}

cplx alpha_series(const SeriesSpec& spec, cplx s) {
  switch (spec.alpha) {
    case BaseSeries::One: return 1.0;
    case BaseSeries::ZetaShifted: return special::zeta(s - 1.0);
    case BaseSeries::ZetaDoubled: return special::zeta(2.0 * s);
    default: throw DomainError("no closed form for Phi(s; alpha) of series " + spec.name());
  }
}

cplx alpha_series_derivative(const SeriesSpec& spec, cplx s) {
  switch (spec.alpha) {
    case BaseSeries::One: return 0.0;
    case BaseSeries::ZetaShifted: return special::zeta_jet(s - 1.0).d1;
    case BaseSeries::ZetaDoubled: return 2.0 * special::zeta_jet(2.0 * s).d1;
    default: throw DomainError("no closed form for Phi'(s; alpha) of series " + spec.name());
  }
}

cplx pole_residue(const SeriesSpec& spec) {
  switch (spec.residue) {
    case ResidueForm::None: return 0.0;
    case ResidueForm::InverseZetaTwo: return 6.0 / (special::pi * special::pi);
    case ResidueForm::HalfInverseZetaHalf: return 0.5 / special::zeta(0.5);
    case ResidueForm::Value: return spec.residue_value;
  }
  return 0.0;
}

}  // namespace ddseries::arith
