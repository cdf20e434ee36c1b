#include <string>

#include "ddseries/special.hpp"

namespace ddseries::special {
namespace {

double lookup(const std::map<int, double>& m, int k, const char* name) {
  const auto it = m.find(k);
  if (it == m.end())
    throw DomainError(std::string("Laurent constant ") + name + " not tabulated at " + std::to_string(k));
  return it->second;
}

}  // namespace

double LaurentConstants::a_at(int k) const { return lookup(a, k, "a"); }
double LaurentConstants::b_at(int l) const { return lookup(b, l, "b"); }
double LaurentConstants::c_at(int k) const { return lookup(c, k, "c"); }

LaurentConstants laurent_constants(int k_max) {
  if (k_max < 0 || k_max > 60) throw DomainError("laurent_constants: k_max outside 0..60");
  LaurentConstants lc;
  lc.k_max = k_max;
  double fact = 1.0;
  for (int k = 0; k <= k_max; ++k) {
    if (k > 0) fact *= k;
    const ZetaJet j = zeta_jet(cplx(-double(k), 0.0));
    lc.zeta_d1[k] = j.d1.real();
    lc.zeta_d2[k] = j.d2.real();
    lc.b[k] = (k % 2 ? -1.0 : 1.0) / fact * (harmonic(k) - euler_gamma);
    if (k >= 2 && k % 2 == 0) {
      const double z1 = j.d1.real();
      const double z2 = j.d2.real();
      lc.a[k] = -z2 / (2.0 * z1);
      lc.c[k] = -z2 / (2.0 * z1 * z1);
    }
  }
  return lc;
}

const LaurentConstants& default_laurent_constants() {
  static const LaurentConstants lc = laurent_constants(40);
  return lc;
}

}  // namespace ddseries::special
