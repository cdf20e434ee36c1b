#include <vector>

#include "ddseries/special.hpp"

namespace ddseries::special {
namespace {

constexpr int bernoulli_max = 64;

// Akiyama-Tanigawa; this recurrence yields the B_1 = +1/2 convention.
std::vector<Rational> build_bernoulli() {
  std::vector<Rational> out(bernoulli_max + 1);
  std::vector<Rational> a(bernoulli_max + 1);
  for (int m = 0; m <= bernoulli_max; ++m) {
    a[m] = Rational(1, m + 1);
    for (int j = m; j >= 1; --j) a[j - 1] = j * (a[j - 1] - a[j]);
    out[m] = a[0];
  }
  return out;
}

const std::vector<Rational>& table() {
  static const std::vector<Rational> t = build_bernoulli();
  return t;
}

const std::vector<double>& table_double() {
  static const std::vector<double> t = [] {
    std::vector<double> d;
    for (const auto& r : table()) d.push_back(r.convert_to<double>());
    return d;
  }();
  return t;
}

}  // namespace

const Rational& bernoulli(int n) {
  if (n < 0 || n > bernoulli_max) throw DomainError("Bernoulli index outside 0..64");
  return table()[n];
}

double bernoulli_value(int n) {
  if (n < 0 || n > bernoulli_max) throw DomainError("Bernoulli index outside 0..64");
  return table_double()[n];
}

}  // namespace ddseries::special
