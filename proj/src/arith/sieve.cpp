#include <cmath>
#include <cstdint>
#include <fstream>
#include <istream>
#include <locale>
#include <sstream>

#include "ddseries/arith.hpp"

namespace ddseries::arith {

std::string to_string(CoeffKind kind) {
  switch (kind) {
    case CoeffKind::VonMangoldt: return "VonMangoldt";
    case CoeffKind::Moebius: return "Moebius";
    case CoeffKind::EulerPhi: return "EulerPhi";
    case CoeffKind::Liouville: return "Liouville";
    case CoeffKind::Delta1: return "Delta1";
    case CoeffKind::One: return "One";
    case CoeffKind::Identity: return "Identity";
    case CoeffKind::Custom: return "Custom";
  }
  return "?";
}

CoeffTable::CoeffTable(CoeffKind kind, std::vector<double> values_from_one) : kind_(kind) {
  values_.reserve(values_from_one.size() + 1);
  values_.push_back(0.0);
  values_.insert(values_.end(), values_from_one.begin(), values_from_one.end());
}

double CoeffTable::at(std::size_t n) const {
  if (n == 0 || n > n_max()) throw DomainError("coefficient index " + std::to_string(n) + " outside 1.." + std::to_string(n_max()));
  return values_[n];
}

CoeffTable sieve(CoeffKind kind, std::size_t n_max) {
  if (kind == CoeffKind::Custom) throw DomainError("custom coefficients cannot be sieved");
  if (n_max == 0) throw DomainError("sieve: n_max must be positive");
  if (n_max > 2'000'000'000) throw DomainError("sieve: n_max too large");
  std::vector<double> v(n_max + 1, 0.0);
  switch (kind) {
    case CoeffKind::Delta1:
      v[1] = 1.0;
      return CoeffTable(kind, {v.begin() + 1, v.end()});
    case CoeffKind::One:
      for (std::size_t n = 1; n <= n_max; ++n) v[n] = 1.0;
      return CoeffTable(kind, {v.begin() + 1, v.end()});
    case CoeffKind::Identity:
      for (std::size_t n = 1; n <= n_max; ++n) v[n] = double(n);
      return CoeffTable(kind, {v.begin() + 1, v.end()});
    default:
      break;
  }

  std::vector<std::uint32_t> spf(n_max + 1, 0);
  std::vector<std::uint32_t> primes;
  for (std::size_t i = 2; i <= n_max; ++i) {
    if (spf[i] == 0) {
      spf[i] = std::uint32_t(i);
      primes.push_back(std::uint32_t(i));
    }
    for (std::uint32_t p : primes) {
      if (p > spf[i] || i * p > n_max) break;
      spf[i * p] = p;
    }
  }

  v[1] = (kind == CoeffKind::VonMangoldt) ? 0.0 : 1.0;
  for (std::size_t n = 2; n <= n_max; ++n) {
    const std::size_t p = spf[n];
    const std::size_t m = n / p;
    const bool repeated = m % p == 0;
    switch (kind) {
      case CoeffKind::Moebius: v[n] = repeated ? 0.0 : -v[m]; break;
      case CoeffKind::Liouville: v[n] = -v[m]; break;
      case CoeffKind::EulerPhi: v[n] = v[m] * double(repeated ? p : p - 1); break;
      case CoeffKind::VonMangoldt:
        v[n] = (m == 1 || (repeated && v[m] != 0.0)) ? std::log(double(p)) : 0.0;
        break;
      default: break;
    }
  }
  return CoeffTable(kind, {v.begin() + 1, v.end()});
}

CoeffTable read_custom_coefficients(std::istream& in, std::size_t n_max) {
  std::vector<double> v(n_max, 0.0);
  std::string line;
  std::size_t last = 0;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    ls.imbue(std::locale::classic());
    long long idx = 0;
    double val = 0.0;
    if (!(ls >> idx)) continue;  // blank line
    if (!(ls >> val)) throw ParseError("coefficient file line " + std::to_string(lineno) + ": expected 'index value'");
    std::string rest;
    if (ls >> rest) throw ParseError("coefficient file line " + std::to_string(lineno) + ": trailing text");
    if (idx < 1 || std::size_t(idx) <= last)
      throw ParseError("coefficient file line " + std::to_string(lineno) + ": indices must be positive and strictly ascending");
    last = std::size_t(idx);
    if (last <= n_max) v[last - 1] = val;
  }
  return CoeffTable(CoeffKind::Custom, std::move(v));
}

CoeffTable load_custom_coefficients(const std::filesystem::path& path, std::size_t n_max) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open coefficient file " + path.string());
  return read_custom_coefficients(in, n_max);
}

std::vector<double> dirichlet_convolve(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) throw DomainError("dirichlet_convolve: tables differ in length");
  const std::size_t n = a.size() - 1;
  std::vector<double> c(a.size(), 0.0);
  for (std::size_t d = 1; d <= n; ++d) {
    if (a[d] == 0.0) continue;
    for (std::size_t k = 1, m = d; m <= n; ++k, m += d) c[m] += a[d] * b[k];
  }
  return c;
}

CoeffTable tilde_convolve(const CoeffTable& alpha, const CoeffTable& mu) {
  if (alpha.n_max() != mu.n_max()) throw DomainError("tilde_convolve: tables differ in length");
  if (mu.kind() != CoeffKind::Moebius) throw DomainError("tilde_convolve: second table must be Moebius");
  std::vector<double> c = dirichlet_convolve(alpha.raw(), mu.raw());
  CoeffKind kind = CoeffKind::Custom;
  if (alpha.kind() == CoeffKind::One) kind = CoeffKind::Delta1;
  if (alpha.kind() == CoeffKind::Identity) kind = CoeffKind::EulerPhi;
  if (alpha.kind() == CoeffKind::Delta1) kind = CoeffKind::Moebius;
  return CoeffTable(kind, {c.begin() + 1, c.end()});
}

double chebyshev_psi(const CoeffTable& lambda, double x) {
  if (lambda.kind() != CoeffKind::VonMangoldt) throw DomainError("chebyshev_psi needs a von Mangoldt table");
  if (x < 1.0) return 0.0;
  const auto top = std::size_t(std::floor(x));
  if (top > lambda.n_max()) throw DomainError("chebyshev_psi: x beyond table");
  double s = 0.0;
  for (std::size_t n = 2; n <= top; ++n) s += lambda[n];
  return s;
}

double chebyshev_psi(double x) {
  if (x < 2.0) return 0.0;
  return chebyshev_psi(sieve(CoeffKind::VonMangoldt, std::size_t(std::floor(x))), x);
}

}  // namespace ddseries::arith
