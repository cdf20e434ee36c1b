#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <sstream>
#include <string>

#include "ddseries/special.hpp"
#include "ddseries/zeros.hpp"

namespace ddseries::zeros {
namespace {

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream ss(line);
  std::string tok;
  while (ss >> tok) out.push_back(tok);
  return out;
}

double parse_number(const std::string& tok, std::size_t lineno) {
  double v = 0.0;
  const char* first = tok.data();
  const char* last = tok.data() + tok.size();
  if (!tok.empty() && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last || !std::isfinite(v))
    throw ParseError("zeros file line " + std::to_string(lineno) + ": cannot parse '" + tok + "'");
  return v;
}

}  // namespace

cplx ZeroTable::rho(std::size_t i) const {
  return {assume_rh ? 0.5 : real_parts.at(i), ordinates.at(i)};
}

ZeroTable ZeroTable::prefix(std::size_t count) const {
  ZeroTable t = *this;
  const std::size_t n = std::min(count, size());
  t.ordinates.resize(n);
  t.derivatives.resize(n);
  if (!assume_rh) t.real_parts.resize(n);
  return t;
}

ZeroTable parse_zeros(std::istream& in, double precision) {
  ZeroTable table;
  table.precision = precision;
  std::string line;
  std::size_t lineno = 0;
  int columns = -1;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const auto tok = split(line);
    if (tok.empty()) continue;
    if (tok.size() > 3) throw ParseError("zeros file line " + std::to_string(lineno) + ": too many columns");
    const double gamma = parse_number(tok[0], lineno);
    if (tok.size() >= 2) {
      const double mult = parse_number(tok[1], lineno);
      if (mult != std::floor(mult) || mult < 1.0)
        throw ParseError("zeros file line " + std::to_string(lineno) + ": multiplicity must be a positive integer");
      if (mult != 1.0)
        throw ValidationError("zeros file line " + std::to_string(lineno) + ": only simple zeros are supported");
    }
    const bool has_real = tok.size() == 3;
    if (columns >= 0 && (columns == 3) != has_real)
      throw ParseError("zeros file line " + std::to_string(lineno) + ": real-part column must be given on every line or none");
    columns = int(tok.size() == 3 ? 3 : 1);
    if (!table.ordinates.empty() && gamma <= table.ordinates.back())
      throw ParseError("zeros file line " + std::to_string(lineno) + ": ordinates must be strictly ascending");
    table.ordinates.push_back(gamma);
    if (has_real) table.real_parts.push_back(parse_number(tok[2], lineno));
  }
  table.assume_rh = table.real_parts.empty();
  return table;
}

std::vector<ZeroResidual> residuals(const ZeroTable& table) {
  std::vector<ZeroResidual> out;
  out.reserve(table.size());
  for (std::size_t i = 0; i < table.size(); ++i) {
    const auto jet = special::zeta_jet(table.rho(i));
    out.push_back({table.ordinates[i], std::abs(jet.value), jet.d1});
  }
  return out;
}

ZeroTable read_zeros(std::istream& in, double precision) {
  ZeroTable table = parse_zeros(in, precision);
  const auto res = residuals(table);
  for (std::size_t i = 0; i < res.size(); ++i) {
    if (!(res[i].residual < validation_threshold)) {
      std::ostringstream msg;
      msg.precision(6);
      msg << "zeros file entry " << i + 1 << " (" << res[i].ordinate << "): |zeta(rho)| = " << res[i].residual
          << " exceeds " << validation_threshold;
      throw ValidationError(msg.str());
    }
    if (res[i].ordinate <= 14.0)
      throw ValidationError("zeros file entry " + std::to_string(i + 1) + ": ordinate must exceed 14");
    if (std::abs(res[i].derivative) < 1e-8)
      throw ValidationError("zeros file entry " + std::to_string(i + 1) + ": |zeta'(rho)| < 1e-8, possible multiple zero");
    table.derivatives.push_back(res[i].derivative);
  }
  return table;
}

ZeroTable load_zeros(const std::filesystem::path& path, double precision) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open zeros file " + path.string());
  return read_zeros(in, precision);
}

}  // namespace ddseries::zeros
