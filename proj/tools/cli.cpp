#include "cli.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "ddseries/arith.hpp"
#include "ddseries/continuation.hpp"
#include "ddseries/reverse.hpp"
#include "ddseries/zeros.hpp"
#include "suite.hpp"

#ifndef DDSERIES_ZEROS_FILE
#define DDSERIES_ZEROS_FILE "data/zeta_zeros_100.txt"
#endif

namespace ddseries::cli {
namespace {

using continuation::format_double;

double parse_real(std::string_view text, const std::string& context) {
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size())
    throw ParseError("cannot parse '" + std::string(text) + "' as a number in " + context);
  return v;
}

zeros::ZeroTable load_table(const std::string& option, std::ostream& err) {
  std::string path = option;
  if (path.empty())
    if (const char* env = std::getenv("DDSERIES_ZEROS"); env && *env) path = env;
  if (path.empty()) path = DDSERIES_ZEROS_FILE;
  auto table = zeros::load_zeros(path);
  if (table.size() < 50)
    err << "warning: only " << table.size() << " zeros in " << path
        << "; continuation-grade results need at least 50\n";
  return table;
}

void check_tol(double tol) {
  if (!(tol > 0.0) || tol > 1e-2) throw ParseError("--tol must lie in (0, 1e-2]");
}

// Options shared by every command that evaluates the continuation.
struct EvalOptions {
  std::string zeros;
  double tol = 1e-8;
  int n_shift = 0;  // 0: automatic
  double epsilon = 0.25;
  double step = 0.05;
  double height = 400.0;

  void attach(CLI::App* app) {
    app->add_option("--zeros", zeros, "zeros file (default: $DDSERIES_ZEROS or the bundled table)");
    app->add_option("--tol", tol, "target absolute accuracy")->capture_default_str();
    app->add_option("--n-shift", n_shift, "contour shift N (default: minimal admissible + 1)");
    app->add_option("--epsilon", epsilon, "contour offset")->capture_default_str();
    app->add_option("--step", step, "quadrature step along the contour")->capture_default_str();
    app->add_option("--height", height, "largest contour height")->capture_default_str();
  }

  continuation::EvalConfig config() const {
    check_tol(tol);
    continuation::EvalConfig c;
    c.tol = tol;
    if (n_shift != 0) c.n_shift = n_shift;
    c.epsilon = epsilon;
    c.step = step;
    c.max_height = height;
    return c;
  }
};

void print_tags(std::ostream& out, const std::vector<continuation::SingularityTag>& tags) {
  out << "singular";
  for (const auto& t : tags) out << ' ' << t.label();
  out << '\n';
}

std::string sci(double x) {
  std::ostringstream s;
  s << std::scientific << std::setprecision(3) << x;
  return s.str();
}

int cmd_eval(const std::string& series, const std::string& s1_text, const std::string& s2_text,
             const EvalOptions& opt, const std::string& format, std::ostream& out, std::ostream& err) {
  const auto spec = arith::series_by_name(series);
  const cplx s1 = parse_complex(s1_text);
  const cplx s2 = parse_complex(s2_text);
  const auto config = opt.config();
  const auto table = load_table(opt.zeros, err);
  const auto r = continuation::evaluate(spec, s1, s2, table, config);

  const std::pair<const char*, cplx> terms[] = {
      {"main_pole", r.terms.main_pole},   {"origin_term", r.terms.origin_term},
      {"odd_k_sum", r.terms.odd_k_sum},   {"even_k_sum", r.terms.even_k_sum},
      {"zero_sum", r.terms.zero_sum},     {"tail_integral", r.terms.tail_integral},
      {"delta_pole", r.terms.delta_pole},
  };
  if (format == "json") {
    nlohmann::ordered_json j;
    j["series"] = spec.name();
    j["s1"] = format_complex(s1);
    j["s2"] = format_complex(s2);
    j["value"] = format_complex(r.value);
    j["error_estimate"] = r.error_estimate;
    j["n_shift"] = r.n_used;
    j["zeros_used"] = r.zeros_used;
    for (const auto& [name, v] : terms) j["terms"][name] = format_complex(v);
    for (const auto& t : r.nearby) j["nearby"].push_back(t.label());
    out << j.dump() << '\n';
  } else {
    out << "series " << spec.name() << '\n'
        << "s1 " << format_complex(s1) << '\n'
        << "s2 " << format_complex(s2) << '\n'
        << "value " << format_complex(r.value) << '\n'
        << "error_estimate " << sci(r.error_estimate) << '\n'
        << "n_shift " << r.n_used << '\n'
        << "zeros_used " << r.zeros_used << '\n';
    for (const auto& [name, v] : terms) out << "  " << name << ' ' << format_complex(v) << '\n';
    for (const auto& t : r.nearby) out << "nearby " << t.label() << " distance " << sci(t.distance) << '\n';
  }
  if (r.error_estimate > opt.tol) {
    err << "tolerance " << opt.tol << " not met: error estimate " << sci(r.error_estimate) << '\n';
    return exit_tolerance;
  }
  return exit_ok;
}

int cmd_oracle(const std::string& series, const std::string& s1_text, const std::string& s2_text,
               const EvalOptions& opt, std::size_t n_max, bool compare, std::ostream& out, std::ostream& err) {
  const auto spec = arith::series_by_name(series);
  const cplx s1 = parse_complex(s1_text);
  const cplx s2 = parse_complex(s2_text);
  check_tol(opt.tol);
  const auto coeffs = arith::sieve(spec.coeff, n_max);
  const auto o = arith::oracle_double(coeffs, spec, s1, s2, opt.tol);
  out << "oracle " << format_complex(o.value) << '\n'
      << "oracle_error " << sci(o.error_estimate) << '\n'
      << "oracle_terms " << o.terms << '\n';
  if (!compare) return exit_ok;
  const auto table = load_table(opt.zeros, err);
  const auto e = continuation::evaluate(spec, s1, s2, table, opt.config());
  const double diff = std::abs(e.value - o.value);
  const double budget = e.error_estimate + o.error_estimate;
  out << "continuation " << format_complex(e.value) << '\n'
      << "continuation_error " << sci(e.error_estimate) << '\n'
      << "difference " << sci(diff) << '\n'
      << "combined_estimate " << sci(budget) << '\n'
      << "agree " << (diff <= budget ? "yes" : "no") << '\n';
  return diff <= budget ? exit_ok : exit_verify;
}

int cmd_verify(const std::string& zeros_path, std::ostream& out, std::ostream& err) {
  const auto table = load_table(zeros_path, err);
  const auto results = suite::run_all(table, out);
  const bool failed =
      std::any_of(results.begin(), results.end(), [](const auto& r) { return r.status == suite::Status::Fail; });
  return failed ? exit_verify : exit_ok;
}

continuation::Axis axis(double lo, double hi, int res) {
  return {lo, hi, lo == hi ? 1 : res};
}

std::array<double, 4> parse_window(const std::string& text) {
  std::array<double, 4> w{};
  std::size_t start = 0;
  for (int i = 0; i < 4; ++i) {
    const std::size_t comma = text.find(',', start);
    if ((i < 3) == (comma == std::string::npos))
      throw ParseError("window '" + text + "' must be re_lo,re_hi,im_lo,im_hi");
    const std::size_t end = i < 3 ? comma : text.size();
    w[i] = parse_real(std::string_view(text).substr(start, end - start), "window");
    start = end + 1;
  }
  return w;
}

struct ScanOptions {
  std::string series;
  std::vector<std::string> fix;
  std::string s1_window, s2_window;
  int res = 11;
  int workers = 0;
  std::string format = "csv";
  std::string output;
};

int cmd_scan(const ScanOptions& so, const EvalOptions& opt, std::ostream& out, std::ostream& err) {
  const auto spec = arith::series_by_name(so.series);
  if (so.res < 1) throw ParseError("--res must be positive");
  std::optional<cplx> fixed_s1, fixed_s2;
  for (const auto& f : so.fix) {
    const auto eq = f.find('=');
    if (eq == std::string::npos) throw ParseError("--fix expects s1=VALUE or s2=VALUE");
    const std::string var = f.substr(0, eq);
    const cplx v = parse_complex(f.substr(eq + 1));
    if (var == "s1") fixed_s1 = v;
    else if (var == "s2") fixed_s2 = v;
    else throw ParseError("--fix expects s1=VALUE or s2=VALUE");
  }
  continuation::ScanWindow w;
  auto fill = [&](const std::optional<cplx>& fixed, const std::string& window, continuation::Axis& re,
                  continuation::Axis& im, const char* name) {
    if (fixed && !window.empty()) throw ParseError(std::string(name) + " is both fixed and scanned");
    if (fixed) {
      re = axis(fixed->real(), fixed->real(), 1);
      im = axis(fixed->imag(), fixed->imag(), 1);
    } else if (!window.empty()) {
      const auto b = parse_window(window);
      re = axis(b[0], b[1], so.res);
      im = axis(b[2], b[3], so.res);
    } else {
      throw ParseError(std::string(name) + " needs --fix or a window");
    }
  };
  fill(fixed_s1, so.s1_window, w.re_s1, w.im_s1, "s1");
  fill(fixed_s2, so.s2_window, w.re_s2, w.im_s2, "s2");
  if (so.format != "csv" && so.format != "json-lines") throw ParseError("--format must be csv or json-lines");

  const auto config = opt.config();
  const auto table = load_table(opt.zeros, err);
  const int workers = so.workers > 0 ? so.workers : int(std::max(1u, std::thread::hardware_concurrency()));
  const auto rows = continuation::scan_grid(spec, w, table, config, workers);

  std::ofstream file;
  if (!so.output.empty()) {
    file.open(so.output);
    if (!file) throw ParseError("cannot open output file " + so.output);
  }
  std::ostream& sink = so.output.empty() ? out : file;
  if (so.format == "csv") continuation::write_csv(sink, rows);
  else continuation::write_json_lines(sink, rows);
  return exit_ok;
}

struct ReverseOptions {
  std::string series;
  std::string point;
  std::optional<int> m, n, rho_l;
  std::size_t zero_index = 1;
  std::string u1, u2;
  bool numeric = false;
  bool regular = false;
  double h0 = 1e-2;
};

void print_limit(std::ostream& out, const char* label, const reverse::LimitResult& r) {
  out << label << ' ' << format_complex(r.value) << '\n' << "error_estimate " << sci(r.error_estimate) << '\n';
}

int cmd_reverse(const ReverseOptions& ro, const EvalOptions& opt, std::ostream& out, std::ostream& err) {
  const auto spec = arith::series_by_name(ro.series);
  reverse::LimitConfig lc;
  lc.eval = opt.config();
  lc.h0 = ro.h0;
  if (!(lc.h0 > 0.0) || lc.h0 > 0.1) throw ParseError("--h0 must lie in (0, 0.1]");

  // Generic iterated limit at an arbitrary point.
  if (!ro.u1.empty() || !ro.u2.empty()) {
    if (ro.u1.empty() || ro.u2.empty()) throw ParseError("--u1 and --u2 go together");
    const auto table = load_table(opt.zeros, err);
    const cplx u1 = parse_complex(ro.u1), u2 = parse_complex(ro.u2);
    const auto r = ro.regular ? reverse::regular_numeric(spec, u1, u2, table, lc)
                              : reverse::reverse_numeric(spec, u1, u2, table, lc);
    print_limit(out, ro.regular ? "regular" : "numeric", r);
    return exit_ok;
  }

  std::optional<zeros::ZeroTable> table;
  auto zeros_table = [&]() -> const zeros::ZeroTable& {
    if (!table) table = load_table(opt.zeros, err);
    return *table;
  };
  cplx closed;
  cplx u1, u2;
  if (spec.coeff == arith::CoeffKind::Moebius) {
    using reverse::MuPoint;
    MuPoint p;
    if (ro.point == "origin") p = MuPoint::Origin;
    else if (ro.point == "minus-one-zero") p = MuPoint::MinusOneZero;
    else if (ro.point == "rho-line") p = MuPoint::RhoLine;
    else if (ro.point == "rho-line-shift") p = MuPoint::RhoLineShift;
    else throw ParseError("--point must be origin, minus-one-zero, rho-line or rho-line-shift");
    const bool on_zero = p == MuPoint::RhoLine || p == MuPoint::RhoLineShift;
    closed = reverse::reverse_mu_closed(p, on_zero ? zeros_table() : zeros::ZeroTable{}, ro.zero_index);
    switch (p) {
      case MuPoint::Origin: u1 = 0.0, u2 = 0.0; break;
      case MuPoint::MinusOneZero: u1 = -1.0, u2 = 0.0; break;
      case MuPoint::RhoLine: u1 = 1.0 + zeros_table().rho(ro.zero_index - 1), u2 = 0.0; break;
      case MuPoint::RhoLineShift: u1 = 2.0 + zeros_table().rho(ro.zero_index - 1), u2 = -1.0; break;
    }
  } else if (spec.is_von_mangoldt()) {
    if (ro.m && ro.n) {
      closed = reverse::reverse_lambda_closed(*ro.m, *ro.n);
      u1 = -double(*ro.m), u2 = -double(*ro.n);
    } else if (ro.rho_l) {
      closed = reverse::reverse_lambda_rho(*ro.rho_l, ro.zero_index, zeros_table());
      u1 = 1.0 + *ro.rho_l + zeros_table().rho(ro.zero_index - 1);
      u2 = -double(*ro.rho_l);
    } else {
      throw ParseError("von Mangoldt reverse values need --m and --n, --rho-l, or --u1 and --u2");
    }
  } else {
    throw ParseError("closed reverse values exist for lambda and mu; use --u1 and --u2 for " + spec.name());
  }
  out << "closed " << format_complex(closed) << '\n';
  if (ro.numeric) {
    const auto r = reverse::reverse_numeric(spec, u1, u2, zeros_table(), lc);
    print_limit(out, "numeric", r);
    out << "difference " << sci(std::abs(r.value - closed)) << '\n';
  }
  return exit_ok;
}

int cmd_zeros_validate(const std::string& path, std::ostream& out, std::ostream& err) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open zeros file " + path);
  const auto table = zeros::parse_zeros(in);
  const auto res = zeros::residuals(table);
  int bad = 0;
  out << "index,ordinate,residual,abs_derivative,status\n";
  for (std::size_t i = 0; i < res.size(); ++i) {
    const bool ok = res[i].residual < zeros::validation_threshold && res[i].ordinate > 14.0 &&
                    std::abs(res[i].derivative) >= 1e-8;
    bad += ok ? 0 : 1;
    out << i + 1 << ',' << format_double(res[i].ordinate) << ',' << sci(res[i].residual) << ','
        << sci(std::abs(res[i].derivative)) << ',' << (ok ? "ok" : "bad") << '\n';
  }
  if (bad > 0) {
    err << bad << " of " << res.size() << " entries fail validation (|zeta(rho)| < "
        << zeros::validation_threshold << ", ordinate > 14, simple zero)\n";
    return exit_config;
  }
  if (res.size() < 50) err << "warning: only " << res.size() << " zeros; continuation-grade results need at least 50\n";
  return exit_ok;
}

}  // namespace

cplx parse_complex(const std::string& raw) {
  std::string_view s(raw);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  if (s.empty()) throw ParseError("empty complex literal");
  const std::string context = "complex literal '" + raw + "'";
  if (s.back() != 'i') return {parse_real(s, context), 0.0};

  s.remove_suffix(1);
  // The imaginary part starts at the last sign that is not an exponent sign.
  std::size_t split = std::string_view::npos;
  for (std::size_t k = s.size(); k-- > 1;)
    if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E') {
      split = k;
      break;
    }
  const std::string_view re = split == std::string_view::npos ? std::string_view{} : s.substr(0, split);
  std::string_view im = split == std::string_view::npos ? s : s.substr(split);
  double imag;
  if (im.empty() || im == "+") imag = 1.0;
  else if (im == "-") imag = -1.0;
  else imag = parse_real(im, context);
  return {re.empty() ? 0.0 : parse_real(re, context), imag};
}

std::string format_complex(cplx z) {
  const double im = z.imag();
  if (im == 0.0) return format_double(z.real());
  const std::string sign = std::signbit(im) ? "-" : "+";
  return format_double(z.real()) + sign + format_double(std::abs(im)) + "i";
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Double Dirichlet series with arithmetic coefficients: continuation, reverse values, scans"};
  app.name("ddseries");
  app.require_subcommand(1);

  EvalOptions eval_opt;
  std::string series, s1, s2, format = "text";
  auto* eval = app.add_subcommand("eval", "evaluate the continued series at one point");
  eval->add_option("--series", series, "lambda, mu, phi or liouville")->required();
  eval->add_option("--s1", s1, "complex s1, e.g. 2-0.5i")->required();
  eval->add_option("--s2", s2, "complex s2")->required();
  eval->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
  eval_opt.attach(eval);

  EvalOptions oracle_opt;
  std::size_t n_max = 1'000'000;
  bool no_compare = false;
  auto* oracle = app.add_subcommand("oracle", "direct double sum, compared with the continuation");
  oracle->add_option("--series", series, "lambda, mu, phi or liouville")->required();
  oracle->add_option("--s1", s1, "complex s1")->required();
  oracle->add_option("--s2", s2, "complex s2")->required();
  oracle->add_option("--n-max", n_max, "sieve bound")->capture_default_str();
  oracle->add_flag("--no-compare", no_compare, "skip the continuation");
  oracle_opt.attach(oracle);

  std::string verify_zeros;
  auto* verify = app.add_subcommand("verify", "run the acceptance checks");
  verify->add_option("--zeros", verify_zeros, "zeros file");

  EvalOptions scan_opt;
  ScanOptions so;
  auto* scan = app.add_subcommand("scan", "evaluate on a grid and emit CSV or JSON lines");
  scan->add_option("--series", so.series, "lambda, mu, phi or liouville")->required();
  scan->add_option("--fix", so.fix, "pin a variable, e.g. s2=3");
  scan->add_option("--s1-window", so.s1_window, "re_lo,re_hi,im_lo,im_hi");
  scan->add_option("--s2-window", so.s2_window, "re_lo,re_hi,im_lo,im_hi");
  scan->add_option("--res", so.res, "points per scanned axis")->capture_default_str();
  scan->add_option("--workers", so.workers, "threads (default: hardware concurrency)");
  scan->add_option("--format", so.format, "csv or json-lines")->capture_default_str();
  scan->add_option("--output", so.output, "output file (default: stdout)");
  scan_opt.attach(scan);

  EvalOptions rev_opt;
  ReverseOptions ro;
  auto* rev = app.add_subcommand("reverse", "reverse values: closed forms and iterated limits");
  rev->add_option("--series", ro.series, "lambda or mu for closed forms; any series with --u1/--u2")->required();
  rev->add_option("--point", ro.point, "mu: origin, minus-one-zero, rho-line, rho-line-shift");
  rev->add_option("--m", ro.m, "lambda: reverse value at (-m, -n)");
  rev->add_option("--n", ro.n, "lambda: reverse value at (-m, -n)");
  rev->add_option("--rho-l", ro.rho_l, "lambda: reverse value at (1 + l + rho, -l), l = 0 or 1");
  rev->add_option("--zero-index", ro.zero_index, "1-based zero index")->capture_default_str();
  rev->add_option("--u1", ro.u1, "generic point, first coordinate");
  rev->add_option("--u2", ro.u2, "generic point, second coordinate");
  rev->add_flag("--numeric", ro.numeric, "also compute the iterated limit numerically");
  rev->add_flag("--regular", ro.regular, "with --u1/--u2: take the s2 limit first");
  rev->add_option("--h0", ro.h0, "largest extrapolation step")->capture_default_str();
  rev_opt.attach(rev);

  std::string validate_file;
  auto* zeros_cmd = app.add_subcommand("zeros", "zero-table utilities");
  zeros_cmd->require_subcommand(1);
  auto* validate = zeros_cmd->add_subcommand("validate", "report |zeta(rho)| for every entry");
  validate->add_option("--file", validate_file, "zeros file")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_config;
  }

  try {
    if (*eval) return cmd_eval(series, s1, s2, eval_opt, format, out, err);
    if (*oracle) return cmd_oracle(series, s1, s2, oracle_opt, n_max, !no_compare, out, err);
    if (*verify) return cmd_verify(verify_zeros, out, err);
    if (*scan) return cmd_scan(so, scan_opt, out, err);
    if (*rev) return cmd_reverse(ro, rev_opt, out, err);
    if (*validate) return cmd_zeros_validate(validate_file, out, err);
  } catch (const continuation::SingularPointError& e) {
    print_tags(out, e.tags());
    err << e.what() << '\n';
    return exit_singular;
  } catch (const DivergenceError& e) {
    out << "divergent\n";
    err << e.what() << '\n';
    return exit_singular;
  } catch (const PoleError& e) {
    err << e.what() << '\n';
    return exit_singular;
  } catch (const ToleranceError& e) {
    err << e.what() << '\n';
    return exit_tolerance;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return exit_config;
  }
  return exit_config;
}

}  // namespace ddseries::cli
