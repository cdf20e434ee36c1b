#include <charconv>
#include <ostream>
#include <thread>

#include <json.hpp>

#include "ddseries/continuation.hpp"

namespace ddseries::continuation {

std::string format_double(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

std::vector<ScanRow> scan_grid(const arith::SeriesSpec& series, const ScanWindow& w, const zeros::ZeroTable& table,
                               const EvalConfig& config, int workers) {
  for (const Axis* a : {&w.re_s1, &w.im_s1, &w.re_s2, &w.im_s2})
    if (a->count < 1) throw DomainError("scan axis needs at least one point");
  std::vector<ScanRow> rows;
  for (int i4 = 0; i4 < w.im_s2.count; ++i4)
    for (int i3 = 0; i3 < w.re_s2.count; ++i3)
      for (int i2 = 0; i2 < w.im_s1.count; ++i2)
        for (int i1 = 0; i1 < w.re_s1.count; ++i1) {
          ScanRow r;
          r.s1 = {w.re_s1.at(i1), w.im_s1.at(i2)};
          r.s2 = {w.re_s2.at(i3), w.im_s2.at(i4)};
          rows.push_back(std::move(r));
        }

  auto work = [&](std::size_t begin, std::size_t stride) {
    for (std::size_t i = begin; i < rows.size(); i += stride) {
      ScanRow& r = rows[i];
      try {
        const auto res = evaluate(series, r.s1, r.s2, table, config);
        r.value = res.value;
        r.error_estimate = res.error_estimate;
      } catch (const SingularPointError& e) {
        r.tags = e.tags();
      } catch (const Error& e) {
        r.failure = e.what();
      }
    }
  };
  const std::size_t n = std::size_t(std::max(1, workers));
  if (n == 1) {
    work(0, 1);
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t k = 0; k < n; ++k) pool.emplace_back(work, k, n);
  }
  return rows;
}

namespace {

std::string tag_list(const std::vector<SingularityTag>& tags) {
  std::string s;
  for (const auto& t : tags) {
    if (!s.empty()) s += ';';
    s += t.label();
  }
  return s;
}

}  // namespace

void write_csv(std::ostream& out, const std::vector<ScanRow>& rows) {
  out << "re_s1,im_s1,re_s2,im_s2,re_val,im_val,err,singular_tags\n";
  for (const auto& r : rows) {
    out << format_double(r.s1.real()) << ',' << format_double(r.s1.imag()) << ',' << format_double(r.s2.real())
        << ',' << format_double(r.s2.imag()) << ',';
    if (r.value)
      out << format_double(r.value->real()) << ',' << format_double(r.value->imag()) << ','
          << format_double(r.error_estimate);
    else
      out << "nan,nan,nan";
    out << ',' << tag_list(r.tags) << '\n';
  }
}

void write_json_lines(std::ostream& out, const std::vector<ScanRow>& rows) {
  for (const auto& r : rows) {
    nlohmann::ordered_json j;
    j["re_s1"] = r.s1.real();
    j["im_s1"] = r.s1.imag();
    j["re_s2"] = r.s2.real();
    j["im_s2"] = r.s2.imag();
    if (r.value) {
      j["re_val"] = r.value->real();
      j["im_val"] = r.value->imag();
      j["err"] = r.error_estimate;
    } else {
      j["re_val"] = nullptr;
      j["im_val"] = nullptr;
      j["err"] = nullptr;
    }
    nlohmann::json tags = nlohmann::json::array();
    for (const auto& t : r.tags) tags.push_back(t.label());
    j["singular_tags"] = tags;
    if (!r.failure.empty()) j["failure"] = r.failure;
    out << j.dump() << '\n';
  }
}

}  // namespace ddseries::continuation
