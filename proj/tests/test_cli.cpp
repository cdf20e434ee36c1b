#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"

using namespace ddseries;
using namespace ddseries::cli;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::size_t count_lines(const std::string& s) {
  std::size_t n = 0;
  for (char c : s) n += c == '\n';
  return n;
}

std::filesystem::path temp_file(const std::string& name, const std::string& content) {
  const auto p = std::filesystem::temp_directory_path() / name;
  std::ofstream(p) << content;
  return p;
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("complex literals") {
    CHECK(parse_complex("2") == cplx(2.0, 0.0));
    CHECK(parse_complex("-0.5") == cplx(-0.5, 0.0));
    CHECK(parse_complex("2+3i") == cplx(2.0, 3.0));
    CHECK(parse_complex("2-0.5i") == cplx(2.0, -0.5));
    CHECK(parse_complex("1e-3+2e1i") == cplx(1e-3, 20.0));
    CHECK(parse_complex("-4i") == cplx(0.0, -4.0));
    CHECK(parse_complex("i") == cplx(0.0, 1.0));
    CHECK(parse_complex("-i") == cplx(0.0, -1.0));
    CHECK_THROWS_AS(parse_complex(""), ParseError);
    CHECK_THROWS_AS(parse_complex("2+"), ParseError);
    CHECK_THROWS_AS(parse_complex("2,5"), ParseError);
    CHECK_THROWS_AS(parse_complex("x"), ParseError);
    for (cplx z : {cplx(0.1, -0.3), cplx(-2.0, 0.0), cplx(1e-12, 14.134725141734693)})
      CHECK(parse_complex(format_complex(z)) == z);
    CHECK(format_complex(13.0) == "13");
  }

  TEST_CASE("eval exit codes") {
    auto ok = run({"eval", "--series", "lambda", "--s1", "2", "--s2", "3"});
    CHECK(ok.code == exit_ok);
    CHECK(ok.out.find("value 0.07930297") != std::string::npos);

    auto js = run({"eval", "--series", "mu", "--s1", "2", "--s2", "3", "--format", "json"});
    CHECK(js.code == exit_ok);
    CHECK(js.out.front() == '{');

    auto sing = run({"eval", "--series", "lambda", "--s1", "0", "--s2", "1"});
    CHECK(sing.code == exit_singular);
    CHECK(sing.out.rfind("singular", 0) == 0);
    CHECK(sing.out.find("S2eq1") != std::string::npos);

    CHECK(run({"eval", "--series", "mu", "--s1", "2", "--s2", "3", "--tol", "1e-30"}).code == exit_tolerance);
    CHECK(run({"eval", "--series", "mu", "--s1", "2", "--s2", "3", "--tol", "0.5"}).code == exit_config);
    CHECK(run({"eval", "--series", "nope", "--s1", "2", "--s2", "3"}).code == exit_config);
    CHECK(run({"eval", "--series", "lambda", "--s1", "2x", "--s2", "3"}).code == exit_config);
    CHECK(run({"eval", "--series", "lambda"}).code == exit_config);
    CHECK(run({"frobnicate"}).code == exit_config);
  }

  TEST_CASE("reverse subcommand") {
    auto mu = run({"reverse", "--series", "mu", "--point", "origin"});
    CHECK(mu.code == exit_ok);
    CHECK(mu.out == "closed 13\n");
    auto odd = run({"reverse", "--series", "lambda", "--m", "0", "--n", "3"});
    CHECK(odd.code == exit_singular);
    CHECK(odd.out == "divergent\n");
    auto gen = run({"reverse", "--series", "lambda", "--u1", "-1", "--u2", "0"});
    CHECK(gen.code == exit_singular);
    CHECK(run({"reverse", "--series", "phi", "--m", "0", "--n", "0"}).code == exit_config);
    CHECK(run({"reverse", "--series", "lambda", "--u1", "0"}).code == exit_config);
  }

  TEST_CASE("scan grid") {
    auto r = run({"scan", "--series", "lambda", "--fix", "s2=3", "--s1-window", "-2,2,-2,2", "--res", "11",
                  "--workers", "2"});
    CHECK(r.code == exit_ok);
    CHECK(count_lines(r.out) == 122);  // header and 121 rows
    auto json = run({"scan", "--series", "mu", "--fix", "s2=3", "--s1-window", "1,2,0,0", "--res", "3", "--format",
                     "json-lines"});
    CHECK(json.code == exit_ok);
    CHECK(count_lines(json.out) == 3);
    CHECK(run({"scan", "--series", "mu", "--fix", "s2=3"}).code == exit_config);
  }

  TEST_CASE("zero files") {
    auto good = temp_file("ddseries_good_zeros.txt", "14.134725141734693790\n21.022039638771554993\n");
    auto r = run({"zeros", "validate", "--file", good.string()});
    CHECK(r.code == exit_ok);
    CHECK(count_lines(r.out) == 3);

    auto bad = temp_file("ddseries_bad_zeros.txt", "14.134725141734693790\n21.5\n");
    CHECK(run({"zeros", "validate", "--file", bad.string()}).code == exit_config);
    CHECK(run({"eval", "--series", "lambda", "--s1", "2", "--s2", "3", "--zeros", bad.string()}).code ==
          exit_config);
    CHECK(run({"eval", "--series", "lambda", "--s1", "2", "--s2", "3", "--zeros", "/nonexistent/zeros"}).code ==
          exit_config);

    auto empty = temp_file("ddseries_empty_zeros.txt", "# no zeros\n");
    auto v = run({"verify", "--zeros", empty.string()});
    CHECK(v.out.find("SKIP [1]") != std::string::npos);
    CHECK(v.out.find("PASS [6]") != std::string::npos);
    CHECK(v.out.find("PASS [7]") != std::string::npos);
    CHECK(v.code == exit_ok);
  }
}
