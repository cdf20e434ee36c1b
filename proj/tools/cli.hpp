#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "ddseries/error.hpp"

namespace ddseries::cli {

// Stable exit codes.
inline constexpr int exit_ok = 0;
inline constexpr int exit_config = 1;     // unparseable arguments, bad files, bad config
inline constexpr int exit_singular = 2;   // point on a singular set, or no limit exists
inline constexpr int exit_tolerance = 3;  // requested accuracy not reached
inline constexpr int exit_verify = 4;     // a verification check failed

// "a", "a+bi", "a-bi", "bi", "i"; '.' is the decimal point in every locale.
cplx parse_complex(const std::string& text);
// Inverse of parse_complex, shortest round-trip digits; real values
// (imaginary part exactly zero) print without an imaginary part.
std::string format_complex(cplx z);

// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ddseries::cli
