#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "latgreen/lattice.hpp"

namespace latgreen::cli {

enum ExitCode : int {
  kOk = 0,
  kRegion = 2,
  kTolerance = 3,
  kParse = 4,
};

/// Thrown for malformed command-line values.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Parses "a", "bi", "a+bi" or "a-bi" (no spaces, "i" alone means 1i).
Complex parse_complex(const std::string& text);
/// Formats z as "a+bi" with round-trip precision.
std::string format_complex(Complex z);
/// Parses a comma-separated integer list such as "2,-1".
LatticePoint parse_point(const std::string& text);

/// Runs the command line; output goes to out, diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace latgreen::cli
