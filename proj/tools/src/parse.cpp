#include <charconv>
#include <cstdio>
#include <sstream>

#include "latgreen_cli/cli.hpp"

namespace latgreen::cli {

namespace {

double parse_real(std::string_view s, const std::string& whole) {
  if (s.empty()) throw ParseError("malformed complex number '" + whole + "'");
  if (s.front() == '+') s.remove_prefix(1);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw ParseError("malformed complex number '" + whole + "' (expected a+bi)");
  }
  return v;
}

}  // namespace

Complex parse_complex(const std::string& text) {
  if (text.empty() || text.find_first_of(" \t") != std::string::npos) {
    throw ParseError("malformed complex number '" + text + "' (expected a+bi without spaces)");
  }
  Complex z;
  if (text.back() != 'i') {
    z = {parse_real(text, text), 0.0};
  } else {
    const std::string_view body(text.data(), text.size() - 1);
    // split at the last sign that is not leading and not an exponent sign
    std::size_t split = std::string_view::npos;
    for (std::size_t k = body.size(); k-- > 1;) {
      if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
        split = k;
        break;
      }
    }
    auto imag_part = [&](std::string_view s) {
      if (s.empty() || s == "+") return 1.0;
      if (s == "-") return -1.0;
      return parse_real(s, text);
    };
    if (split == std::string_view::npos) {
      z = {0.0, imag_part(body)};
    } else {
      z = {parse_real(body.substr(0, split), text), imag_part(body.substr(split))};
    }
  }
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
    throw ParseError("non-finite complex number '" + text + "'");
  }
  return z;
}

std::string format_complex(Complex z) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g%+.17gi", z.real(), z.imag());
  return buf;
}

LatticePoint parse_point(const std::string& text) {
  std::vector<std::int64_t> coords;
  std::size_t pos = 0;
  while (true) {
    const std::size_t comma = text.find(',', pos);
    const std::string item = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    std::int64_t v = 0;
    const char* first = item.data();
    if (!item.empty() && item.front() == '+') ++first;
    const auto [ptr, ec] = std::from_chars(first, item.data() + item.size(), v);
    if (item.empty() || ec != std::errc() || ptr != item.data() + item.size()) {
      throw ParseError("malformed lattice point '" + text + "' (expected e.g. 2,-1)");
    }
    coords.push_back(v);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return LatticePoint(std::move(coords));
}

}  // namespace latgreen::cli
