#pragma once

#include <charconv>
#include <string>

namespace lgl {

// Shortest round-trip decimal form, independent of the locale.
inline std::string format_number(double x) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

}  // namespace lgl
