#pragma once

#include <charconv>
#include <string>
#include <system_error>

namespace concord {

// Shortest decimal form that round-trips to the same double. Keeps emitted
// tables byte-stable across writers and lets a reader recompute aggregates
// to the exact bit pattern.
inline std::string format_double(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

inline bool parse_double(std::string_view text, double& out) {
  const char* first = text.data();
  const char* last = first + text.size();
  auto res = std::from_chars(first, last, out);
  return res.ec == std::errc{} && res.ptr == last;
}

}  // namespace concord
