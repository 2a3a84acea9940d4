#pragma once

#include <charconv>
#include <string>

namespace semcom {

// Shortest round-trip decimal form, the same bytes on every run. CSV and JSON
// emitters must go through this instead of iostreams, whose output depends on
// locale and precision state.
inline void append_double(std::string& out, double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  out.append(buf, res.ptr);
}

inline std::string format_double(double v) {
  std::string s;
  append_double(s, v);
  return s;
}

}  // namespace semcom
