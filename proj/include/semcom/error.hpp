#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace semcom {

enum class errc {
  invalid_argument = 1,
  parse_error = 2,
  io_error = 3,
  instance_too_large = 4,
  infeasible = 5,
  internal = 6,
};

const char* errc_name(errc code) noexcept;

// Single exception type for the whole library; the C layer maps code() onto
// status values and what() onto the last-error string.
class Error : public std::runtime_error {
 public:
  Error(errc code, std::string message)
      : std::runtime_error(std::move(message)), code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, std::string message) {
  throw Error(code, std::move(message));
}

inline const char* errc_name(errc code) noexcept {
  switch (code) {
    case errc::invalid_argument: return "invalid_argument";
    case errc::parse_error: return "parse_error";
    case errc::io_error: return "io_error";
    case errc::instance_too_large: return "instance_too_large";
    case errc::infeasible: return "infeasible";
    case errc::internal: return "internal";
  }
  return "unknown";
}

}  // namespace semcom
