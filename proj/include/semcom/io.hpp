#pragma once

#include <string>

namespace semcom {

// Whole-file text helpers; both throw Error(errc::io_error) with the path in
// the message.
std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace semcom
