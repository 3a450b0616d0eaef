#pragma once

#include <charconv>
#include <string>
#include <system_error>

namespace rsb {

/// Shortest round-trip decimal form of a double; locale-independent.
inline std::string format_double(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    if (res.ec != std::errc{}) return "nan";
    return std::string(buf, res.ptr);
}

}  // namespace rsb
