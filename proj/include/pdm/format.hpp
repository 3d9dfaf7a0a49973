#pragma once

// Locale-independent float formatting for CSV/JSON emission: shortest
// representation at 9 significant digits via std::to_chars.

#include <charconv>
#include <string>
#include <system_error>

namespace pdm {

inline std::string format_g9(double v) {
    char buf[48];
    auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 9);
    if (res.ec != std::errc()) return "nan";
    return std::string(buf, res.ptr);
}

}  // namespace pdm
