#pragma once

#include <cstdio>
#include <string>

namespace utsforge::detail {

// Shortest-ish human form for diagnostics.
inline std::string num(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", x);
    return buf;
}

// Round-trip exact decimal form.
inline std::string exact(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

}  // namespace utsforge::detail
