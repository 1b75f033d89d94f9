#pragma once

#include <cstdio>
#include <limits>
#include <string>

namespace gridgame {

// All persisted floats use 17 significant digits so that repeated runs and
// golden files are byte-stable and round-trip exactly.
inline std::string fmt_double(double v) {
    if (v == std::numeric_limits<double>::infinity()) return "inf";
    if (v == -std::numeric_limits<double>::infinity()) return "-inf";
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

inline double parse_double(const std::string& tok) {
    if (tok == "inf") return std::numeric_limits<double>::infinity();
    if (tok == "-inf") return -std::numeric_limits<double>::infinity();
    return std::stod(tok);
}

}  // namespace gridgame
