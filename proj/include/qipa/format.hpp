#pragma once

#include <charconv>
#include <string>

namespace qipa {

// Shortest round-trip decimal form. All CSV/JSON/SVG numbers go through this
// so that identical runs serialize byte-identically.
inline std::string format_double(double v) {
    char buf[40];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

}  // namespace qipa
