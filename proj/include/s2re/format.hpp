#pragma once

#include <cstdio>
#include <string>

namespace s2re {

/// Fixed 12-significant-digit rendering used by every CSV/JSON writer, so
/// identical runs produce identical bytes.
inline std::string format_number(double x)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

} // namespace s2re
