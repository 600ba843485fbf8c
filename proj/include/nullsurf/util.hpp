#pragma once

#include <cstdio>
#include <string>
#include <vector>

namespace nullsurf {

// Uniform samples of [lo, hi] with both endpoints exact. The naive
// lo + i * step form can overshoot hi by an ulp, which matters because
// sampling must stay inside declared domains.
inline std::vector<double> linspace(double lo, double hi, int n) {
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        double x = (i == n - 1) ? hi : lo + (hi - lo) * (static_cast<double>(i) / (n - 1));
        out.push_back(x);
    }
    return out;
}

// Shortest round-trip decimal form, 17 significant digits.
inline std::string fmt_g17(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

// Compact form for report text.
inline std::string fmt_g3(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", x);
    return buf;
}

}  // namespace nullsurf
