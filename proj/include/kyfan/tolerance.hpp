#pragma once

#include <algorithm>
#include <cmath>

namespace kyfan {

// Absolute + relative tolerance pair used for every bound comparison.
// One knob, threaded explicitly through all verdicts.
struct Tolerance {
    double abs = 1e-9;
    double rel = 1e-9;

    double margin(double a, double b) const {
        return std::max(abs, rel * std::max(std::fabs(a), std::fabs(b)));
    }
};

inline bool leq(double lhs, double rhs, const Tolerance& tol) {
    return lhs <= rhs + tol.margin(lhs, rhs);
}

inline bool geq(double lhs, double rhs, const Tolerance& tol) {
    return lhs >= rhs - tol.margin(lhs, rhs);
}

inline bool close(double a, double b, const Tolerance& tol) {
    return std::fabs(a - b) <= tol.margin(a, b);
}

} // namespace kyfan
