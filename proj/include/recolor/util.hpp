#pragma once

#include <limits>

namespace recolor {

// a*b with saturation at LLONG_MAX; inputs must be non-negative.
inline long long mul_saturating(long long a, long long b) {
    if (a == 0 || b == 0) return 0;
    if (a > std::numeric_limits<long long>::max() / b) {
        return std::numeric_limits<long long>::max();
    }
    return a * b;
}

// base^exp with saturation at LLONG_MAX. ipow_saturating(0, 0) == 1.
inline long long ipow_saturating(long long base, long long exp) {
    long long result = 1;
    for (long long i = 0; i < exp; ++i) {
        if (base != 0 && result > std::numeric_limits<long long>::max() / base) {
            return std::numeric_limits<long long>::max();
        }
        result *= base;
    }
    return result;
}

}  // namespace recolor
