#pragma once

#include <cmath>

namespace bclab {

// Cumulative distribution F(x) = mu([0, x]) of the middle-third Cantor
// measure, evaluated by scanning ternary digits.  Digits t_i in {0, 2}
// contribute binary digits t_i / 2 of F; the first digit equal to 1 puts x in
// a gap, where F takes the plateau value.  Evaluated in long double: digit
// extraction amplifies the representation error by 3 per digit, so ~37 digits
// are trustworthy and the truncation tail is below 2^-60.
inline double devil_staircase(double x) {
    if (x <= 0.0) return 0.0;
    if (x >= 1.0) return 1.0;
    long double r = static_cast<long double>(x);
    long double f = 0.0L;
    long double w = 1.0L;
    for (int i = 0; i < 64; ++i) {
        r *= 3.0L;
        const int digit = static_cast<int>(r);
        r -= digit;
        w *= 0.5L;
        if (digit == 1) {
            f += w;
            break;
        }
        if (digit == 2) f += w;
    }
    return static_cast<double>(f);
}

}  // namespace bclab
