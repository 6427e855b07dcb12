#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace bclab {

// 256-bit fixed-point fraction in [0, 1).  w[0] holds the most significant
// 64 bits.  Orbits of piecewise-linear expanding maps (x2, x3 mod 1) eat one
// input digit per step, so double-precision states degenerate after ~53
// iterations; 256 bits give a faithful runway of ~200+ steps from explicit
// starting points.  Long sampled orbits use digit streams instead (see
// dynsys.hpp), for which the runway is unbounded.
struct Fixed256 {
    std::array<std::uint64_t, 4> w{0, 0, 0, 0};

    static Fixed256 from_double(double x) {
        if (!(x >= 0.0 && x < 1.0)) throw std::domain_error("Fixed256: need x in [0,1)");
        Fixed256 f;
        double r = x;
        for (int i = 0; i < 4; ++i) {
            r *= 0x1.0p64;
            const double d = std::floor(r);
            f.w[i] = static_cast<std::uint64_t>(d);
            r -= d;
        }
        return f;
    }

    // Truncated 256-bit expansion of p/q (exact long division).
    static Fixed256 from_ratio(std::uint64_t p, std::uint64_t q) {
        if (q == 0 || p >= q) throw std::domain_error("Fixed256: need p < q, q > 0");
        Fixed256 f;
        unsigned __int128 rem = p;
        for (int i = 0; i < 4; ++i) {
            const unsigned __int128 t = rem << 64;
            f.w[i] = static_cast<std::uint64_t>(t / q);
            rem = t % q;
        }
        return f;
    }

    double to_double() const {
        return static_cast<double>(w[0]) * 0x1.0p-64 + static_cast<double>(w[1]) * 0x1.0p-128;
    }

    bool is_zero() const { return w[0] == 0 && w[1] == 0 && w[2] == 0 && w[3] == 0; }

    // x <- 2x mod 1 (left shift by one bit).
    void times2_mod1() {
        for (int i = 0; i < 3; ++i) w[i] = (w[i] << 1) | (w[i + 1] >> 63);
        w[3] <<= 1;
    }

    // x <- 3x mod 1.
    void times3_mod1() {
        std::uint64_t carry = 0;
        for (int i = 3; i >= 0; --i) {
            const unsigned __int128 t =
                static_cast<unsigned __int128>(w[i]) * 3u + carry;
            w[i] = static_cast<std::uint64_t>(t);
            carry = static_cast<std::uint64_t>(t >> 64);
        }
        // carry is the integer part; dropping it is the mod 1.
    }
};

}  // namespace bclab
