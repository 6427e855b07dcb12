#pragma once

#include <cstdint>
#include <limits>

namespace bclab {

// Splittable counter-based generator.
//
// Algorithm (pinned): word i of stream (master, stream) is
//
//     mix64(key + (i+1) * 0x9E3779B97F4A7C15)
//     key = mix64(mix64(master ^ 0x6A09E667F3BCC909) + mix64(stream * 0x9E3779B97F4A7C15 + 0xBB67AE8584CAA73B))
//
// where mix64 is the SplitMix64 finalizer (shift-xor / multiply avalanche,
// constants 0xBF58476D1CE4E5B9 and 0x94D049BB133111EB).  Every word is a pure
// function of (master, stream, i): streams can be split arbitrarily across
// workers and any word can be addressed in O(1), so ensembles are bitwise
// reproducible under any parallel schedule.

inline constexpr std::uint64_t kGolden64 = 0x9E3779B97F4A7C15ull;

inline std::uint64_t mix64(std::uint64_t z) {
    z ^= z >> 30;
    z *= 0xBF58476D1CE4E5B9ull;
    z ^= z >> 27;
    z *= 0x94D049BB133111EBull;
    z ^= z >> 31;
    return z;
}

class CounterRng {
public:
    CounterRng(std::uint64_t master, std::uint64_t stream)
        : key_(derive_key(master, stream)) {}

    static std::uint64_t derive_key(std::uint64_t master, std::uint64_t stream) {
        const std::uint64_t a = mix64(master ^ 0x6A09E667F3BCC909ull);
        const std::uint64_t b = mix64(stream * kGolden64 + 0xBB67AE8584CAA73Bull);
        return mix64(a + b);
    }

    std::uint64_t word_at(std::uint64_t i) const { return mix64(key_ + (i + 1) * kGolden64); }

    std::uint64_t next_u64() { return word_at(counter_++); }

    // Uniform in [0, 1), 53 random bits.
    double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // Uniform in {0, ..., n-1} by rejection-free scaling (128-bit multiply).
    std::uint64_t next_below(std::uint64_t n) {
        return static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(next_u64()) * n) >> 64);
    }

    std::uint64_t counter() const { return counter_; }
    std::uint64_t key() const { return key_; }

private:
    std::uint64_t key_;
    std::uint64_t counter_ = 0;
};

// Read-only view of the infinite random bit string of a stream.  Bit p is bit
// (63 - p mod 64) of word(p / 64); a 64-bit window starting at any bit offset
// is assembled from at most two words.  The left shift of the binary-digit
// string is therefore O(1) at any position.
class BitStream {
public:
    BitStream(std::uint64_t master, std::uint64_t stream) : rng_(master, stream) {}

    bool bit(std::uint64_t p) const {
        return (rng_.word_at(p >> 6) >> (63 - (p & 63))) & 1u;
    }

    std::uint64_t window64(std::uint64_t p) const {
        const std::uint64_t q = p >> 6, r = p & 63;
        const std::uint64_t w0 = rng_.word_at(q);
        if (r == 0) return w0;
        return (w0 << r) | (rng_.word_at(q + 1) >> (64 - r));
    }

    // The real number 0.b_p b_{p+1} ... in binary, to double precision.
    double value_at(std::uint64_t p) const {
        return static_cast<double>(window64(p) >> 11) * 0x1.0p-53;
    }

private:
    CounterRng rng_;
};

}  // namespace bclab
