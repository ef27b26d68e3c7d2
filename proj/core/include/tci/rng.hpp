#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <numbers>

namespace tci {

/// Counter-based generator (Philox 4x32-10). Draws are addressed by
/// (seed, stream, slot) rather than produced sequentially, so estimates are
/// reproducible bit-for-bit no matter how paths are batched or scheduled.
/// Streams map to Monte Carlo path indices, slots to draws within a path.
class CounterRng {
public:
    CounterRng(std::uint64_t seed, std::uint64_t stream) : stream_(stream) {
        key_[0] = static_cast<std::uint32_t>(seed);
        key_[1] = static_cast<std::uint32_t>(seed >> 32);
    }

    /// Uniform on the open interval (0,1); never returns 0 or 1.
    double uniform(std::uint64_t slot) const {
        const auto words = block(slot);
        return to_unit(words[0], words[1]);
    }

    /// Standard normal via Box-Muller on the slot's 128-bit block.
    double normal(std::uint64_t slot) const {
        const auto words = block(slot);
        const double u1 = to_unit(words[0], words[1]);
        const double u2 = to_unit(words[2], words[3]);
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
    }

private:
    static double to_unit(std::uint32_t lo, std::uint32_t hi) {
        const std::uint64_t bits = (static_cast<std::uint64_t>(hi) << 32) | lo;
        return (static_cast<double>(bits >> 11) + 0.5) * 0x1p-53;
    }

    static void mul_hi_lo(std::uint32_t a, std::uint32_t b, std::uint32_t& hi, std::uint32_t& lo) {
        const std::uint64_t p = static_cast<std::uint64_t>(a) * b;
        hi = static_cast<std::uint32_t>(p >> 32);
        lo = static_cast<std::uint32_t>(p);
    }

    std::array<std::uint32_t, 4> block(std::uint64_t slot) const {
        constexpr std::uint32_t mult_a = 0xD2511F53u, mult_b = 0xCD9E8D57u;
        constexpr std::uint32_t bump_a = 0x9E3779B9u, bump_b = 0xBB67AE85u;
        std::array<std::uint32_t, 4> ctr = {
            static_cast<std::uint32_t>(slot),
            static_cast<std::uint32_t>(slot >> 32),
            static_cast<std::uint32_t>(stream_),
            static_cast<std::uint32_t>(stream_ >> 32),
        };
        std::uint32_t k0 = key_[0], k1 = key_[1];
        for (int round = 0; round < 10; ++round) {
            std::uint32_t hi0, lo0, hi1, lo1;
            mul_hi_lo(mult_a, ctr[0], hi0, lo0);
            mul_hi_lo(mult_b, ctr[2], hi1, lo1);
            ctr = {hi1 ^ ctr[1] ^ k0, lo1, hi0 ^ ctr[3] ^ k1, lo0};
            k0 += bump_a;
            k1 += bump_b;
        }
        return ctr;
    }

    std::uint32_t key_[2];
    std::uint64_t stream_;
};

} // namespace tci
