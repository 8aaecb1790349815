#ifndef PERMLAB_RNG_HPP
#define PERMLAB_RNG_HPP

#include <array>
#include <cmath>
#include <cstdint>

namespace permlab {

// Philox4x32-10 counter-based generator. Keyed by (seed, stream); each
// (key, counter) pair maps to four independent 32-bit words, so parallel
// streams replay identically regardless of how work is divided.
class PhiloxRng {
  public:
    PhiloxRng(std::uint64_t seed, std::uint64_t stream) {
        key_[0] = static_cast<std::uint32_t>(seed);
        key_[1] = static_cast<std::uint32_t>(seed >> 32);
        ctr_hi_[0] = static_cast<std::uint32_t>(stream);
        ctr_hi_[1] = static_cast<std::uint32_t>(stream >> 32);
    }

    std::uint32_t next_u32() {
        if (slot_ == 4) {
            block_ = round10(counter_++);
            slot_ = 0;
        }
        return block_[slot_++];
    }

    std::uint64_t next_u64() {
        std::uint64_t lo = next_u32();
        std::uint64_t hi = next_u32();
        return (hi << 32) | lo;
    }

    // uniform in [0, 1)
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // unbiased-enough integer in [0, n): Lemire multiply-shift
    std::uint64_t uniform_int(std::uint64_t n) {
        return static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(next_u64()) * n) >> 64);
    }

    // exact Poisson by Knuth's product method, chunked so exp() never underflows
    std::uint64_t poisson(double lambda) {
        std::uint64_t total = 0;
        while (lambda > 500.0) {
            total += poisson_small(500.0);
            lambda -= 500.0;
        }
        return total + poisson_small(lambda);
    }

  private:
    std::uint64_t poisson_small(double lambda) {
        const double limit = std::exp(-lambda);
        std::uint64_t k = 0;
        double prod = 1.0;
        for (;;) {
            prod *= uniform();
            if (prod <= limit) return k;
            ++k;
        }
    }

    std::array<std::uint32_t, 4> round10(std::uint64_t ctr_lo) const {
        std::uint32_t x0 = static_cast<std::uint32_t>(ctr_lo);
        std::uint32_t x1 = static_cast<std::uint32_t>(ctr_lo >> 32);
        std::uint32_t x2 = ctr_hi_[0];
        std::uint32_t x3 = ctr_hi_[1];
        std::uint32_t k0 = key_[0];
        std::uint32_t k1 = key_[1];
        for (int r = 0; r < 10; ++r) {
            std::uint64_t p0 = static_cast<std::uint64_t>(0xD2511F53u) * x0;
            std::uint64_t p1 = static_cast<std::uint64_t>(0xCD9E8D57u) * x2;
            std::uint32_t y0 = static_cast<std::uint32_t>(p1 >> 32) ^ x1 ^ k0;
            std::uint32_t y1 = static_cast<std::uint32_t>(p1);
            std::uint32_t y2 = static_cast<std::uint32_t>(p0 >> 32) ^ x3 ^ k1;
            std::uint32_t y3 = static_cast<std::uint32_t>(p0);
            x0 = y0; x1 = y1; x2 = y2; x3 = y3;
            k0 += 0x9E3779B9u;
            k1 += 0xBB67AE85u;
        }
        return {x0, x1, x2, x3};
    }

    std::array<std::uint32_t, 2> key_{};
    std::array<std::uint32_t, 2> ctr_hi_{};
    std::uint64_t counter_ = 0;
    std::array<std::uint32_t, 4> block_{};
    int slot_ = 4;
};

}  // namespace permlab

#endif
