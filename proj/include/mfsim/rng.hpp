#pragma once

#include <cmath>
#include <cstdint>

namespace mf {

/// SplitMix64 output function (Vigna 2015). Used both as a stream
/// state-advance and, statelessly, to derive substream keys.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

/// Named substreams of one noise realization. Keeping the streams apart
/// means e.g. adding Wiener coordinates never perturbs the jump draws.
enum class RngChannel : std::uint64_t {
    Wiener = 1,
    JumpTimes = 2,
    Marks = 3,
    Generic = 4,
};

/// Splittable counter-seeded generator keyed by (seed, path, channel).
///
/// The key triple is avalanched through SplitMix64 so that nearby seeds or
/// path indices give unrelated streams; draws then advance sequentially.
class RngStream {
  public:
    RngStream(std::uint64_t seed, std::uint64_t path_index, RngChannel channel) {
        std::uint64_t s = seed;
        std::uint64_t k0 = splitmix64(s);
        s = k0 ^ (0x9e3779b97f4a7c15ull * (path_index + 1));
        std::uint64_t k1 = splitmix64(s);
        s = k1 ^ (0xbf58476d1ce4e5b9ull * static_cast<std::uint64_t>(channel));
        state_ = splitmix64(s);
    }

    std::uint64_t next_u64() { return splitmix64(state_); }

    /// Uniform on [0, 1) with 53 random bits.
    double next_double() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    /// Uniform on (0, 1) (never exactly 0; safe under log).
    double next_double_open() {
        return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
    }

    /// Standard normal via Box-Muller; the pair partner is cached.
    double next_normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = next_double_open();
        double u2 = next_double();
        double r = std::sqrt(-2.0 * std::log(u1));
        double a = 6.283185307179586476925286766559 * u2;
        spare_ = r * std::sin(a);
        have_spare_ = true;
        return r * std::cos(a);
    }

    /// Poisson count by Knuth's product-of-uniforms method; exact for the
    /// small means used here (intensity * horizon).
    int next_poisson(double mean) {
        if (mean <= 0.0) return 0;
        double limit = std::exp(-mean);
        double prod = 1.0;
        int count = -1;
        do {
            prod *= next_double_open();
            ++count;
        } while (prod > limit);
        return count;
    }

  private:
    std::uint64_t state_ = 0;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

}  // namespace mf
