#pragma once

#include <cstdint>

namespace kulsurf {

/// SplitMix64 (Steele, Lea, Flood 2014). Chosen because the whole sequence is
/// pinned down by the seed alone, with no library- or platform-dependent state,
/// which the reproducibility contract of the certificates relies on.
class Rng {
   public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, n) by rejection; n must be nonzero.
    std::uint64_t below(std::uint64_t n) {
        const std::uint64_t limit = n * (UINT64_MAX / n);
        std::uint64_t v;
        do {
            v = next();
        } while (v >= limit);
        return v % n;
    }

    /// Uniform integer in [lo, hi], inclusive. Returns `long` so the result
    /// feeds GMP integer constructors without an ambiguous overload.
    long range(long lo, long hi) {
        return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

   private:
    std::uint64_t state_;
};

/// Stream for sample `index` of run `seed`: mixes the two through SplitMix64 so
/// per-sample streams are independent of each other and of draw counts elsewhere.
inline Rng sample_rng(std::uint64_t seed, std::uint64_t index) {
    Rng mix(seed);
    std::uint64_t a = mix.next();
    Rng mix2(a ^ (0x632BE59BD9B4E019ULL + index));
    return Rng(mix2.next());
}

}  // namespace kulsurf
