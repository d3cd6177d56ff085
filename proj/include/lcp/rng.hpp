#pragma once

#include <cstdint>
#include <random>
#include <span>

namespace lcp {

inline uint64_t splitmix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Deterministic RNG with cheap derived streams. Child streams are keyed by
/// id so per-instance work stays reproducible under any thread schedule.
class Rng {
public:
    explicit Rng(uint64_t seed) : seed_(seed), eng_(splitmix64(seed)) {}

    /// Independent stream derived from this generator's seed and `id`.
    Rng child(uint64_t id) const { return Rng(splitmix64(seed_ ^ (0x517cc1b727220a95ULL * (id + 1)))); }

    uint64_t next_u64() { return eng_(); }

    /// Uniform double in [0, 1). Mapped from the top 53 bits so the value
    /// stream does not depend on the standard library's distribution code.
    double uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Uniform integer in [lo, hi] inclusive.
    int uniform_int(int lo, int hi) {
        const uint64_t span = static_cast<uint64_t>(hi - lo) + 1;
        return lo + static_cast<int>(eng_() % span);
    }

    uint64_t seed() const { return seed_; }

    template <typename T>
    void shuffle(std::span<T> items) {
        for (size_t i = items.size(); i > 1; --i) {
            const size_t j = static_cast<size_t>(uniform_int(0, static_cast<int>(i) - 1));
            std::swap(items[i - 1], items[j]);
        }
    }

private:
    uint64_t seed_;
    std::mt19937_64 eng_;
};

}  // namespace lcp
