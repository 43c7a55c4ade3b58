#pragma once

#include <cstdint>
#include <random>

namespace exem {

/// splitmix64 step; used to derive independent substream seeds from one
/// master seed (e.g. one stream per synthetic class).
inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Deterministic random source built on std::mt19937_64, whose output
// sequence is pinned by the C++ standard. The uniform/normal/shuffle
// transforms below are implemented explicitly instead of through
// std::*_distribution, which is implementation-defined.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next_u64() { return gen_(); }

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform01() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    /// Unbiased uniform integer in [0, n) by rejection sampling.
    std::uint64_t uniform_below(std::uint64_t n);

    /// Standard normal via the Marsaglia polar method.
    double normal();

    /// In-place Fisher-Yates shuffle.
    template <typename T>
    void shuffle(std::vector<T>& items) {
        for (std::size_t i = items.size(); i > 1; --i) {
            std::size_t j = static_cast<std::size_t>(uniform_below(i));
            std::swap(items[i - 1], items[j]);
        }
    }

private:
    std::mt19937_64 gen_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace exem
