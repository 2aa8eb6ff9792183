#ifndef MULTIEULER_RNG_HPP
#define MULTIEULER_RNG_HPP

#include <cstdint>
#include <vector>

namespace multieuler {

// splitmix64. Fixed here so seeded runs are reproducible across platforms;
// the exact constants are part of the CLI contract (see README).
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Uniform-enough draw in [0, n); plain modulo, n is tiny here.
    std::uint64_t below(std::uint64_t n) { return next() % n; }

    // Fisher-Yates, high index down.
    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::size_t j = static_cast<std::size_t>(below(i));
            std::swap(v[i - 1], v[j]);
        }
    }

private:
    std::uint64_t state_;
};

} // namespace multieuler

#endif // MULTIEULER_RNG_HPP
