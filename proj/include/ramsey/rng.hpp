#ifndef RAMSEY_RNG_HPP_
#define RAMSEY_RNG_HPP_

#include <cstdint>
#include <random>

namespace ramsey {

// SplitMix64 step; used only to turn (seed, stream) pairs into well-mixed
// engine seeds so that consecutive stream ids give uncorrelated streams.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

// Collapse (master, a, b) into a single 64-bit seed.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t a,
                                 std::uint64_t b = 0) {
    std::uint64_t s = master;
    std::uint64_t h = splitmix64(s);
    s ^= a + 0x9e3779b97f4a7c15ull;
    h ^= splitmix64(s);
    s ^= b + 0xd1b54a32d192ed03ull;
    h ^= splitmix64(s);
    return h;
}

// One independent random stream, fully determined by (master_seed, stream).
// All floating-point draws go through next_u64() so results are identical
// on any platform with IEEE doubles.
class RngStream {
public:
    RngStream(std::uint64_t master_seed, std::uint64_t stream)
        : engine_(derive_seed(master_seed, stream, 0x72616d736579ull)) {}

    std::uint64_t next_u64() { return engine_(); }

    // Uniform on [0, 1) with 53 random bits.
    double uniform01() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) {
        return lo + (hi - lo) * uniform01();
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace ramsey

#endif  // RAMSEY_RNG_HPP_
