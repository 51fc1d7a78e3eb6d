#pragma once
#include <cstdint>
#include <random>

namespace vflock {

// splitmix64: used to derive independent per-run seeds from (master, index).
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
    return splitmix64(master ^ splitmix64(index + 1));
}

// mt19937_64 with a hand-rolled uniform mapping. std::uniform_real_distribution
// is not guaranteed to produce the same stream across standard libraries, and
// byte-identical outputs across reruns are a hard requirement.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    // uniform in [0, 1)
    double uniform() {
        return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) {
        return lo + (hi - lo) * uniform();
    }

private:
    std::mt19937_64 gen_;
};

} // namespace vflock
