#pragma once

#include <cstdint>
#include <random>

namespace hybridnet {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Explicit random stream. Trial streams are derived from (master seed,
/// trial index) so results do not depend on thread scheduling.
class RandomStream {
public:
    explicit RandomStream(std::uint64_t seed) : eng_(splitmix64(seed)) {}

    static RandomStream for_trial(std::uint64_t master_seed, std::uint64_t trial) {
        return RandomStream(splitmix64(master_seed ^ splitmix64(trial + 1)));
    }

    double uniform() { return std::uniform_real_distribution<double>(0.0, 1.0)(eng_); }

    double uniform(double lo, double hi) {
        return std::uniform_real_distribution<double>(lo, hi)(eng_);
    }

    long poisson(double mean) {
        if (mean <= 0.0) return 0;
        return std::poisson_distribution<long>(mean)(eng_);
    }

    std::uint64_t next_u64() { return eng_(); }

    /// Uniform integer in [0, n).
    std::size_t index(std::size_t n) {
        return std::uniform_int_distribution<std::size_t>(0, n - 1)(eng_);
    }

    std::mt19937_64& engine() { return eng_; }

private:
    std::mt19937_64 eng_;
};

} // namespace hybridnet
