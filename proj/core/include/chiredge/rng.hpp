#pragma once

#include <cstdint>

namespace chiredge {

// Per-trial random streams: stream_seed(master, trial) feeds a SplitMix64
// chain, so trial k's stream is the same whether trials run serially or on
// any number of threads. Gaussians come from an explicit Box-Muller on the
// raw 64-bit output; nothing implementation-defined is involved, which keeps
// sampled ensembles bitwise reproducible.
struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
};

std::uint64_t stream_seed(std::uint64_t master_seed, std::uint64_t trial);

class GaussStream {
public:
    explicit GaussStream(std::uint64_t seed) : rng_(seed) {}

    // uniform on (0, 1]
    double uniform_pos() {
        return (double(rng_.next() >> 11) + 1.0) * 0x1.0p-53;
    }

    // uniform on [0, 1)
    double uniform() { return double(rng_.next() >> 11) * 0x1.0p-53; }

    double normal();

private:
    SplitMix64 rng_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace chiredge
