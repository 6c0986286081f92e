#include "chiredge/rng.hpp"

#include <cmath>

namespace chiredge {

std::uint64_t stream_seed(std::uint64_t master_seed, std::uint64_t trial) {
    // Outputs of a SplitMix64 chain are the finalizer applied to
    // master + k*phi, so trial k's seed (the (k+1)-th chain output) is
    // reachable in O(1) without stepping through earlier trials.
    SplitMix64 g(master_seed + trial * 0x9e3779b97f4a7c15ULL);
    return g.next();
}

double GaussStream::normal() {
    if (have_spare_) {
        have_spare_ = false;
        return spare_;
    }
    double u1 = uniform_pos();
    double u2 = uniform_pos();
    double r = std::sqrt(-2.0 * std::log(u1));
    spare_ = r * std::sin(2.0 * M_PI * u2);
    have_spare_ = true;
    return r * std::cos(2.0 * M_PI * u2);
}

}  // namespace chiredge
