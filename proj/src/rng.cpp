#include "robustcurve/rng.hpp"

#include <array>

namespace robustcurve {

Rng::Rng(std::uint64_t seed, std::uint64_t stream) {
    const std::array<std::uint32_t, 4> words = {
        static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
        static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
    std::seed_seq seq(words.begin(), words.end());
    engine_.seed(seq);
}

std::uint64_t Rng::uniform_below(std::uint64_t bound) {
    // Reject the low residue class so every value in [0, bound) is equally likely.
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
        const std::uint64_t r = next();
        if (r >= threshold) return r % bound;
    }
}

}  // namespace robustcurve
