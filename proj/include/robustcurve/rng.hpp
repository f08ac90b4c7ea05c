#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <utility>

namespace robustcurve {

/// Seedable, platform-independent random source.
///
/// Backed by std::mt19937_64 seeded through std::seed_seq, both of which have
/// fully specified output sequences. Bounded draws and shuffles are implemented
/// here rather than with <random> distributions, whose algorithms differ
/// between standard libraries.
///
/// Stream splitting: a dataset derives the seed of graph i as base_seed + i.
/// Within one seed, independent consumers use distinct `stream` ids
/// (kGeneratorStream for topology, kOrderStream for removal orders).
class Rng {
  public:
    static constexpr std::uint64_t kGeneratorStream = 0;
    static constexpr std::uint64_t kOrderStream = 1;

    explicit Rng(std::uint64_t seed, std::uint64_t stream = kGeneratorStream);

    std::uint64_t next() { return engine_(); }

    /// Uniform integer in [0, bound). bound must be positive.
    std::uint64_t uniform_below(std::uint64_t bound);

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    /// Fisher-Yates shuffle.
    template <class T>
    void shuffle(std::span<T> items) {
        for (std::size_t i = items.size(); i > 1; --i) {
            const auto j = static_cast<std::size_t>(uniform_below(i));
            using std::swap;
            swap(items[i - 1], items[j]);
        }
    }

  private:
    std::mt19937_64 engine_;
};

}  // namespace robustcurve
