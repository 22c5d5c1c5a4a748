#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace zc {

// All randomness in the library flows through this wrapper. The engine
// (mt19937_64) and every derived quantity below are fully specified, so a
// given seed produces identical artifacts on every platform; none of the
// distribution classes from <random> (whose output is implementation
// defined) are used.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : eng_(seed), base_(seed) {}

    std::uint64_t next() { return eng_(); }

    // Unbiased integer in [0, bound) by rejection sampling.
    std::uint64_t below(std::uint64_t bound) {
        if (bound == 0) return 0;
        const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
        std::uint64_t v;
        do {
            v = eng_();
        } while (v >= limit);
        return v % bound;
    }

    // Uniform double in [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

    // Exact Bernoulli(num/den) draw.
    bool bernoulli(std::uint64_t num, std::uint64_t den) { return below(den) < num; }

    // Fisher-Yates; deterministic for a given engine state.
    template <class T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::size_t j = static_cast<std::size_t>(below(i));
            std::swap(v[i - 1], v[j]);
        }
    }

    // Child stream for a subtask (block index, trial index, ...). The salt is
    // mixed through splitmix64 so neighbouring indices give unrelated streams.
    Rng derive(std::uint64_t salt) const {
        return Rng(seed_mix(seed_mix(base_) ^ seed_mix(salt + 0x9e3779b97f4a7c15ull)));
    }

  private:
    static std::uint64_t seed_mix(std::uint64_t x) {
        x += 0x9e3779b97f4a7c15ull;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
        return x ^ (x >> 31);
    }

    std::mt19937_64 eng_;
    std::uint64_t base_;
};

}  // namespace zc
