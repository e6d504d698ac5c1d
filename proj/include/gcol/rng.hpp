#pragma once

#include <cstdint>
#include <limits>
#include <numeric>
#include <random>
#include <utility>
#include <vector>

namespace gcol {

/// Deterministic random stream shared by every module.
///
/// The engine is std::mt19937_64, whose output sequence is pinned bit-for-bit
/// by the C++ standard. The <random> *distributions* are not pinned, so all
/// derived draws (uniform ints, doubles, shuffles) are implemented here with
/// fixed arithmetic. Two builds on different platforms given the same seed
/// therefore produce identical runs. Callers treat the draw order as part of
/// their contract.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform in [0, 1), 53 random bits.
    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    bool bernoulli(double p) { return uniform01() < p; }

    /// Uniform integer in [lo, hi], both inclusive. Rejection sampling, so no
    /// modulo bias regardless of the range size.
    std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
        const std::uint64_t range = static_cast<std::uint64_t>(hi - lo) + 1;
        if (range == 0) return static_cast<std::int64_t>(next()); // full 64-bit span
        const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
        const std::uint64_t reject_from = max - (max % range + 1) % range;
        std::uint64_t x = next();
        while (x > reject_from) x = next();
        return lo + static_cast<std::int64_t>(x % range);
    }

    /// Fisher-Yates shuffle, back to front.
    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            const auto j = static_cast<std::size_t>(uniform_int(0, static_cast<std::int64_t>(i) - 1));
            std::swap(v[i - 1], v[j]);
        }
    }

    /// Uniform random permutation of {0, ..., n-1}.
    std::vector<int> permutation(int n) {
        std::vector<int> p(static_cast<std::size_t>(n));
        std::iota(p.begin(), p.end(), 0);
        shuffle(p);
        return p;
    }

  private:
    std::mt19937_64 engine_;
};

} // namespace gcol
