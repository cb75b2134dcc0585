#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace slopebound {

inline constexpr const char* kRngName = "slopebound-mt64-v1";

std::uint64_t splitmix64(std::uint64_t x);

// Per-instance stream: mt19937_64 seeded from splitmix64(seed, index).
// Distributions are implemented here so streams do not depend on the
// standard library's distribution algorithms.
class Rng {
public:
    explicit Rng(std::uint64_t seed, std::uint64_t index = 0);

    std::uint64_t next() { return eng_(); }
    // Uniform on [lo, hi], inclusive. Rejection sampling.
    std::int64_t uniform(std::int64_t lo, std::int64_t hi);
    int uniform_int(int lo, int hi) { return static_cast<int>(uniform(lo, hi)); }
    bool coin(int num = 1, int den = 2) { return uniform(0, den - 1) < num; }

    template <class T>
    void shuffle(std::vector<T>& v)
    {
        for (size_t i = v.size(); i > 1; --i)
            std::swap(v[i - 1], v[static_cast<size_t>(uniform(0, static_cast<std::int64_t>(i) - 1))]);
    }

    template <class T>
    const T& pick(const std::vector<T>& v) { return v[static_cast<size_t>(uniform(0, static_cast<std::int64_t>(v.size()) - 1))]; }

private:
    std::mt19937_64 eng_;
};

} // namespace slopebound
