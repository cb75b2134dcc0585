#include "slopebound/rng.hpp"

namespace slopebound {

std::uint64_t splitmix64(std::uint64_t x)
{
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

Rng::Rng(std::uint64_t seed, std::uint64_t index)
    : eng_(splitmix64(splitmix64(seed) ^ splitmix64(index + 0x5851f42d4c957f2dULL)))
{
}

std::int64_t Rng::uniform(std::int64_t lo, std::int64_t hi)
{
    if (hi <= lo)
        return lo;
    const std::uint64_t span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
    if (span == 0)
        return static_cast<std::int64_t>(eng_());
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % span);
    std::uint64_t x;
    do
        x = eng_();
    while (x >= limit);
    return lo + static_cast<std::int64_t>(x % span);
}

} // namespace slopebound
