#pragma once

#include <cstdint>

namespace qconc {

namespace detail {

// splitmix64 finalizer (Vigna). Bijective on 64-bit words.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
    z ^= z >> 30;
    z *= 0xbf58476d1ce4e5b9ULL;
    z ^= z >> 27;
    z *= 0x94d049bb133111ebULL;
    z ^= z >> 31;
    return z;
}

inline constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

} // namespace detail

/// One step of the splitmix64 stream seeded at `x`.
constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
    return detail::mix64(x + detail::kGolden);
}

/// Per-sample seed for batch harnesses: element `sample_id` of the splitmix
/// stream anchored at `base_seed`. Each sample's stream is independent of
/// evaluation order, so parallel batch runs reproduce sequential output.
constexpr std::uint64_t derive_seed(std::uint64_t base_seed, std::uint64_t sample_id) noexcept {
    return detail::mix64(base_seed + (sample_id + 1) * detail::kGolden);
}

} // namespace qconc
