#ifndef MNRULES_MONOMIAL_HPP
#define MNRULES_MONOMIAL_HPP

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <cstring>
#include <functional>

namespace mnr {

/// Upper bound on n + m, the number of x- and y-variables in one polynomial.
inline constexpr std::size_t kMaxVariables = 8;

/// Exponent vector of a Laurent monomial: x-variables first, then
/// y-variables. Packed into one 128-bit lane so the batch kernels can work on
/// whole monomials at a time. Unused trailing slots are always zero.
struct alignas(16) Monomial {
    std::array<std::int16_t, kMaxVariables> exps{};

    friend bool operator==(const Monomial&, const Monomial&) = default;
    friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

static_assert(sizeof(Monomial) == 16);

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const noexcept {
        std::uint64_t lo = 0;
        std::uint64_t hi = 0;
        std::memcpy(&lo, m.exps.data(), 8);
        std::memcpy(&hi, m.exps.data() + 4, 8);
        // splitmix-style finalizer over both words
        std::uint64_t h = lo * 0x9E3779B97F4A7C15ULL ^ (hi + 0x632BE59BD9B4E019ULL);
        h ^= h >> 31;
        h *= 0xBF58476D1CE4E5B9ULL;
        h ^= h >> 29;
        return static_cast<std::size_t>(h);
    }
};

} // namespace mnr

#endif
