// Compiled with -mavx2; only reached after a runtime CPU check.
#include <immintrin.h>

#include "mnrules/kernels/monomial_kernels.hpp"

namespace mnr::kernels {
namespace {

// One monomial is eight int16 lanes, so a 256-bit register holds two.

inline __m256i load2(const Monomial* p) {
    return _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p));
}
inline void store2(Monomial* p, __m256i v) {
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(p), v);
}
inline __m128i load1(const Monomial* p) {
    return _mm_load_si128(reinterpret_cast<const __m128i*>(p));
}
inline void store1(Monomial* p, __m128i v) {
    _mm_store_si128(reinterpret_cast<__m128i*>(p), v);
}

void add_batch(const Monomial& shift, const Monomial* in, Monomial* out, std::size_t count) {
    const __m128i s1 = load1(&shift);
    const __m256i s2 = _mm256_broadcastsi128_si256(s1);
    std::size_t i = 0;
    for (; i + 4 <= count; i += 4) {
        store2(out + i, _mm256_add_epi16(s2, load2(in + i)));
        store2(out + i + 2, _mm256_add_epi16(s2, load2(in + i + 2)));
    }
    for (; i + 2 <= count; i += 2) store2(out + i, _mm256_add_epi16(s2, load2(in + i)));
    if (i < count) store1(out + i, _mm_add_epi16(s1, load1(in + i)));
}

// Lane mask with -1 in the first `prefix` int16 lanes and +1 elsewhere.
inline __m128i sign_mask(std::size_t prefix) {
    alignas(16) std::int16_t lanes[kMaxVariables];
    for (std::size_t k = 0; k < kMaxVariables; ++k) lanes[k] = k < prefix ? -1 : 1;
    return _mm_load_si128(reinterpret_cast<const __m128i*>(lanes));
}

void negate_prefix_batch(Monomial* data, std::size_t count, std::size_t prefix) {
    const __m128i m1 = sign_mask(prefix);
    const __m256i m2 = _mm256_broadcastsi128_si256(m1);
    std::size_t i = 0;
    for (; i + 2 <= count; i += 2) store2(data + i, _mm256_sign_epi16(load2(data + i), m2));
    if (i < count) store1(data + i, _mm_sign_epi16(load1(data + i), m1));
}

void min_reduce(const Monomial* in, std::size_t count, Monomial& acc) {
    __m256i a = _mm256_broadcastsi128_si256(load1(&acc));
    std::size_t i = 0;
    for (; i + 2 <= count; i += 2) a = _mm256_min_epi16(a, load2(in + i));
    __m128i r = _mm_min_epi16(_mm256_castsi256_si128(a), _mm256_extracti128_si256(a, 1));
    if (i < count) r = _mm_min_epi16(r, load1(in + i));
    store1(&acc, r);
}

void abs_max_reduce(const Monomial* in, std::size_t count, Monomial& acc) {
    __m256i a = _mm256_broadcastsi128_si256(load1(&acc));
    std::size_t i = 0;
    for (; i + 2 <= count; i += 2) a = _mm256_max_epi16(a, _mm256_abs_epi16(load2(in + i)));
    __m128i r = _mm_max_epi16(_mm256_castsi256_si128(a), _mm256_extracti128_si256(a, 1));
    if (i < count) r = _mm_max_epi16(r, _mm_abs_epi16(load1(in + i)));
    store1(&acc, r);
}

constexpr MonomialKernels kAvx2{"avx2", add_batch, negate_prefix_batch, min_reduce,
                                abs_max_reduce};

} // namespace

const MonomialKernels* avx2_kernels() noexcept { return &kAvx2; }

} // namespace mnr::kernels
