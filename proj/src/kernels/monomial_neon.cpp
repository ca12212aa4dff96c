#include <arm_neon.h>

#include "mnrules/kernels/monomial_kernels.hpp"

namespace mnr::kernels {
namespace {

inline int16x8_t load1(const Monomial* p) { return vld1q_s16(p->exps.data()); }
inline void store1(Monomial* p, int16x8_t v) { vst1q_s16(p->exps.data(), v); }

void add_batch(const Monomial& shift, const Monomial* in, Monomial* out, std::size_t count) {
    const int16x8_t s = load1(&shift);
    for (std::size_t i = 0; i < count; ++i) store1(out + i, vaddq_s16(s, load1(in + i)));
}

void negate_prefix_batch(Monomial* data, std::size_t count, std::size_t prefix) {
    alignas(16) std::int16_t lanes[kMaxVariables];
    for (std::size_t k = 0; k < kMaxVariables; ++k) lanes[k] = k < prefix ? -1 : 1;
    const int16x8_t sign = vld1q_s16(lanes);
    for (std::size_t i = 0; i < count; ++i) store1(data + i, vmulq_s16(load1(data + i), sign));
}

void min_reduce(const Monomial* in, std::size_t count, Monomial& acc) {
    int16x8_t a = load1(&acc);
    for (std::size_t i = 0; i < count; ++i) a = vminq_s16(a, load1(in + i));
    store1(&acc, a);
}

void abs_max_reduce(const Monomial* in, std::size_t count, Monomial& acc) {
    int16x8_t a = load1(&acc);
    for (std::size_t i = 0; i < count; ++i) a = vmaxq_s16(a, vabsq_s16(load1(in + i)));
    store1(&acc, a);
}

constexpr MonomialKernels kNeon{"neon", add_batch, negate_prefix_batch, min_reduce,
                                abs_max_reduce};

} // namespace

const MonomialKernels* neon_kernels() noexcept { return &kNeon; }

} // namespace mnr::kernels
