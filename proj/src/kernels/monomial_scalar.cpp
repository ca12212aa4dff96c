#include <algorithm>
#include <cstdint>
#include <cstdlib>

#include "mnrules/kernels/monomial_kernels.hpp"

namespace mnr::kernels {
namespace {

void add_batch(const Monomial& shift, const Monomial* in, Monomial* out, std::size_t count) {
    for (std::size_t i = 0; i < count; ++i) {
        for (std::size_t k = 0; k < kMaxVariables; ++k) {
            out[i].exps[k] = static_cast<std::int16_t>(shift.exps[k] + in[i].exps[k]);
        }
    }
}

void negate_prefix_batch(Monomial* data, std::size_t count, std::size_t prefix) {
    for (std::size_t i = 0; i < count; ++i) {
        for (std::size_t k = 0; k < prefix; ++k) {
            data[i].exps[k] = static_cast<std::int16_t>(-data[i].exps[k]);
        }
    }
}

void min_reduce(const Monomial* in, std::size_t count, Monomial& acc) {
    for (std::size_t i = 0; i < count; ++i) {
        for (std::size_t k = 0; k < kMaxVariables; ++k) {
            acc.exps[k] = std::min(acc.exps[k], in[i].exps[k]);
        }
    }
}

void abs_max_reduce(const Monomial* in, std::size_t count, Monomial& acc) {
    for (std::size_t i = 0; i < count; ++i) {
        for (std::size_t k = 0; k < kMaxVariables; ++k) {
            const auto a = static_cast<std::int16_t>(std::abs(in[i].exps[k]));
            acc.exps[k] = std::max(acc.exps[k], a);
        }
    }
}

constexpr MonomialKernels kScalar{"scalar", add_batch, negate_prefix_batch, min_reduce,
                                  abs_max_reduce};

} // namespace

const MonomialKernels& scalar_kernels() noexcept { return kScalar; }

} // namespace mnr::kernels
