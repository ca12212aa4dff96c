#ifndef MNRULES_KERNELS_MONOMIAL_KERNELS_HPP
#define MNRULES_KERNELS_MONOMIAL_KERNELS_HPP

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "mnrules/monomial.hpp"

// Batch exponent-vector kernels behind polynomial multiplication, division
// and the bar substitution. Every variant must agree bit-for-bit with the
// scalar reference; the AVX2 and NEON builds are picked at runtime.

namespace mnr::kernels {

struct MonomialKernels {
    std::string_view name;

    /// out[i] = shift + in[i] (elementwise, wrapping int16 arithmetic).
    void (*add_batch)(const Monomial& shift, const Monomial* in, Monomial* out,
                      std::size_t count);

    /// Negates the first `prefix` exponents of every monomial in place.
    void (*negate_prefix_batch)(Monomial* data, std::size_t count, std::size_t prefix);

    /// acc = elementwise min(acc, in[0], ..., in[count-1]).
    void (*min_reduce)(const Monomial* in, std::size_t count, Monomial& acc);

    /// acc = elementwise max(acc, |in[0]|, ..., |in[count-1]|).
    void (*abs_max_reduce)(const Monomial* in, std::size_t count, Monomial& acc);
};

const MonomialKernels& scalar_kernels() noexcept;
/// Null when the build has no AVX2 variant.
const MonomialKernels* avx2_kernels() noexcept;
/// Null when the build has no NEON variant.
const MonomialKernels* neon_kernels() noexcept;

/// Variants that are both compiled in and supported by the running CPU.
std::vector<const MonomialKernels*> available_kernels();

/// The variant used by the polynomial code. Chosen once: the best supported
/// variant, unless MNRULES_KERNEL=scalar|avx2|neon asks for another one.
const MonomialKernels& active_kernels();

} // namespace mnr::kernels

#endif
