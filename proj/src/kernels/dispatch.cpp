#include <cstdlib>
#include <string_view>

#include "mnrules/kernels/monomial_kernels.hpp"

namespace mnr::kernels {

#if !defined(MNRULES_HAVE_AVX2)
const MonomialKernels* avx2_kernels() noexcept { return nullptr; }
#endif
#if !defined(MNRULES_HAVE_NEON)
const MonomialKernels* neon_kernels() noexcept { return nullptr; }
#endif

namespace {

bool cpu_has_avx2() noexcept {
#if defined(MNRULES_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
    __builtin_cpu_init();
    return __builtin_cpu_supports("avx2");
#else
    return false;
#endif
}

const MonomialKernels& select() {
    const auto variants = available_kernels();
    if (const char* forced = std::getenv("MNRULES_KERNEL")) {
        for (const auto* k : variants) {
            if (k->name == std::string_view(forced)) return *k;
        }
    }
    return *variants.back();
}

} // namespace

std::vector<const MonomialKernels*> available_kernels() {
    std::vector<const MonomialKernels*> out{&scalar_kernels()};
    if (const auto* k = neon_kernels()) out.push_back(k); // NEON is baseline on aarch64
    if (const auto* k = avx2_kernels(); k && cpu_has_avx2()) out.push_back(k);
    return out;
}

const MonomialKernels& active_kernels() {
    static const MonomialKernels& chosen = select();
    return chosen;
}

} // namespace mnr::kernels
