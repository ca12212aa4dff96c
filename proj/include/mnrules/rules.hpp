#ifndef MNRULES_RULES_HPP
#define MNRULES_RULES_HPP

#include <cstddef>
#include <utility>

#include "mnrules/expansion.hpp"
#include "mnrules/staircase.hpp"

// Right-hand sides of the Murnaghan-Nakayama type rules as formal
// expansions. Nothing here evaluates characters except the two lemma helpers
// at the bottom, which take a cache.

namespace mnr {

// -- Schur side -----------------------------------------------------------

/// p_r s_mu over border strips added within n rows, sign (-1)^height.
FormalExpansion classical_mn(const Partition& mu, int r, std::size_t n);
/// h_r s_mu and e_r s_mu, restricted to n rows.
FormalExpansion pieri_h(const Partition& mu, int r, std::size_t n);
FormalExpansion pieri_e(const Partition& mu, int r, std::size_t n);
/// p_r^perp s_lambda and e_s^perp s_lambda.
FormalExpansion p_perp(const Partition& lambda, int r);
FormalExpansion e_perp(const Partition& lambda, int s);

/// P_r(X/Y) hs_lambda. Additions are not row-bounded; labels with
/// eta_{n+1} > m vanish in the ring (n, m) and are dropped unless
/// keep_vanishing is set.
FormalExpansion hook_mn(const Partition& lambda, int r, std::size_t n, std::size_t m,
                        bool keep_vanishing = false);

// -- symplectic and orthogonal --------------------------------------------

/// The three sums of a Weyl-type rule before like terms are merged.
struct RuleSums {
    FormalExpansion additions;
    FormalExpansion removals;
    FormalExpansion reflected;

    [[nodiscard]] FormalExpansion merged() const {
        return additions + removals + reflected;
    }
};

/// Requires l(mu) <= n and r >= 1.
RuleSums weyl_rule_sums(StaircaseKind kind, const Partition& mu, int r, std::size_t n);

inline FormalExpansion symplectic_mn(const Partition& mu, int r, std::size_t n) {
    return weyl_rule_sums(StaircaseKind::symplectic, mu, r, n).merged();
}
inline FormalExpansion odd_orthogonal_mn(const Partition& mu, int r, std::size_t n) {
    return weyl_rule_sums(StaircaseKind::odd_orthogonal, mu, r, n).merged();
}
inline FormalExpansion even_orthogonal_mn(const Partition& mu, int r, std::size_t n) {
    return weyl_rule_sums(StaircaseKind::even_orthogonal, mu, r, n).merged();
}

/// The basis a Weyl-type rule expands in.
CharacterKind basis_of(StaircaseKind kind) noexcept;

// -- orthosymplectic ------------------------------------------------------

/// P_r(X, 1/X / Y) spo_lambda. The mixed part runs over mu inside lambda
/// (lambda included) with l(mu) <= n and padded mu_n < r - 1, using the
/// symplectic staircase. A mu whose skew factor s_{lambda'/mu'}(Y) is
/// identically zero in m variables (some row of lambda/mu longer than m)
/// contributes nothing and is skipped.
MixedExpansion orthosymplectic_mn(const Partition& lambda, int r, std::size_t n,
                                  std::size_t m, bool keep_vanishing = false);

// -- lemma helpers --------------------------------------------------------

struct SidePair {
    LaurentPoly lhs;
    LaurentPoly rhs;
};

/// Both orders of "remove a vertical s-strip, remove a border r-strip"
/// applied to spo_lambda, evaluated in the ring (n, m - 1).
SidePair interchange_sides(const Partition& lambda, int r, int s, std::size_t n,
                           std::size_t m, CharacterCache& cache);
/// The strip-addition identity that splits off the last y-variable,
/// evaluated in the ring (n, m).
SidePair add_lemma_sides(const Partition& lambda, int r, std::size_t n, std::size_t m,
                         CharacterCache& cache);

} // namespace mnr

#endif
