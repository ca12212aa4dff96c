#include "mnrules/rules.hpp"

#include <algorithm>
#include <stdexcept>

#include "mnrules/strips.hpp"

namespace mnr {

namespace {

Rational strip_sign(int height) { return Rational(height % 2 == 0 ? 1 : -1); }

void require_positive(int r) {
    if (r < 1) throw std::invalid_argument("r must be at least 1");
}

// hs_eta and spo_eta vanish in the ring (n, m) exactly when eta_{n+1} > m
bool super_vanishes(const Partition& eta, std::size_t n, std::size_t m) {
    return static_cast<std::size_t>(eta.part(n + 1)) > m;
}

// rows of lambda/mu become the columns of lambda'/mu'
bool skew_y_vanishes(const Partition& lambda, const Partition& mu, std::size_t m) {
    for (std::size_t i = 1; i <= lambda.length(); ++i) {
        if (static_cast<std::size_t>(lambda.part(i) - mu.part(i)) > m) return true;
    }
    return false;
}

// (1 + [part_n = 0]) for the even orthogonal normalisation
int oe_weight(const Partition& p, std::size_t n) { return p.part(n) == 0 ? 2 : 1; }

} // namespace

FormalExpansion classical_mn(const Partition& mu, int r, std::size_t n) {
    require_positive(r);
    FormalExpansion out;
    for (const auto& step : border_strip_additions(mu, r, n)) {
        out.add(CharacterKind::schur, step.shape, strip_sign(step.height));
    }
    return out;
}

FormalExpansion pieri_h(const Partition& mu, int r, std::size_t n) {
    FormalExpansion out;
    for (const auto& g : horizontal_strip_additions(mu, r, n)) out.add(CharacterKind::schur, g, 1);
    return out;
}

FormalExpansion pieri_e(const Partition& mu, int r, std::size_t n) {
    FormalExpansion out;
    for (const auto& g : vertical_strip_additions(mu, r, n)) out.add(CharacterKind::schur, g, 1);
    return out;
}

FormalExpansion p_perp(const Partition& lambda, int r) {
    require_positive(r);
    FormalExpansion out;
    for (const auto& step : border_strip_removals(lambda, r)) {
        out.add(CharacterKind::schur, step.shape, strip_sign(step.height));
    }
    return out;
}

FormalExpansion e_perp(const Partition& lambda, int s) {
    FormalExpansion out;
    for (const auto& nu : vertical_strip_removals(lambda, s)) out.add(CharacterKind::schur, nu, 1);
    return out;
}

FormalExpansion hook_mn(const Partition& lambda, int r, std::size_t n, std::size_t m,
                        bool keep_vanishing) {
    require_positive(r);
    FormalExpansion out;
    for (const auto& step : border_strip_additions(lambda, r)) {
        if (!keep_vanishing && super_vanishes(step.shape, n, m)) continue;
        out.add(CharacterKind::hook_schur, step.shape, strip_sign(step.height));
    }
    return out;
}

CharacterKind basis_of(StaircaseKind kind) noexcept {
    switch (kind) {
    case StaircaseKind::symplectic: return CharacterKind::symplectic;
    case StaircaseKind::odd_orthogonal: return CharacterKind::odd_orthogonal;
    case StaircaseKind::even_orthogonal: return CharacterKind::even_orthogonal;
    }
    return CharacterKind::symplectic;
}

RuleSums weyl_rule_sums(StaircaseKind kind, const Partition& mu, int r, std::size_t n) {
    require_positive(r);
    if (mu.length() > n) throw std::invalid_argument("partition has more than n rows");
    const StaircaseDelta delta(kind, n);
    const CharacterKind basis = basis_of(kind);
    const bool even = kind == StaircaseKind::even_orthogonal;
    const int mu_w = oe_weight(mu, n);
    auto scale = [&](const Partition& p) {
        return even ? ratio(oe_weight(p, n), mu_w) : Rational(1);
    };

    RuleSums sums;
    for (const auto& step : border_strip_additions(mu, r, n)) {
        sums.additions.add(basis, step.shape, strip_sign(step.height) * scale(step.shape));
    }
    for (const auto& step : border_strip_removals(mu, r)) {
        sums.removals.add(basis, step.shape, strip_sign(step.height) * scale(step.shape));
    }
    for (std::size_t q = m_index(mu, delta, r) + 1; q <= n; ++q) {
        const auto term = mu_q(mu, delta, r, q);
        if (!term) continue;
        // even orthogonal carries (-1)^(p-q); the other two (-1)^(p-q+1)
        const long e = static_cast<long>(term->position) - static_cast<long>(q) + (even ? 0 : 1);
        const Rational sign(e % 2 == 0 ? 1 : -1);
        sums.reflected.add(basis, term->shape, sign * scale(term->shape));
    }
    return sums;
}

MixedExpansion orthosymplectic_mn(const Partition& lambda, int r, std::size_t n,
                                  std::size_t m, bool keep_vanishing) {
    require_positive(r);
    MixedExpansion out;
    for (const auto& step : border_strip_additions(lambda, r)) {
        if (!keep_vanishing && super_vanishes(step.shape, n, m)) continue;
        out.spo_terms.add(CharacterKind::orthosymplectic, step.shape, strip_sign(step.height));
    }
    for (const auto& step : border_strip_removals(lambda, r)) {
        if (!keep_vanishing && super_vanishes(step.shape, n, m)) continue;
        out.spo_terms.add(CharacterKind::orthosymplectic, step.shape, strip_sign(step.height));
    }

    const StaircaseDelta delta(StaircaseKind::symplectic, n);
    for (const auto& mu : partitions_inside(lambda)) {
        if (mu.length() > n || mu.part(n) >= r - 1) continue;
        if (skew_y_vanishes(lambda, mu, m)) continue;
        for (std::size_t q = m_index(mu, delta, r) + 1; q <= n; ++q) {
            const auto term = mu_q(mu, delta, r, q);
            if (!term) continue;
            const long e = static_cast<long>(term->position) - static_cast<long>(q) + 1;
            out.add_mixed({term->shape, lambda, mu, Rational(e % 2 == 0 ? 1 : -1)});
        }
    }
    return out;
}

SidePair interchange_sides(const Partition& lambda, int r, int s, std::size_t n,
                           std::size_t m, CharacterCache& cache) {
    require_positive(r);
    if (m < 1) throw std::invalid_argument("interchange needs m >= 1");
    FormalExpansion lhs, rhs;
    for (const auto& nu : vertical_strip_removals(lambda, s)) {
        for (const auto& step : border_strip_removals(nu, r)) {
            lhs.add(CharacterKind::orthosymplectic, step.shape, strip_sign(step.height));
        }
    }
    for (const auto& step : border_strip_removals(lambda, r)) {
        for (const auto& omega : vertical_strip_removals(step.shape, s)) {
            rhs.add(CharacterKind::orthosymplectic, omega, strip_sign(step.height));
        }
    }
    return {evaluate(lhs, n, m - 1, cache), evaluate(rhs, n, m - 1, cache)};
}

SidePair add_lemma_sides(const Partition& lambda, int r, std::size_t n, std::size_t m,
                         CharacterCache& cache) {
    require_positive(r);
    if (m < 1) throw std::invalid_argument("addition lemma needs m >= 1");
    auto lower = [&](const Partition& p) {
        return embed(*cache.get(CharacterKind::orthosymplectic, p, n, m - 1), n, m);
    };
    LaurentPoly lhs(n, m);
    const Rational tail_sign(r % 2 == 1 ? 1 : -1);
    for (const auto& nu : vertical_strip_removals(lambda)) {
        const int k = static_cast<int>(lambda.size() - nu.size());
        LaurentPoly inner(n, m);
        for (const auto& step : border_strip_additions(nu, r)) {
            inner += lower(step.shape) * strip_sign(step.height);
        }
        inner += lower(nu) * tail_sign * LaurentPoly::y_power(n, m, m, r);
        lhs += inner * LaurentPoly::y_power(n, m, m, k);
    }
    LaurentPoly rhs(n, m);
    for (const auto& step : border_strip_additions(lambda, r)) {
        rhs += *cache.get(CharacterKind::orthosymplectic, step.shape, n, m) *
               strip_sign(step.height);
    }
    return {std::move(lhs), std::move(rhs)};
}

} // namespace mnr
