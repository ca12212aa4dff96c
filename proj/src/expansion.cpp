#include "mnrules/expansion.hpp"

#include <algorithm>
#include <tuple>

namespace mnr {

void FormalExpansion::add(CharacterKind basis, const Partition& partition,
                          const Rational& coeff) {
    if (sgn(coeff) == 0) return;
    auto [it, inserted] = terms_.try_emplace(BasisLabel{basis, partition}, coeff);
    if (!inserted) {
        it->second += coeff;
        if (sgn(it->second) == 0) terms_.erase(it);
    }
}

Rational FormalExpansion::coefficient(CharacterKind basis, const Partition& partition) const {
    auto it = terms_.find(BasisLabel{basis, partition});
    return it == terms_.end() ? Rational(0) : it->second;
}

FormalExpansion& FormalExpansion::operator+=(const FormalExpansion& o) {
    for (const auto& [label, c] : o.terms_) add(label, c);
    return *this;
}

FormalExpansion& FormalExpansion::operator*=(const Rational& c) {
    if (sgn(c) == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [label, v] : terms_) v *= c;
    return *this;
}

void MixedExpansion::add_mixed(const MixedTerm& term) {
    if (sgn(term.coeff) == 0) return;
    const auto same = [&](const MixedTerm& t) {
        return t.sp_part == term.sp_part && t.skew_outer == term.skew_outer &&
               t.skew_inner == term.skew_inner;
    };
    auto it = std::find_if(mixed_terms.begin(), mixed_terms.end(), same);
    if (it == mixed_terms.end()) {
        mixed_terms.push_back(term);
    } else {
        it->coeff += term.coeff;
        if (sgn(it->coeff) == 0) mixed_terms.erase(it);
    }
    // canonical order: by the removed inner shape, then the sp label
    std::sort(mixed_terms.begin(), mixed_terms.end(), [](const MixedTerm& a, const MixedTerm& b) {
        return std::tie(a.skew_outer, a.skew_inner, a.sp_part) >
               std::tie(b.skew_outer, b.skew_inner, b.sp_part);
    });
}

LaurentPoly evaluate(const FormalExpansion& e, std::size_t n, std::size_t m,
                     CharacterCache& cache) {
    LaurentPoly out(n, m);
    for (const auto& [label, c] : e.terms()) {
        out += *cache.get(label.basis, label.partition, n, m) * c;
    }
    return out;
}

LaurentPoly evaluate(const MixedExpansion& e, std::size_t n, std::size_t m,
                     CharacterCache& cache) {
    LaurentPoly out = evaluate(e.spo_terms, n, m, cache);
    for (const auto& t : e.mixed_terms) {
        const auto& y_part = *cache.skew_y(t.y_shape(), n, m);
        if (y_part.is_zero()) continue;
        out += (*cache.get(CharacterKind::symplectic, t.sp_part, n, m) * y_part) * t.coeff;
    }
    return out;
}

} // namespace mnr
