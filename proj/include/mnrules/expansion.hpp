#ifndef MNRULES_EXPANSION_HPP
#define MNRULES_EXPANSION_HPP

#include <compare>
#include <cstddef>
#include <map>
#include <vector>

#include "mnrules/laurent_poly.hpp"
#include "mnrules/oracle.hpp"
#include "mnrules/partition.hpp"
#include "mnrules/rational.hpp"

namespace mnr {

struct BasisLabel {
    CharacterKind basis = CharacterKind::schur;
    Partition partition;

    friend bool operator==(const BasisLabel&, const BasisLabel&) = default;
    // basis first, then partitions in descending lexicographic order
    friend std::strong_ordering operator<=>(const BasisLabel& a, const BasisLabel& b) {
        if (a.basis != b.basis) return a.basis <=> b.basis;
        return b.partition <=> a.partition;
    }
};

/// Finite Q-linear combination of basis-labelled characters. Like terms are
/// merged on insertion and zero coefficients are never stored.
class FormalExpansion {
  public:
    using Terms = std::map<BasisLabel, Rational>;

    void add(CharacterKind basis, const Partition& partition, const Rational& coeff);
    void add(const BasisLabel& label, const Rational& coeff) {
        add(label.basis, label.partition, coeff);
    }

    [[nodiscard]] const Terms& terms() const noexcept { return terms_; }
    [[nodiscard]] bool empty() const noexcept { return terms_.empty(); }
    [[nodiscard]] std::size_t size() const noexcept { return terms_.size(); }
    [[nodiscard]] Rational coefficient(CharacterKind basis, const Partition& partition) const;

    FormalExpansion& operator+=(const FormalExpansion& o);
    FormalExpansion& operator*=(const Rational& c);
    friend FormalExpansion operator+(FormalExpansion a, const FormalExpansion& b) {
        return a += b;
    }
    friend bool operator==(const FormalExpansion&, const FormalExpansion&) = default;

  private:
    Terms terms_;
};

/// coeff * sp_{sp_part}(X) * s_{skew_outer' / skew_inner'}(Y).
struct MixedTerm {
    Partition sp_part;
    Partition skew_outer;
    Partition skew_inner;
    Rational coeff;

    /// The skew shape of the Y-factor, already conjugated.
    [[nodiscard]] SkewShape y_shape() const {
        return {skew_outer.conjugate(), skew_inner.conjugate()};
    }
    friend bool operator==(const MixedTerm&, const MixedTerm&) = default;
};

struct MixedExpansion {
    FormalExpansion spo_terms;
    std::vector<MixedTerm> mixed_terms;

    /// Adds a mixed term, merging it with an existing one of the same
    /// (sp_part, skew_outer, skew_inner) and dropping it if it cancels.
    void add_mixed(const MixedTerm& term);
    friend bool operator==(const MixedExpansion&, const MixedExpansion&) = default;
};

/// Sum of coeff * character over the expansion, in the ring (n, m).
LaurentPoly evaluate(const FormalExpansion& e, std::size_t n, std::size_t m,
                     CharacterCache& cache);
LaurentPoly evaluate(const MixedExpansion& e, std::size_t n, std::size_t m,
                     CharacterCache& cache);

} // namespace mnr

#endif
