#include "mnrules/oracle.hpp"

#include <algorithm>
#include <array>
#include <unordered_map>

#include "mnrules/strips.hpp"

namespace mnr {

std::string_view short_name(CharacterKind kind) noexcept {
    switch (kind) {
    case CharacterKind::schur: return "s";
    case CharacterKind::skew_schur: return "skew";
    case CharacterKind::symplectic: return "sp";
    case CharacterKind::odd_orthogonal: return "oo";
    case CharacterKind::even_orthogonal: return "oe";
    case CharacterKind::hook_schur: return "hs";
    case CharacterKind::orthosymplectic: return "spo";
    }
    return "?";
}

std::optional<CharacterKind> parse_character_kind(std::string_view text) {
    static constexpr std::array<std::pair<std::string_view, CharacterKind>, 14> names{{
        {"s", CharacterKind::schur},
        {"schur", CharacterKind::schur},
        {"skew", CharacterKind::skew_schur},
        {"skew_schur", CharacterKind::skew_schur},
        {"sp", CharacterKind::symplectic},
        {"symplectic", CharacterKind::symplectic},
        {"oo", CharacterKind::odd_orthogonal},
        {"odd_orthogonal", CharacterKind::odd_orthogonal},
        {"oe", CharacterKind::even_orthogonal},
        {"even_orthogonal", CharacterKind::even_orthogonal},
        {"hs", CharacterKind::hook_schur},
        {"hook_schur", CharacterKind::hook_schur},
        {"spo", CharacterKind::orthosymplectic},
        {"orthosymplectic", CharacterKind::orthosymplectic},
    }};
    for (const auto& [name, kind] : names) {
        if (name == text) return kind;
    }
    return std::nullopt;
}

// -- power sums -----------------------------------------------------------

LaurentPoly power_sum(int r, std::size_t n, std::size_t m) {
    if (r < 0) return LaurentPoly(n, m);
    if (r == 0) return LaurentPoly::constant(n, m, 1);
    LaurentPoly out(n, m);
    for (std::size_t i = 1; i <= n; ++i) out += LaurentPoly::x_power(n, m, i, r);
    return out;
}

LaurentPoly power_sum_bar(int r, std::size_t n, std::size_t m) {
    if (r < 0) return LaurentPoly(n, m);
    if (r == 0) return LaurentPoly::constant(n, m, 1);
    LaurentPoly out(n, m);
    for (std::size_t i = 1; i <= n; ++i) {
        out += LaurentPoly::x_power(n, m, i, r);
        out += LaurentPoly::x_power(n, m, i, -r);
    }
    return out;
}

namespace {

LaurentPoly y_power_sum(int r, std::size_t n, std::size_t m) {
    LaurentPoly out(n, m);
    for (std::size_t j = 1; j <= m; ++j) out += LaurentPoly::y_power(n, m, j, r);
    return out;
}

Rational sign_power(int e) { return (e % 2 == 0) ? Rational(1) : Rational(-1); }

} // namespace

LaurentPoly super_power_sum(int r, std::size_t n, std::size_t m) {
    if (r < 0) return LaurentPoly(n, m);
    if (r == 0) return LaurentPoly::constant(n, m, 1);
    return power_sum(r, n, m) + sign_power(r - 1) * y_power_sum(r, n, m);
}

LaurentPoly spo_power_sum(int r, std::size_t n, std::size_t m) {
    if (r < 0) return LaurentPoly(n, m);
    if (r == 0) return LaurentPoly::constant(n, m, 1);
    return power_sum_bar(r, n, m) + sign_power(r - 1) * y_power_sum(r, n, m);
}

// -- alternants -----------------------------------------------------------

namespace {

template <class Entry>
LaurentPoly alternant(std::size_t n, std::size_t m, Entry entry) {
    if (n == 0) return LaurentPoly::constant(0, m, 1);
    Matrix mat(n, std::vector<LaurentPoly>(n));
    for (std::size_t i = 1; i <= n; ++i) {
        for (std::size_t j = 1; j <= n; ++j) mat[i - 1][j - 1] = entry(i, j);
    }
    return determinant(mat);
}

} // namespace

LaurentPoly alternant_minus(const std::vector<int>& a, std::size_t m) {
    const std::size_t n = a.size();
    return alternant(n, m, [&](std::size_t i, std::size_t j) {
        return LaurentPoly::x_power_doubled(n, m, i, a[j - 1]) -
               LaurentPoly::x_power_doubled(n, m, i, -a[j - 1]);
    });
}

LaurentPoly alternant_plus(const std::vector<int>& a, std::size_t m) {
    const std::size_t n = a.size();
    return alternant(n, m, [&](std::size_t i, std::size_t j) {
        return LaurentPoly::x_power_doubled(n, m, i, a[j - 1]) +
               LaurentPoly::x_power_doubled(n, m, i, -a[j - 1]);
    });
}

LaurentPoly alternant_plain(const std::vector<int>& a, std::size_t m) {
    const std::size_t n = a.size();
    return alternant(n, m, [&](std::size_t i, std::size_t j) {
        return LaurentPoly::x_power(n, m, i, a[j - 1]);
    });
}

// -- tableau enumeration --------------------------------------------------

namespace {

using WeightCounts = std::unordered_map<Monomial, long, MonomialHash>;

// Depth-first filling of the skew shape in row-major order. Each symbol
// carries an exponent-vector weight; `rules` decides which symbols may sit
// in a row and whether a symbol must strictly exceed its left / upper
// neighbour.
template <class Rules>
class TableauEnumerator {
  public:
    TableauEnumerator(const SkewShape& shape, const std::vector<Monomial>& weights,
                      const Rules& rules)
        : shape_(shape), cells_(shape.cells()), weights_(weights), rules_(rules) {
        grid_.resize(shape.outer().length() + 1);
        for (std::size_t i = 1; i <= shape.outer().length(); ++i) {
            grid_[i].assign(static_cast<std::size_t>(shape.outer().part(i)) + 1, -1);
        }
    }

    WeightCounts run() {
        WeightCounts acc;
        Monomial current{};
        fill(0, current, acc);
        return acc;
    }

  private:
    void fill(std::size_t k, Monomial& current, WeightCounts& acc) {
        if (k == cells_.size()) {
            ++acc[current];
            return;
        }
        const auto [row, col] = cells_[k];
        const auto r = static_cast<std::size_t>(row);
        const auto c = static_cast<std::size_t>(col);
        const int left = col - 1 > shape_.inner().part(r) ? grid_[r][c - 1] : -1;
        const int up = (row > 1 && col > shape_.inner().part(r - 1)) ? grid_[r - 1][c] : -1;
        const int alphabet = static_cast<int>(weights_.size());
        for (int s = std::max({0, left, up}); s < alphabet; ++s) {
            if (!rules_.allowed(s, row)) continue;
            if (left >= 0 && (rules_.row_strict(s) ? left >= s : left > s)) continue;
            if (up >= 0 && (rules_.col_strict(s) ? up >= s : up > s)) continue;
            grid_[r][c] = s;
            for (std::size_t v = 0; v < kMaxVariables; ++v) current.exps[v] += weights_[s].exps[v];
            fill(k + 1, current, acc);
            for (std::size_t v = 0; v < kMaxVariables; ++v) current.exps[v] -= weights_[s].exps[v];
        }
        grid_[r][c] = -1;
    }

    const SkewShape& shape_;
    std::vector<SkewShape::Cell> cells_;
    const std::vector<Monomial>& weights_;
    const Rules& rules_;
    std::vector<std::vector<int>> grid_;
};

LaurentPoly from_counts(const WeightCounts& counts, std::size_t n, std::size_t m) {
    LaurentPoly out(n, m);
    for (const auto& [mono, count] : counts) out.add_term(mono, Rational(count));
    return out;
}

struct SemistandardRules {
    bool allowed(int, int) const { return true; }
    bool row_strict(int) const { return false; }
    bool col_strict(int) const { return true; }
};

// 1 < 1bar < 2 < 2bar < ...: symbol 2k is k+1, symbol 2k+1 is its bar.
// Row i (1-based) only admits symbols >= i, i.e. index >= 2i - 2. The
// stricter ">= ibar" reading would drop the unbarred 1 from row 1 and give
// sp_(1)(x1) = 1/x1.
struct KingRules {
    bool allowed(int s, int row) const { return s >= 2 * row - 2; }
    bool row_strict(int) const { return false; }
    bool col_strict(int) const { return true; }
};

// King alphabet followed by primed symbols 1' < ... < m'; primed entries
// are row-strict and column-weak.
struct SpoRules {
    int unprimed;
    bool allowed(int s, int row) const { return s >= unprimed || s >= 2 * row - 2; }
    bool row_strict(int s) const { return s >= unprimed; }
    bool col_strict(int s) const { return s < unprimed; }
};

std::vector<Monomial> plain_weights(std::size_t count, std::size_t slot_offset, int step) {
    std::vector<Monomial> w(count);
    for (std::size_t k = 0; k < count; ++k) {
        w[k].exps[slot_offset + k] = static_cast<std::int16_t>(step);
    }
    return w;
}

std::vector<Monomial> king_weights(std::size_t n) {
    std::vector<Monomial> w(2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        w[2 * i].exps[i] = 2;
        w[2 * i + 1].exps[i] = -2;
    }
    return w;
}

} // namespace

LaurentPoly schur_tableaux(const Partition& lambda, std::size_t n, std::size_t m) {
    if (lambda.length() > n) return LaurentPoly(n, m);
    const auto weights = plain_weights(n, 0, 2);
    SemistandardRules rules;
    SkewShape shape(lambda, Partition{});
    return from_counts(TableauEnumerator(shape, weights, rules).run(), n, m);
}

LaurentPoly schur_bialternant(const Partition& lambda, std::size_t n, std::size_t m) {
    if (lambda.length() > n) return LaurentPoly(n, m);
    std::vector<int> num(n);
    std::vector<int> den(n);
    for (std::size_t j = 1; j <= n; ++j) {
        num[j - 1] = lambda.part(j) + static_cast<int>(n - j);
        den[j - 1] = static_cast<int>(n - j);
    }
    return exact_divide(alternant_plain(num, m), alternant_plain(den, m));
}

LaurentPoly skew_schur(const SkewShape& shape, std::size_t n) {
    const auto weights = plain_weights(n, 0, 2);
    SemistandardRules rules;
    return from_counts(TableauEnumerator(shape, weights, rules).run(), n, 0);
}

LaurentPoly skew_schur_y(const SkewShape& shape, std::size_t n, std::size_t m) {
    const auto weights = plain_weights(m, n, 1);
    SemistandardRules rules;
    return from_counts(TableauEnumerator(shape, weights, rules).run(), n, m);
}

// -- symplectic and orthogonal --------------------------------------------

LaurentPoly symplectic_weyl(const Partition& lambda, std::size_t n, std::size_t m) {
    if (lambda.length() > n) return LaurentPoly(n, m);
    if (n == 0) return LaurentPoly::constant(0, m, 1);
    std::vector<int> num(n);
    std::vector<int> den(n);
    for (std::size_t j = 1; j <= n; ++j) {
        const int shift = 2 * static_cast<int>(n - j + 1);
        num[j - 1] = 2 * lambda.part(j) + shift;
        den[j - 1] = shift;
    }
    return exact_divide(alternant_minus(num, m), alternant_minus(den, m));
}

LaurentPoly symplectic_king(const Partition& lambda, std::size_t n, std::size_t m) {
    if (lambda.length() > n) return LaurentPoly(n, m);
    const auto weights = king_weights(n);
    KingRules rules;
    SkewShape shape(lambda, Partition{});
    return from_counts(TableauEnumerator(shape, weights, rules).run(), n, m);
}

LaurentPoly odd_orthogonal_char(const Partition& lambda, std::size_t n, std::size_t m) {
    if (lambda.length() > n) return LaurentPoly(n, m);
    if (n == 0) return LaurentPoly::constant(0, m, 1);
    std::vector<int> num(n);
    std::vector<int> den(n);
    for (std::size_t j = 1; j <= n; ++j) {
        const int shift = 2 * static_cast<int>(n - j) + 1;
        num[j - 1] = 2 * lambda.part(j) + shift;
        den[j - 1] = shift;
    }
    return exact_divide(alternant_minus(num, m), alternant_minus(den, m));
}

LaurentPoly even_orthogonal_char(const Partition& lambda, std::size_t n, std::size_t m) {
    if (lambda.length() > n) return LaurentPoly(n, m);
    if (n == 0) return LaurentPoly::constant(0, m, 1);
    std::vector<int> num(n);
    std::vector<int> den(n);
    for (std::size_t j = 1; j <= n; ++j) {
        const int shift = 2 * static_cast<int>(n - j);
        num[j - 1] = 2 * lambda.part(j) + shift;
        den[j - 1] = shift;
    }
    auto quotient = exact_divide(alternant_plus(num, m), alternant_plus(den, m));
    return quotient * ratio(2, lambda.part(n) == 0 ? 2 : 1);
}

// -- super families -------------------------------------------------------

namespace {

template <class XFactor>
LaurentPoly super_sum(const Partition& lambda, std::size_t n, std::size_t m, XFactor x_factor) {
    LaurentPoly out(n, m);
    const Partition lambda_conj = lambda.conjugate();
    for (const auto& mu : partitions_inside(lambda)) {
        if (mu.length() > n) continue;
        auto y_part = skew_schur_y(SkewShape(lambda_conj, mu.conjugate()), n, m);
        if (y_part.is_zero()) continue;
        out += x_factor(mu) * y_part;
    }
    return out;
}

} // namespace

LaurentPoly hook_schur(const Partition& lambda, std::size_t n, std::size_t m) {
    return super_sum(lambda, n, m,
                     [&](const Partition& mu) { return schur_tableaux(mu, n, m); });
}

LaurentPoly orthosymplectic_definition(const Partition& lambda, std::size_t n, std::size_t m) {
    return super_sum(lambda, n, m,
                     [&](const Partition& mu) { return symplectic_weyl(mu, n, m); });
}

LaurentPoly orthosymplectic_tableaux(const Partition& lambda, std::size_t n, std::size_t m) {
    auto weights = king_weights(n);
    for (std::size_t j = 0; j < m; ++j) {
        Monomial w{};
        w.exps[n + j] = 1;
        weights.push_back(w);
    }
    SpoRules rules{static_cast<int>(2 * n)};
    SkewShape shape(lambda, Partition{});
    return from_counts(TableauEnumerator(shape, weights, rules).run(), n, m);
}

std::vector<BranchTerm> branch_last_y(CharacterKind kind, const Partition& lambda,
                                      std::size_t n, std::size_t m) {
    if (kind != CharacterKind::hook_schur && kind != CharacterKind::orthosymplectic) {
        throw std::invalid_argument("branch_last_y: only hs and spo branch in y");
    }
    if (m < 1) throw std::invalid_argument("branch_last_y: needs m >= 1");
    std::vector<BranchTerm> used;
    LaurentPoly rhs(n, m);
    for (const auto& pi : vertical_strip_removals(lambda)) {
        const int k = lambda.size() - pi.size();
        used.push_back({pi, k});
        auto smaller = embed(character(kind, pi, n, m - 1), n, m);
        rhs += smaller * LaurentPoly::y_power(n, m, m, k);
    }
    if (rhs != character(kind, lambda, n, m)) {
        throw identity_violation("branching in y_m fails for " + std::string(short_name(kind)) +
                                 lambda.to_string());
    }
    return used;
}

// -- dispatch and caching -------------------------------------------------

LaurentPoly character(CharacterKind kind, const Partition& lambda, std::size_t n,
                      std::size_t m) {
    switch (kind) {
    case CharacterKind::schur: return schur_tableaux(lambda, n, m);
    case CharacterKind::symplectic: return symplectic_weyl(lambda, n, m);
    case CharacterKind::odd_orthogonal: return odd_orthogonal_char(lambda, n, m);
    case CharacterKind::even_orthogonal: return even_orthogonal_char(lambda, n, m);
    case CharacterKind::hook_schur: return hook_schur(lambda, n, m);
    case CharacterKind::orthosymplectic: return orthosymplectic_definition(lambda, n, m);
    case CharacterKind::skew_schur: break;
    }
    throw std::invalid_argument("character: skew_schur needs a skew shape");
}

std::shared_ptr<const LaurentPoly> CharacterCache::lookup_or_compute(
    const Key& key, const std::function<LaurentPoly()>& compute) {
    {
        std::lock_guard lock(mutex_);
        if (auto it = entries_.find(key); it != entries_.end()) return it->second;
    }
    // computed outside the lock; a racing duplicate is discarded
    auto value = std::make_shared<const LaurentPoly>(compute());
    std::lock_guard lock(mutex_);
    auto [it, inserted] = entries_.emplace(key, std::move(value));
    return it->second;
}

std::shared_ptr<const LaurentPoly> CharacterCache::get(CharacterKind kind,
                                                       const Partition& lambda, std::size_t n,
                                                       std::size_t m) {
    return lookup_or_compute({static_cast<int>(kind), lambda, Partition{}, n, m},
                             [&] { return character(kind, lambda, n, m); });
}

std::shared_ptr<const LaurentPoly> CharacterCache::skew_y(const SkewShape& shape, std::size_t n,
                                                          std::size_t m) {
    return lookup_or_compute(
        {static_cast<int>(CharacterKind::skew_schur), shape.outer(), shape.inner(), n, m},
        [&] { return skew_schur_y(shape, n, m); });
}

std::size_t CharacterCache::size() const {
    std::lock_guard lock(mutex_);
    return entries_.size();
}

} // namespace mnr
