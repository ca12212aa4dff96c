#include "mnrules/staircase.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <string>

namespace mnr {

std::string_view to_string(StaircaseKind kind) noexcept {
    switch (kind) {
    case StaircaseKind::symplectic: return "symplectic";
    case StaircaseKind::odd_orthogonal: return "odd_orthogonal";
    case StaircaseKind::even_orthogonal: return "even_orthogonal";
    }
    return "?";
}

StaircaseDelta::StaircaseDelta(StaircaseKind kind, std::size_t n) : kind_(kind), n_(n) {
    if (n == 0) throw shape_error("staircase needs at least one variable");
}

int StaircaseDelta::doubled(std::size_t i) const noexcept {
    const int top = static_cast<int>(n_ - i); // n - i
    switch (kind_) {
    case StaircaseKind::symplectic: return 2 * top + 2;
    case StaircaseKind::odd_orthogonal: return 2 * top + 1;
    case StaircaseKind::even_orthogonal: return 2 * top;
    }
    return 0;
}

std::vector<int> StaircaseDelta::doubled() const {
    std::vector<int> out(n_);
    for (std::size_t i = 1; i <= n_; ++i) out[i - 1] = doubled(i);
    return out;
}

std::vector<int> StaircaseDelta::shifted(const Partition& mu) const {
    std::vector<int> out(n_);
    for (std::size_t i = 1; i <= n_; ++i) out[i - 1] = 2 * mu.part(i) + doubled(i);
    return out;
}

std::size_t m_index(const Partition& mu, const StaircaseDelta& delta, int r) {
    if (mu.length() > delta.n()) throw std::invalid_argument("m_index: length(mu) > n");
    const auto shifted = delta.shifted(mu);
    for (std::size_t i = delta.n(); i >= 1; --i) {
        if (shifted[i - 1] >= 2 * r) return i;
    }
    return 0;
}

namespace {

void check_reflection_args(const Partition& mu, const StaircaseDelta& delta, int r,
                           std::size_t q) {
    if (mu.length() > delta.n()) throw std::invalid_argument("mu_q: length(mu) > n");
    if (q < 1 || q > delta.n()) throw std::invalid_argument("mu_q: q out of range");
    if (2 * mu.part(q) + delta.doubled(q) >= 2 * r) {
        throw std::invalid_argument("mu_q: requires mu_q + delta_q < r (q = " +
                                    std::to_string(q) + ")");
    }
}

} // namespace

std::optional<ReflectedTerm> mu_q(const Partition& mu, const StaircaseDelta& delta, int r,
                                  std::size_t q) {
    check_reflection_args(mu, delta, r, q);
    auto entries = delta.shifted(mu);
    const int reflected = 2 * r - entries[q - 1];
    entries[q - 1] = reflected;

    std::sort(entries.begin(), entries.end(), std::greater<>{});
    if (std::adjacent_find(entries.begin(), entries.end()) != entries.end()) {
        return std::nullopt;
    }
    const auto pos = static_cast<std::size_t>(
        std::find(entries.begin(), entries.end(), reflected) - entries.begin()) + 1;

    std::vector<int> parts(delta.n());
    for (std::size_t i = 1; i <= delta.n(); ++i) {
        // entries are strictly decreasing and bounded below by 2*delta_n, so
        // the difference is even and nonnegative
        parts[i - 1] = (entries[i - 1] - delta.doubled(i)) / 2;
    }
    return ReflectedTerm{Partition(std::move(parts)), pos};
}

std::optional<ReflectedTerm> mu_q_combinatorial(const Partition& mu,
                                                const StaircaseDelta& delta, int r,
                                                std::size_t q) {
    check_reflection_args(mu, delta, r, q);
    const std::size_t n = delta.n();
    const int reflected = 2 * r - (2 * mu.part(q) + delta.doubled(q));

    std::size_t p = 1;
    for (std::size_t j = 1; j <= n; ++j) {
        if (j == q) continue;
        const int entry = 2 * mu.part(j) + delta.doubled(j);
        if (entry == reflected) return std::nullopt;
        if (entry > reflected) ++p;
    }

    auto rows = mu.padded(n);
    const int new_row = (reflected - delta.doubled(p)) / 2;

    // Step 1: remove row q.
    rows.erase(rows.begin() + static_cast<std::ptrdiff_t>(q - 1));
    if (p < q) {
        // Step 2: rows p..q-1 move down one row and gain a box.
        for (std::size_t i = p; i <= q - 1; ++i) rows[i - 1] += 1;
    } else if (p > q) {
        // Step 3: rows q+1..p move up one row and lose a box.
        for (std::size_t i = q; i <= p - 1; ++i) rows[i - 1] -= 1;
    }
    // Step 4: the new row lands at position p.
    rows.insert(rows.begin() + static_cast<std::ptrdiff_t>(p - 1), new_row);

    return ReflectedTerm{Partition(std::move(rows)), p};
}

} // namespace mnr
