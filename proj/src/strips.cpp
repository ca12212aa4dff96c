#include "mnrules/strips.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <utility>

namespace mnr {

StripKind classify_strip(const SkewShape& s) {
    const auto cells = s.cells();
    StripKind kind;

    std::set<int> rows;
    std::set<int> cols;
    for (const auto& c : cells) {
        rows.insert(c.row);
        cols.insert(c.col);
    }
    kind.is_horizontal = cols.size() == cells.size();
    kind.is_vertical = rows.size() == cells.size();
    if (cells.empty()) return kind;

    std::set<std::pair<int, int>> present;
    for (const auto& c : cells) present.emplace(c.row, c.col);
    auto has = [&](int i, int j) { return present.count({i, j}) != 0; };

    for (const auto& c : cells) {
        if (has(c.row, c.col + 1) && has(c.row + 1, c.col) && has(c.row + 1, c.col + 1)) {
            return kind;
        }
    }

    // flood fill through side-adjacent cells
    std::set<std::pair<int, int>> seen{{cells.front().row, cells.front().col}};
    std::vector<std::pair<int, int>> stack{{cells.front().row, cells.front().col}};
    while (!stack.empty()) {
        auto [i, j] = stack.back();
        stack.pop_back();
        const std::pair<int, int> nbrs[] = {{i - 1, j}, {i + 1, j}, {i, j - 1}, {i, j + 1}};
        for (const auto& nb : nbrs) {
            if (has(nb.first, nb.second) && seen.insert(nb).second) stack.push_back(nb);
        }
    }
    if (seen.size() != cells.size()) return kind;

    kind.is_border = true;
    kind.height = static_cast<int>(rows.size()) - 1;
    return kind;
}

namespace {

// First-column hook lengths (beta numbers) of `mu` over `rows` rows:
// beta_i = mu_i + rows - i, strictly decreasing and nonnegative.
std::vector<int> beta_numbers(const Partition& mu, std::size_t rows) {
    std::vector<int> beta(rows);
    for (std::size_t i = 1; i <= rows; ++i) {
        beta[i - 1] = mu.part(i) + static_cast<int>(rows - i);
    }
    return beta;
}

Partition from_beta(std::vector<int> beta) {
    std::sort(beta.begin(), beta.end(), std::greater<>{});
    const auto rows = beta.size();
    std::vector<int> parts(rows);
    for (std::size_t i = 1; i <= rows; ++i) {
        parts[i - 1] = beta[i - 1] - static_cast<int>(rows - i);
    }
    return Partition(std::move(parts));
}

// Number of beta numbers strictly between lo and hi.
int count_between(const std::vector<int>& beta, int lo, int hi) {
    return static_cast<int>(
        std::count_if(beta.begin(), beta.end(), [&](int b) { return b > lo && b < hi; }));
}

void sort_steps(std::vector<StripStep>& steps) {
    std::sort(steps.begin(), steps.end(),
              [](const StripStep& a, const StripStep& b) { return a.shape > b.shape; });
}

} // namespace

std::vector<StripStep> border_strip_additions(const Partition& mu, int r, std::size_t max_rows) {
    std::vector<StripStep> out;
    if (r < 1 || mu.length() > max_rows) return out;
    const auto beta = beta_numbers(mu, max_rows);
    for (std::size_t i = 0; i < beta.size(); ++i) {
        const int moved = beta[i] + r;
        if (std::find(beta.begin(), beta.end(), moved) != beta.end()) continue;
        auto next = beta;
        next[i] = moved;
        out.push_back({from_beta(std::move(next)), count_between(beta, beta[i], moved)});
    }
    sort_steps(out);
    return out;
}

std::vector<StripStep> border_strip_additions(const Partition& mu, int r) {
    return border_strip_additions(mu, r, mu.length() + static_cast<std::size_t>(std::max(r, 0)));
}

std::vector<StripStep> border_strip_removals(const Partition& mu, int r) {
    std::vector<StripStep> out;
    if (r < 1) return out;
    const auto beta = beta_numbers(mu, mu.length());
    for (std::size_t i = 0; i < beta.size(); ++i) {
        const int moved = beta[i] - r;
        if (moved < 0 || std::find(beta.begin(), beta.end(), moved) != beta.end()) continue;
        auto next = beta;
        next[i] = moved;
        out.push_back({from_beta(std::move(next)), count_between(beta, moved, beta[i])});
    }
    sort_steps(out);
    return out;
}

namespace {

// Each row of lambda keeps either all of its boxes or all but one; `budget`
// is the number of boxes still to remove (negative means unconstrained).
void vs_removals_rec(const Partition& lambda, std::size_t row, int budget, std::vector<int>& cur,
                     std::vector<Partition>& out) {
    const auto len = lambda.length();
    if (row > len) {
        if (budget <= 0) out.emplace_back(cur);
        return;
    }
    const int full = lambda.part(row);
    for (int take = 0; take <= 1; ++take) {
        if (take == 1 && budget == 0) break;
        const int kept = full - take;
        if (!cur.empty() && kept > cur.back()) continue;
        cur.push_back(kept);
        vs_removals_rec(lambda, row + 1, budget < 0 ? budget : budget - take, cur, out);
        cur.pop_back();
    }
}

} // namespace

std::vector<Partition> vertical_strip_removals(const Partition& lambda, int s) {
    std::vector<Partition> out;
    if (s < 0) return out;
    std::vector<int> cur;
    vs_removals_rec(lambda, 1, s, cur, out);
    canonicalize(out);
    return out;
}

std::vector<Partition> vertical_strip_removals(const Partition& lambda) {
    std::vector<Partition> out;
    std::vector<int> cur;
    vs_removals_rec(lambda, 1, -1, cur, out);
    canonicalize(out);
    return out;
}

namespace {

void hs_additions_rec(const Partition& mu, std::size_t row, std::size_t max_rows, int remaining,
                      std::vector<int>& cur, std::vector<Partition>& out) {
    if (remaining == 0) {
        for (std::size_t i = row; i <= mu.length(); ++i) cur.push_back(mu.part(i));
        out.emplace_back(cur);
        cur.resize(row - 1);
        return;
    }
    if (row > max_rows) return;
    // gamma_1 is unbounded; gamma_i <= mu_{i-1} otherwise
    const int base = mu.part(row);
    const int cap = row == 1 ? base + remaining : std::min(base + remaining, mu.part(row - 1));
    for (int g = cap; g >= base; --g) {
        cur.push_back(g);
        hs_additions_rec(mu, row + 1, max_rows, remaining - (g - base), cur, out);
        cur.pop_back();
    }
}

void vs_additions_rec(const Partition& mu, std::size_t row, std::size_t max_rows, int remaining,
                      std::vector<int>& cur, std::vector<Partition>& out) {
    if (remaining == 0) {
        for (std::size_t i = row; i <= mu.length(); ++i) cur.push_back(mu.part(i));
        out.emplace_back(cur);
        cur.resize(row - 1);
        return;
    }
    if (row > max_rows) return;
    const int base = mu.part(row);
    for (int add = 1; add >= 0; --add) {
        const int g = base + add;
        if (row > 1 && g > cur.back()) continue;
        if (g == 0) continue; // an empty row ends the diagram
        cur.push_back(g);
        vs_additions_rec(mu, row + 1, max_rows, remaining - add, cur, out);
        cur.pop_back();
    }
}

} // namespace

std::vector<Partition> horizontal_strip_additions(const Partition& mu, int r,
                                                  std::size_t max_rows) {
    std::vector<Partition> out;
    if (r < 0 || mu.length() > max_rows) return out;
    std::vector<int> cur;
    hs_additions_rec(mu, 1, max_rows, r, cur, out);
    canonicalize(out);
    return out;
}

std::vector<Partition> vertical_strip_additions(const Partition& mu, int r, std::size_t max_rows) {
    std::vector<Partition> out;
    if (r < 0 || mu.length() > max_rows) return out;
    std::vector<int> cur;
    vs_additions_rec(mu, 1, max_rows, r, cur, out);
    canonicalize(out);
    return out;
}

} // namespace mnr
