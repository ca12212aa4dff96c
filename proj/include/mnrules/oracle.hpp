#ifndef MNRULES_ORACLE_HPP
#define MNRULES_ORACLE_HPP

#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "mnrules/laurent_poly.hpp"
#include "mnrules/partition.hpp"

// Brute-force evaluation of every character family as an explicit Laurent
// polynomial. Where two independent constructions exist (a determinant
// ratio and a tableau sum, or a defining sum and a tableau sum) both are
// exposed so they can be checked against each other.
//
// Ring conventions: functions taking (n, m) return a polynomial in the ring
// with n x-variables and m y-variables. Characters indexed by partitions
// with more than n rows are 0 for the Schur, symplectic and orthogonal
// families.

namespace mnr {

enum class CharacterKind {
    schur,
    skew_schur,
    symplectic,
    odd_orthogonal,
    even_orthogonal,
    hook_schur,
    orthosymplectic,
};

/// Short basis label: s, skew, sp, oo, oe, hs, spo.
std::string_view short_name(CharacterKind kind) noexcept;
/// Accepts the short label or the long name ("symplectic", "hook_schur", ...).
std::optional<CharacterKind> parse_character_kind(std::string_view text);

class identity_violation : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// -- power sums -----------------------------------------------------------

/// p_r(X) = sum_i x_i^r; p_0 = 1.
LaurentPoly power_sum(int r, std::size_t n, std::size_t m = 0);
/// p_r(X, 1/X) = sum_i (x_i^r + x_i^-r).
LaurentPoly power_sum_bar(int r, std::size_t n, std::size_t m = 0);
/// P_r(X/Y) = p_r(X) + (-1)^(r-1) p_r(Y).
LaurentPoly super_power_sum(int r, std::size_t n, std::size_t m);
/// P_r(X, 1/X / Y) = p_r(X, 1/X) + (-1)^(r-1) p_r(Y).
LaurentPoly spo_power_sum(int r, std::size_t n, std::size_t m);

// -- alternants -----------------------------------------------------------

/// det(x_i^(a_j) - x_i^(-a_j)) with exponents a_j given in doubled units.
LaurentPoly alternant_minus(const std::vector<int>& doubled_exponents, std::size_t m = 0);
/// det(x_i^(a_j) + x_i^(-a_j)) with a_j in doubled units.
LaurentPoly alternant_plus(const std::vector<int>& doubled_exponents, std::size_t m = 0);
/// det(x_i^(a_j)) with ordinary integer exponents.
LaurentPoly alternant_plain(const std::vector<int>& exponents, std::size_t m = 0);

// -- Schur ----------------------------------------------------------------

/// Sum of x^weight over semistandard tableaux of shape lambda in 1..n.
LaurentPoly schur_tableaux(const Partition& lambda, std::size_t n, std::size_t m = 0);
/// det(x_i^(lambda_j + n - j)) / det(x_i^(n - j)).
LaurentPoly schur_bialternant(const Partition& lambda, std::size_t n, std::size_t m = 0);
inline LaurentPoly schur(const Partition& lambda, std::size_t n, std::size_t m = 0) {
    return schur_tableaux(lambda, n, m);
}
/// Skew Schur polynomial in x_1..x_n by tableau enumeration.
LaurentPoly skew_schur(const SkewShape& shape, std::size_t n);
/// Skew Schur polynomial in the y-variables of the ring (n, m).
LaurentPoly skew_schur_y(const SkewShape& shape, std::size_t n, std::size_t m);

// -- symplectic and orthogonal --------------------------------------------

/// A_{lambda+delta} / A_delta with delta = (n, ..., 1).
LaurentPoly symplectic_weyl(const Partition& lambda, std::size_t n, std::size_t m = 0);
/// Sum over King tableaux of prod x_i^(#i - #ibar).
LaurentPoly symplectic_king(const Partition& lambda, std::size_t n, std::size_t m = 0);
inline LaurentPoly symplectic_char(const Partition& lambda, std::size_t n, std::size_t m = 0) {
    return symplectic_weyl(lambda, n, m);
}
/// A_{lambda+delta} / A_delta with delta = (n-1/2, ..., 1/2).
LaurentPoly odd_orthogonal_char(const Partition& lambda, std::size_t n, std::size_t m = 0);
/// 2 N_{lambda+delta} / ((1 + [lambda_n = 0]) N_delta) with delta = (n-1, ..., 0).
LaurentPoly even_orthogonal_char(const Partition& lambda, std::size_t n, std::size_t m = 0);

// -- super families -------------------------------------------------------

/// sum over mu inside lambda of s_mu(X) s_{lambda'/mu'}(Y).
LaurentPoly hook_schur(const Partition& lambda, std::size_t n, std::size_t m);
/// sum over mu inside lambda of sp_mu(X) s_{lambda'/mu'}(Y).
LaurentPoly orthosymplectic_definition(const Partition& lambda, std::size_t n, std::size_t m);
/// Sum over spo(2n, m)-tableaux.
LaurentPoly orthosymplectic_tableaux(const Partition& lambda, std::size_t n, std::size_t m);
inline LaurentPoly orthosymplectic_char(const Partition& lambda, std::size_t n, std::size_t m) {
    return orthosymplectic_definition(lambda, n, m);
}

/// One (pi, exponent) pair of the last-y branching sum.
struct BranchTerm {
    Partition shape;
    int y_exponent = 0;
    friend bool operator==(const BranchTerm&, const BranchTerm&) = default;
};

/// Checks F_lambda(X/Y) = sum over lambda/pi vertical strips of
/// F_pi(X/Y minus y_m) * y_m^(|lambda| - |pi|) for F = hs or spo, and
/// returns the pairs used. Throws identity_violation on mismatch.
std::vector<BranchTerm> branch_last_y(CharacterKind kind, const Partition& lambda,
                                      std::size_t n, std::size_t m);

// -- dispatch and caching -------------------------------------------------

/// Evaluates a single-partition character family (everything except
/// skew_schur) in the ring (n, m). Families in X alone ignore m for the
/// computation but still return a polynomial in the ring (n, m).
LaurentPoly character(CharacterKind kind, const Partition& lambda, std::size_t n,
                      std::size_t m);

/// Memoizing front end over `character`. Thread-safe; a value computed
/// twice concurrently is stored once and both callers see equal results.
class CharacterCache {
  public:
    std::shared_ptr<const LaurentPoly> get(CharacterKind kind, const Partition& lambda,
                                           std::size_t n, std::size_t m);
    std::shared_ptr<const LaurentPoly> skew_y(const SkewShape& shape, std::size_t n,
                                              std::size_t m);
    [[nodiscard]] std::size_t size() const;

  private:
    using Key = std::tuple<int, Partition, Partition, std::size_t, std::size_t>;
    std::shared_ptr<const LaurentPoly> lookup_or_compute(
        const Key& key, const std::function<LaurentPoly()>& compute);

    mutable std::mutex mutex_;
    std::map<Key, std::shared_ptr<const LaurentPoly>> entries_;
};

} // namespace mnr

#endif
