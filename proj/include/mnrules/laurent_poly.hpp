#ifndef MNRULES_LAURENT_POLY_HPP
#define MNRULES_LAURENT_POLY_HPP

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "mnrules/monomial.hpp"
#include "mnrules/rational.hpp"

namespace mnr {

class dimension_error : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

class not_divisible_error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Sparse Laurent polynomial over Q in x_1..x_n and y_1..y_m.
///
/// x-exponents are stored in doubled units (slot value k means x^(k/2)) so
/// half-integer powers need no special casing; y-exponents are ordinary
/// nonnegative integers. Zero coefficients are never stored, which makes
/// term-map equality the same as polynomial equality.
class LaurentPoly {
  public:
    using Terms = std::unordered_map<Monomial, Rational, MonomialHash>;
    using Term = std::pair<Monomial, Rational>;

    LaurentPoly() = default;
    LaurentPoly(std::size_t num_x, std::size_t num_y);

    static LaurentPoly constant(std::size_t num_x, std::size_t num_y, const Rational& c);
    /// c * prod x_i^(x_doubled[i]/2) * prod y_j^(y[j]).
    static LaurentPoly monomial(std::size_t num_x, std::size_t num_y,
                                const std::vector<int>& x_doubled, const std::vector<int>& y,
                                const Rational& c = 1);
    /// x_i^(doubled/2); i is 1-based.
    static LaurentPoly x_power_doubled(std::size_t num_x, std::size_t num_y, std::size_t i,
                                       int doubled);
    /// x_i^k; i is 1-based.
    static LaurentPoly x_power(std::size_t num_x, std::size_t num_y, std::size_t i, int k) {
        return x_power_doubled(num_x, num_y, i, 2 * k);
    }
    /// y_j^k; j is 1-based, k >= 0.
    static LaurentPoly y_power(std::size_t num_x, std::size_t num_y, std::size_t j, int k);

    [[nodiscard]] std::size_t num_x() const noexcept { return num_x_; }
    [[nodiscard]] std::size_t num_y() const noexcept { return num_y_; }
    [[nodiscard]] std::size_t size() const noexcept { return terms_.size(); }
    [[nodiscard]] bool is_zero() const noexcept { return terms_.empty(); }
    [[nodiscard]] const Terms& terms() const noexcept { return terms_; }
    [[nodiscard]] Rational coefficient(const Monomial& m) const;

    /// Adds c * m, dropping the term if the coefficient cancels to zero.
    void add_term(const Monomial& m, const Rational& c);

    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly& operator*=(const LaurentPoly& o);
    LaurentPoly& operator*=(const Rational& c);

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator*(LaurentPoly a, const Rational& c) { return a *= c; }
    friend LaurentPoly operator*(const Rational& c, LaurentPoly a) { return a *= c; }
    LaurentPoly operator-() const;

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b);

    /// x_i -> 1/x_i for every x-variable.
    [[nodiscard]] LaurentPoly bar() const;

    /// Applies `f` to every exponent vector (coefficients may also be scaled
    /// through the returned factor) and collects like terms. The result has
    /// `num_x` x-variables and `num_y` y-variables.
    [[nodiscard]] LaurentPoly transform(std::size_t num_x, std::size_t num_y,
                                        const std::function<std::pair<Monomial, Rational>(
                                            const Monomial&)>& f) const;

    /// Terms sorted by descending graded-lex order.
    [[nodiscard]] std::vector<Term> sorted_terms() const;

    /// Human-readable form, e.g. "x1^2*x2^-1 - 1/2*y1^3".
    [[nodiscard]] std::string to_string() const;

  private:
    void check_same_ring(const LaurentPoly& o) const;

    std::size_t num_x_ = 0;
    std::size_t num_y_ = 0;
    Terms terms_;
};

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p);

/// Total degree in doubled units: sum of x slots + 2 * sum of y slots.
int doubled_degree(const Monomial& m, std::size_t num_x, std::size_t num_y) noexcept;

/// Strict "a comes before b" in descending graded-lex order.
struct GradedLexGreater {
    std::size_t num_x = 0;
    std::size_t num_y = 0;
    bool operator()(const Monomial& a, const Monomial& b) const noexcept;
};

using Matrix = std::vector<std::vector<LaurentPoly>>;

/// Determinant by Laplace expansion along rows, memoized on the set of
/// columns still available.
LaurentPoly determinant(const Matrix& m);

/// The q with q * den == num. Throws not_divisible_error if there is no such
/// Laurent polynomial and std::domain_error if den is zero.
LaurentPoly exact_divide(const LaurentPoly& num, const LaurentPoly& den);

// Variable substitutions. Indices are 1-based.

/// Re-homes `p` into the ring with the given counts: x_i stays x_i for
/// i <= min(num_x), y_j stays y_j for j <= min(num_y). Throws if a dropped
/// variable occurs in `p`.
LaurentPoly embed(const LaurentPoly& p, std::size_t num_x, std::size_t num_y);

/// Moves the x-variables of `p` (integer exponents, all >= 0) into the
/// y-slots of the ring (num_x, p.num_x()): x_j -> y_j.
LaurentPoly x_to_y(const LaurentPoly& p, std::size_t num_x);

/// x_i -> x_{perm[i-1]}; `perm` is a permutation of 1..num_x.
LaurentPoly permute_x(const LaurentPoly& p, const std::vector<std::size_t>& perm);
/// y_j -> y_{perm[j-1]}.
LaurentPoly permute_y(const LaurentPoly& p, const std::vector<std::size_t>& perm);
/// x_i -> 1/x_i for the single variable i.
LaurentPoly invert_x(const LaurentPoly& p, std::size_t i);
/// x_i -> t, y_j -> -t, with t stored in the slot of x_i. The result is
/// free of x_i exactly when `p` passes the supersymmetry cancellation test.
LaurentPoly supersymmetric_substitution(const LaurentPoly& p, std::size_t i, std::size_t j);
/// True when the x_i slot is zero in every term.
bool independent_of_x(const LaurentPoly& p, std::size_t i);

} // namespace mnr

#endif
