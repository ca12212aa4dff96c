#include "mnrules/laurent_poly.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <ostream>
#include <sstream>

#include "mnrules/kernels/monomial_kernels.hpp"

namespace mnr {

namespace {

constexpr int kExponentLimit = std::numeric_limits<std::int16_t>::max();

std::int16_t checked_exponent(long value) {
    if (value > kExponentLimit || value < -kExponentLimit) {
        throw std::overflow_error("exponent outside the supported int16 range");
    }
    return static_cast<std::int16_t>(value);
}

void check_dimensions(std::size_t num_x, std::size_t num_y) {
    if (num_x + num_y > kMaxVariables) {
        throw dimension_error("at most " + std::to_string(kMaxVariables) +
                              " variables are supported");
    }
}

std::vector<Monomial> monomials_of(const LaurentPoly::Terms& terms) {
    std::vector<Monomial> out;
    out.reserve(terms.size());
    for (const auto& [m, c] : terms) out.push_back(m);
    return out;
}

Monomial abs_max(const std::vector<Monomial>& ms) {
    Monomial acc{};
    kernels::active_kernels().abs_max_reduce(ms.data(), ms.size(), acc);
    return acc;
}

} // namespace

LaurentPoly::LaurentPoly(std::size_t num_x, std::size_t num_y) : num_x_(num_x), num_y_(num_y) {
    check_dimensions(num_x, num_y);
}

LaurentPoly LaurentPoly::constant(std::size_t num_x, std::size_t num_y, const Rational& c) {
    LaurentPoly p(num_x, num_y);
    p.add_term(Monomial{}, c);
    return p;
}

LaurentPoly LaurentPoly::monomial(std::size_t num_x, std::size_t num_y,
                                  const std::vector<int>& x_doubled, const std::vector<int>& y,
                                  const Rational& c) {
    if (x_doubled.size() != num_x || y.size() != num_y) {
        throw dimension_error("monomial exponent vector has the wrong length");
    }
    LaurentPoly p(num_x, num_y);
    Monomial m{};
    for (std::size_t i = 0; i < num_x; ++i) m.exps[i] = checked_exponent(x_doubled[i]);
    for (std::size_t j = 0; j < num_y; ++j) {
        if (y[j] < 0) throw std::invalid_argument("y-exponents must be nonnegative");
        m.exps[num_x + j] = checked_exponent(y[j]);
    }
    p.add_term(m, c);
    return p;
}

LaurentPoly LaurentPoly::x_power_doubled(std::size_t num_x, std::size_t num_y, std::size_t i,
                                         int doubled) {
    if (i < 1 || i > num_x) throw dimension_error("x-variable index out of range");
    std::vector<int> xs(num_x, 0);
    xs[i - 1] = doubled;
    return monomial(num_x, num_y, xs, std::vector<int>(num_y, 0));
}

LaurentPoly LaurentPoly::y_power(std::size_t num_x, std::size_t num_y, std::size_t j, int k) {
    if (j < 1 || j > num_y) throw dimension_error("y-variable index out of range");
    std::vector<int> ys(num_y, 0);
    ys[j - 1] = k;
    return monomial(num_x, num_y, std::vector<int>(num_x, 0), ys);
}

Rational LaurentPoly::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

void LaurentPoly::add_term(const Monomial& m, const Rational& c) {
    if (sgn(c) == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (sgn(it->second) == 0) terms_.erase(it);
    }
}

void LaurentPoly::check_same_ring(const LaurentPoly& o) const {
    if (num_x_ != o.num_x_ || num_y_ != o.num_y_) {
        throw dimension_error("polynomials live in different rings");
    }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    check_same_ring(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    check_same_ring(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) { return *this = *this * o; }

LaurentPoly& LaurentPoly::operator*=(const Rational& c) {
    if (sgn(c) == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, v] : terms_) v *= c;
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    a.check_same_ring(b);
    LaurentPoly out(a.num_x_, a.num_y_);
    if (a.is_zero() || b.is_zero()) return out;

    const auto& small = a.size() <= b.size() ? a : b;
    const auto& large = a.size() <= b.size() ? b : a;

    std::vector<Monomial> large_monos;
    std::vector<const Rational*> large_coeffs;
    large_monos.reserve(large.size());
    large_coeffs.reserve(large.size());
    for (const auto& [m, c] : large.terms_) {
        large_monos.push_back(m);
        large_coeffs.push_back(&c);
    }
    const auto small_monos = monomials_of(small.terms_);
    const Monomial bound_small = abs_max(small_monos);
    const Monomial bound_large = abs_max(large_monos);
    for (std::size_t k = 0; k < kMaxVariables; ++k) {
        if (bound_small.exps[k] + bound_large.exps[k] > kExponentLimit) {
            throw std::overflow_error("product exponent outside the supported int16 range");
        }
    }

    const auto& kern = kernels::active_kernels();
    std::vector<Monomial> shifted(large_monos.size());
    Rational prod;
    out.terms_.reserve(small.size() * large.size());
    for (const auto& [sm, sc] : small.terms_) {
        kern.add_batch(sm, large_monos.data(), shifted.data(), shifted.size());
        for (std::size_t j = 0; j < shifted.size(); ++j) {
            mpq_mul(prod.get_mpq_t(), sc.get_mpq_t(), large_coeffs[j]->get_mpq_t());
            auto [it, inserted] = out.terms_.try_emplace(shifted[j], prod);
            if (!inserted) it->second += prod;
        }
    }
    std::erase_if(out.terms_, [](const auto& kv) { return sgn(kv.second) == 0; });
    return out;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly out = *this;
    for (auto& [m, c] : out.terms_) c = -c;
    return out;
}

bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.num_x_ == b.num_x_ && a.num_y_ == b.num_y_ && a.terms_ == b.terms_;
}

LaurentPoly LaurentPoly::bar() const {
    LaurentPoly out(num_x_, num_y_);
    auto monos = monomials_of(terms_);
    std::vector<const Rational*> coeffs;
    coeffs.reserve(terms_.size());
    for (const auto& [m, c] : terms_) coeffs.push_back(&c);
    kernels::active_kernels().negate_prefix_batch(monos.data(), monos.size(), num_x_);
    out.terms_.reserve(monos.size());
    for (std::size_t i = 0; i < monos.size(); ++i) out.terms_.emplace(monos[i], *coeffs[i]);
    return out;
}

LaurentPoly LaurentPoly::transform(
    std::size_t num_x, std::size_t num_y,
    const std::function<std::pair<Monomial, Rational>(const Monomial&)>& f) const {
    LaurentPoly out(num_x, num_y);
    for (const auto& [m, c] : terms_) {
        auto [mm, scale] = f(m);
        out.add_term(mm, c * scale);
    }
    return out;
}

int doubled_degree(const Monomial& m, std::size_t num_x, std::size_t num_y) noexcept {
    int deg = 0;
    for (std::size_t i = 0; i < num_x; ++i) deg += m.exps[i];
    for (std::size_t j = 0; j < num_y; ++j) deg += 2 * m.exps[num_x + j];
    return deg;
}

bool GradedLexGreater::operator()(const Monomial& a, const Monomial& b) const noexcept {
    const int da = doubled_degree(a, num_x, num_y);
    const int db = doubled_degree(b, num_x, num_y);
    if (da != db) return da > db;
    return a.exps > b.exps;
}

std::vector<LaurentPoly::Term> LaurentPoly::sorted_terms() const {
    std::vector<Term> out(terms_.begin(), terms_.end());
    GradedLexGreater cmp{num_x_, num_y_};
    std::sort(out.begin(), out.end(),
              [&](const Term& a, const Term& b) { return cmp(a.first, b.first); });
    return out;
}

namespace {

void write_exponent(std::ostream& os, int doubled_or_plain, bool doubled) {
    if (doubled && doubled_or_plain % 2 != 0) {
        os << '^' << doubled_or_plain << "/2";
        return;
    }
    const int e = doubled ? doubled_or_plain / 2 : doubled_or_plain;
    if (e != 1) os << '^' << e;
}

} // namespace

std::string LaurentPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : sorted_terms()) {
        const bool negative = sgn(c) < 0;
        if (first) {
            if (negative) os << '-';
        } else {
            os << (negative ? " - " : " + ");
        }
        first = false;
        const Rational mag = abs(c);

        std::vector<std::string> factors;
        for (std::size_t i = 0; i < num_x_; ++i) {
            if (m.exps[i] == 0) continue;
            std::ostringstream f;
            f << 'x' << i + 1;
            write_exponent(f, m.exps[i], true);
            factors.push_back(f.str());
        }
        for (std::size_t j = 0; j < num_y_; ++j) {
            if (m.exps[num_x_ + j] == 0) continue;
            std::ostringstream f;
            f << 'y' << j + 1;
            write_exponent(f, m.exps[num_x_ + j], false);
            factors.push_back(f.str());
        }
        if (factors.empty()) {
            os << mnr::to_string(mag);
            continue;
        }
        if (mag != 1) os << mnr::to_string(mag) << '*';
        for (std::size_t k = 0; k < factors.size(); ++k) {
            if (k) os << '*';
            os << factors[k];
        }
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << p.to_string(); }

LaurentPoly determinant(const Matrix& m) {
    const std::size_t n = m.size();
    for (const auto& row : m) {
        if (row.size() != n) throw dimension_error("determinant of a non-square matrix");
    }
    if (n == 0) throw dimension_error("determinant of an empty matrix");
    if (n > 20) throw dimension_error("determinant order too large");
    const std::size_t nx = m[0][0].num_x();
    const std::size_t ny = m[0][0].num_y();

    // minor[mask] = det of rows popcount(mask)..n-1 restricted to the columns
    // not in mask; filled from the full mask downward.
    const std::size_t full = (std::size_t{1} << n) - 1;
    std::vector<LaurentPoly> minor(full + 1);
    std::vector<bool> ready(full + 1, false);
    minor[full] = LaurentPoly::constant(nx, ny, 1);
    ready[full] = true;
    for (std::size_t mask = full; mask-- > 0;) {
        const auto row = static_cast<std::size_t>(__builtin_popcountll(mask));
        LaurentPoly acc(nx, ny);
        int sign = 1;
        for (std::size_t col = 0; col < n; ++col) {
            if (mask & (std::size_t{1} << col)) continue;
            const auto next = mask | (std::size_t{1} << col);
            if (ready[next] && !m[row][col].is_zero() && !minor[next].is_zero()) {
                auto term = m[row][col] * minor[next];
                if (sign < 0) {
                    acc -= term;
                } else {
                    acc += term;
                }
            }
            sign = -sign;
        }
        minor[mask] = std::move(acc);
        ready[mask] = true;
    }
    return minor[0];
}

LaurentPoly exact_divide(const LaurentPoly& num, const LaurentPoly& den) {
    if (num.num_x() != den.num_x() || num.num_y() != den.num_y()) {
        throw dimension_error("exact_divide: polynomials live in different rings");
    }
    if (den.is_zero()) throw std::domain_error("exact_divide: division by zero");
    const std::size_t nx = num.num_x();
    const std::size_t ny = num.num_y();
    LaurentPoly quotient(nx, ny);
    if (num.is_zero()) return quotient;

    const auto& kern = kernels::active_kernels();
    const auto lowest = [&](const std::vector<Monomial>& ms) {
        Monomial acc = ms.front();
        kern.min_reduce(ms.data(), ms.size(), acc);
        return acc;
    };
    const auto negated = [](const Monomial& m) {
        Monomial out{};
        for (std::size_t k = 0; k < kMaxVariables; ++k) {
            out.exps[k] = checked_exponent(-static_cast<long>(m.exps[k]));
        }
        return out;
    };

    // Multiply the divisor by a monomial so that no variable divides it; the
    // dividend then only needs a nonnegative shift c to become a polynomial,
    // and the polynomial quotient is x^c times the Laurent quotient.
    std::vector<Monomial> den_monos;
    std::vector<Rational> den_coeffs;
    for (const auto& [m, c] : den.terms()) {
        den_monos.push_back(m);
        den_coeffs.push_back(c);
    }
    const Monomial den_shift = negated(lowest(den_monos));
    kern.add_batch(den_shift, den_monos.data(), den_monos.data(), den_monos.size());

    std::vector<Monomial> num_monos = monomials_of(num.terms());
    kern.add_batch(den_shift, num_monos.data(), num_monos.data(), num_monos.size());
    Monomial lift = negated(lowest(num_monos));
    for (auto& e : lift.exps) e = std::max<std::int16_t>(e, 0);
    kern.add_batch(lift, num_monos.data(), num_monos.data(), num_monos.size());

    const GradedLexGreater order{nx, ny};
    std::map<Monomial, Rational, GradedLexGreater> rem(order);
    {
        std::size_t k = 0;
        for (const auto& [m, c] : num.terms()) rem.emplace(num_monos[k++], c);
    }

    std::size_t lead = 0;
    for (std::size_t k = 1; k < den_monos.size(); ++k) {
        if (order(den_monos[k], den_monos[lead])) lead = k;
    }
    const Monomial lead_neg = negated(den_monos[lead]);
    const Rational lead_coeff = den_coeffs[lead];

    const Monomial unlift = negated(lift);
    std::vector<Monomial> scratch(den_monos.size());
    Rational t;
    Rational prod;
    while (!rem.empty()) {
        const auto top = rem.begin();
        Monomial step{};
        kern.add_batch(lead_neg, &top->first, &step, 1);
        for (std::size_t k = 0; k < nx + ny; ++k) {
            if (step.exps[k] < 0) throw not_divisible_error("exact_divide: nonzero remainder");
        }
        mpq_div(t.get_mpq_t(), top->second.get_mpq_t(), lead_coeff.get_mpq_t());

        Monomial q_mono{};
        kern.add_batch(unlift, &step, &q_mono, 1);
        quotient.add_term(q_mono, t);

        kern.add_batch(step, den_monos.data(), scratch.data(), scratch.size());
        for (std::size_t k = 0; k < scratch.size(); ++k) {
            mpq_mul(prod.get_mpq_t(), t.get_mpq_t(), den_coeffs[k].get_mpq_t());
            auto [it, inserted] = rem.try_emplace(scratch[k]);
            it->second -= prod;
            if (sgn(it->second) == 0) rem.erase(it);
        }
    }

    for (const auto& [m, c] : quotient.terms()) {
        for (std::size_t j = 0; j < ny; ++j) {
            if (m.exps[nx + j] < 0) {
                throw not_divisible_error("exact_divide: quotient needs negative y-exponents");
            }
        }
    }
    return quotient;
}

} // namespace mnr

namespace mnr {

LaurentPoly embed(const LaurentPoly& p, std::size_t num_x, std::size_t num_y) {
    const std::size_t keep_x = std::min(num_x, p.num_x());
    const std::size_t keep_y = std::min(num_y, p.num_y());
    const std::size_t src_x = p.num_x();
    return p.transform(num_x, num_y, [&](const Monomial& m) {
        Monomial out{};
        for (std::size_t i = 0; i < src_x; ++i) {
            if (i < keep_x) {
                out.exps[i] = m.exps[i];
            } else if (m.exps[i] != 0) {
                throw dimension_error("embed: dropped x-variable occurs in polynomial");
            }
        }
        for (std::size_t j = 0; j < p.num_y(); ++j) {
            if (j < keep_y) {
                out.exps[num_x + j] = m.exps[src_x + j];
            } else if (m.exps[src_x + j] != 0) {
                throw dimension_error("embed: dropped y-variable occurs in polynomial");
            }
        }
        return std::pair{out, Rational(1)};
    });
}

LaurentPoly x_to_y(const LaurentPoly& p, std::size_t num_x) {
    if (p.num_y() != 0) throw dimension_error("x_to_y: source has y-variables");
    const std::size_t k = p.num_x();
    return p.transform(num_x, k, [&](const Monomial& m) {
        Monomial out{};
        for (std::size_t j = 0; j < k; ++j) {
            if (m.exps[j] < 0 || m.exps[j] % 2 != 0) {
                throw std::invalid_argument("x_to_y: exponents must be nonnegative integers");
            }
            out.exps[num_x + j] = static_cast<std::int16_t>(m.exps[j] / 2);
        }
        return std::pair{out, Rational(1)};
    });
}

namespace {

void check_permutation(const std::vector<std::size_t>& perm, std::size_t size) {
    std::vector<bool> seen(size, false);
    if (perm.size() != size) throw std::invalid_argument("permutation has the wrong length");
    for (auto v : perm) {
        if (v < 1 || v > size || seen[v - 1]) throw std::invalid_argument("not a permutation");
        seen[v - 1] = true;
    }
}

} // namespace

LaurentPoly permute_x(const LaurentPoly& p, const std::vector<std::size_t>& perm) {
    check_permutation(perm, p.num_x());
    return p.transform(p.num_x(), p.num_y(), [&](const Monomial& m) {
        Monomial out = m;
        for (std::size_t i = 0; i < perm.size(); ++i) out.exps[perm[i] - 1] = m.exps[i];
        return std::pair{out, Rational(1)};
    });
}

LaurentPoly permute_y(const LaurentPoly& p, const std::vector<std::size_t>& perm) {
    check_permutation(perm, p.num_y());
    const std::size_t off = p.num_x();
    return p.transform(p.num_x(), p.num_y(), [&](const Monomial& m) {
        Monomial out = m;
        for (std::size_t j = 0; j < perm.size(); ++j) out.exps[off + perm[j] - 1] = m.exps[off + j];
        return std::pair{out, Rational(1)};
    });
}

LaurentPoly invert_x(const LaurentPoly& p, std::size_t i) {
    if (i < 1 || i > p.num_x()) throw dimension_error("x-variable index out of range");
    return p.transform(p.num_x(), p.num_y(), [&](const Monomial& m) {
        Monomial out = m;
        out.exps[i - 1] = static_cast<std::int16_t>(-m.exps[i - 1]);
        return std::pair{out, Rational(1)};
    });
}

LaurentPoly supersymmetric_substitution(const LaurentPoly& p, std::size_t i, std::size_t j) {
    if (i < 1 || i > p.num_x() || j < 1 || j > p.num_y()) {
        throw dimension_error("variable index out of range");
    }
    const std::size_t yslot = p.num_x() + j - 1;
    return p.transform(p.num_x(), p.num_y(), [&](const Monomial& m) {
        Monomial out = m;
        const int ye = m.exps[yslot];
        out.exps[yslot] = 0;
        out.exps[i - 1] = checked_exponent(m.exps[i - 1] + 2L * ye);
        return std::pair{out, Rational(ye % 2 == 0 ? 1 : -1)};
    });
}

bool independent_of_x(const LaurentPoly& p, std::size_t i) {
    if (i < 1 || i > p.num_x()) throw dimension_error("x-variable index out of range");
    return std::all_of(p.terms().begin(), p.terms().end(),
                       [&](const auto& kv) { return kv.first.exps[i - 1] == 0; });
}

} // namespace mnr
