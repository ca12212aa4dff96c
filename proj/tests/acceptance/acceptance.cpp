// One line per acceptance criterion. Exit status is 0 only when every
// criterion passes, or when the only failures are the ones named with
// --known-deviation and those fail in the documented way.

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "mnrules/format.hpp"
#include "mnrules/oracle.hpp"
#include "mnrules/rules.hpp"
#include "mnrules/sweep.hpp"

using namespace mnr;

namespace {

struct Outcome {
    bool passed = false;
    std::string detail;
};

struct Criterion {
    int id;
    std::string title;
    double limit_seconds; // 0: no limit
    std::function<Outcome()> run;
};

constexpr auto SP = CharacterKind::symplectic;
constexpr auto OO = CharacterKind::odd_orthogonal;
constexpr auto OE = CharacterKind::even_orthogonal;
constexpr auto SPO = CharacterKind::orthosymplectic;
constexpr auto S = CharacterKind::schur;

FormalExpansion formal(CharacterKind k, const std::vector<std::pair<Partition, Rational>>& terms) {
    FormalExpansion e;
    for (const auto& [p, c] : terms) e.add(k, p, c);
    return e;
}

std::string show(const RuleSelector& sel, const MixedExpansion& e) {
    std::string t = render_text({sel, e});
    // keep the detail on one line
    for (auto& ch : t) {
        if (ch == '\n') ch = ' ';
    }
    while (!t.empty() && t.back() == ' ') t.pop_back();
    return t;
}

Outcome expect_expansion(const RuleSelector& sel, const FormalExpansion& expected) {
    const auto got = expand(sel);
    const bool ok = got.mixed_terms.empty() && got.spo_terms == expected;
    return {ok, show(sel, got)};
}

LaurentPoly mono(std::size_t n, std::size_t m, std::vector<int> x, std::vector<int> y = {}) {
    for (auto& e : x) e *= 2;
    y.resize(m);
    return LaurentPoly::monomial(n, m, x, y);
}

// -- 4: the orthosymplectic display -----------------------------------------

struct DisplayMixed {
    Partition sp;
    SkewShape y;
    int sign;
};

Outcome criterion4() {
    std::ostringstream os;
    bool ok = true;

    const RuleSelector ex{RuleKind::spo, {2, 2}, 3, 2, 2};
    const auto got = expand(ex);
    const auto display_spo = formal(SPO, {{{5, 2}, 1}, {{4, 3}, -1}, {{2, 2, 2, 1}, -1},
                                          {{2, 2, 1, 1, 1}, 1}});
    const std::vector<DisplayMixed> display_mixed = {
        {{1, 1}, SkewShape({2, 2}, {1}), -1},
        {{2, 1}, SkewShape({2, 2}, {1, 1}), -1},
        {{1}, SkewShape({2, 2}, {2}), -1},
        {{2}, SkewShape({2, 2}, {2, 1}), -1},
    };

    std::vector<std::string> missing, extra;
    std::size_t spo_found = 0;
    for (const auto& [label, c] : display_spo.terms()) {
        if (got.spo_terms.coefficient(label.basis, label.partition) == c) ++spo_found;
        else missing.push_back("spo" + label.partition.to_string());
    }
    for (const auto& [label, c] : got.spo_terms.terms()) {
        if (display_spo.coefficient(label.basis, label.partition) != c) {
            extra.push_back(to_string(c) + " spo" + label.partition.to_string());
        }
    }
    std::size_t mixed_found = 0;
    for (const auto& d : display_mixed) {
        bool found = false;
        for (const auto& t : got.mixed_terms) {
            found = found || (t.sp_part == d.sp && t.y_shape() == d.y && t.coeff == Rational(d.sign));
        }
        if (found) ++mixed_found;
        else missing.push_back("sp" + d.sp.to_string() + " mixed");
    }
    if (got.mixed_terms.size() != display_mixed.size()) extra.push_back("mixed term count");

    const bool example_exact = missing.empty() && extra.empty();
    ok = ok && example_exact;
    os << "lambda=(2,2) n=2 m=2 r=3: " << (example_exact ? "exact" : "differs");
    os << " [display spo terms present " << spo_found << "/4, display mixed terms present " << mixed_found << "/4";
    if (!missing.empty()) {
        os << ", missing:";
        for (const auto& s : missing) os << ' ' << s;
    }
    if (!extra.empty()) {
        os << ", extra:";
        for (const auto& s : extra) os << ' ' << s;
    }
    os << "]";

    // the extra term is forced by the identity itself
    CharacterCache cache;
    const bool identity = evaluate(got, 2, 2, cache) == rule_lhs(ex, cache);
    auto trimmed = got;
    trimmed.spo_terms = display_spo;
    const bool display_identity = evaluate(trimmed, 2, 2, cache) == rule_lhs(ex, cache);
    os << "; oracle identity with computed terms: " << (identity ? "holds" : "fails")
       << ", with the display's terms: " << (display_identity ? "holds" : "fails");

    const RuleSelector rem{RuleKind::spo, {1}, 3, 2, 1};
    const auto r = expand(rem);
    bool remark = r.spo_terms == formal(SPO, {{{4}, 1}, {{2, 2}, -1}, {{1, 1, 1, 1}, 1}}) &&
                  r.mixed_terms.size() == 1 && r.mixed_terms[0].sp_part == Partition{1, 1} &&
                  r.mixed_terms[0].coeff == Rational(-1) &&
                  r.mixed_terms[0].y_shape().size() == 0;
    ok = ok && remark;
    os << "; lambda=(1) n=2 m=1 r=3: " << (remark ? "exact" : "differs");
    return {ok, os.str()};
}

// -- 5: classical example and two character displays ------------------------

Outcome criterion5() {
    std::ostringstream os;
    const auto classical = expect_expansion(
        {RuleKind::classical, {3, 1}, 4, 6, 0},
        formal(S, {{{7, 1}, 1}, {{4, 4}, -1}, {{3, 3, 2}, -1}, {{3, 2, 2, 1}, 1},
                   {{3, 1, 1, 1, 1, 1}, -1}}));
    os << "p_4 s_(3,1): " << (classical.passed ? "exact" : "differs");

    const auto sp_expected = mono(2, 0, {1, 1}) + mono(2, 0, {1, -1}) + mono(2, 0, {-1, 1}) +
                             mono(2, 0, {-1, -1}) + mono(2, 0, {0, 0});
    const auto sp = symplectic_char({1, 1}, 2);
    const bool sp_ok = sp == sp_expected && sp.size() == 5;
    os << "; sp_(1,1) n=2: " << sp.size() << " terms " << (sp_ok ? "exact" : "differs");

    const std::size_t n = 2, m = 1;
    const auto spo_expected = mono(n, m, {1, 1}) + mono(n, m, {1, -1}) + mono(n, m, {-1, 1}) +
                              mono(n, m, {-1, -1}) + mono(n, m, {0, 0}) +
                              mono(n, m, {1, 0}, {1}) + mono(n, m, {-1, 0}, {1}) +
                              mono(n, m, {0, 1}, {1}) + mono(n, m, {0, -1}, {1}) +
                              mono(n, m, {0, 0}, {2});
    const auto spo_def = orthosymplectic_definition({1, 1}, n, m);
    const auto spo_tab = orthosymplectic_tableaux({1, 1}, n, m);
    const bool spo_ok = spo_def == spo_expected && spo_tab == spo_expected && spo_def.size() == 10;
    os << "; spo_(1,1) n=2 m=1: " << spo_def.size() << " terms " << (spo_ok ? "exact" : "differs");
    return {classical.passed && sp_ok && spo_ok, os.str()};
}

// -- 6: two constructions per family ----------------------------------------

Outcome criterion6() {
    std::size_t checks = 0, mismatches = 0;
    std::string first;
    auto note = [&](bool ok, const std::string& what) {
        ++checks;
        if (!ok) {
            ++mismatches;
            if (first.empty()) first = what;
        }
    };
    for (std::size_t n = 1; n <= 3; ++n) {
        for (int size = 0; size <= 6; ++size) {
            for (const auto& lambda : partitions_of(size)) {
                const auto tag = lambda.to_string() + " n=" + std::to_string(n);
                note(schur_tableaux(lambda, n) == schur_bialternant(lambda, n), "s" + tag);
                note(symplectic_king(lambda, n) == symplectic_weyl(lambda, n), "sp" + tag);
                for (std::size_t m = 0; m <= 2; ++m) {
                    note(orthosymplectic_definition(lambda, n, m) ==
                             orthosymplectic_tableaux(lambda, n, m),
                         "spo" + tag + " m=" + std::to_string(m));
                }
            }
        }
    }
    std::ostringstream os;
    os << checks << " comparisons, " << mismatches << " mismatches";
    if (!first.empty()) os << " (first: " << first << ")";
    return {mismatches == 0, os.str()};
}

// -- 7 and 9: the sweep -------------------------------------------------------

Outcome criterion7(CharacterCache& cache) {
    auto config = SweepConfig::standard();
    config.rules = {RuleKind::classical, RuleKind::hook, RuleKind::sp,
                    RuleKind::oo,        RuleKind::oe,   RuleKind::spo};
    const auto report = run_sweep(config, cache);
    std::ostringstream os;
    os << report.passed << "/" << report.total << " instances";
    for (const auto& [rule, count] : report.per_rule) os << ", " << rule_name(rule) << " " << count;
    if (report.first_failure) os << "; first failure: " << report.first_failure->selector.describe();
    return {report.ok() && report.total > 0, os.str()};
}

Outcome criterion9() {
    auto config = SweepConfig::standard();
    std::size_t sp_hyp = 0, sp_bad = 0, spo_hyp = 0, spo_bad = 0;
    for (const auto& sel : sweep_instances(config)) {
        const auto n = sel.n;
        if (sel.rule == RuleKind::sp && sel.mu.length() == n && sel.mu.part(n) + 1 >= sel.r) {
            ++sp_hyp;
            if (!weyl_rule_sums(StaircaseKind::symplectic, sel.mu, sel.r, n).reflected.empty()) ++sp_bad;
        }
        if (sel.rule == RuleKind::spo && sel.mu.length() <= n &&
            sel.mu.part(n) + 1 >= static_cast<int>(sel.m) + sel.r) {
            ++spo_hyp;
            if (!orthosymplectic_mn(sel.mu, sel.r, n, sel.m).mixed_terms.empty()) ++spo_bad;
        }
    }
    std::ostringstream os;
    os << "third sum empty in " << sp_hyp - sp_bad << "/" << sp_hyp
       << " sp instances with mu_n + 1 >= r; mixed part empty in " << spo_hyp - spo_bad << "/"
       << spo_hyp << " spo instances with lambda_n + 1 >= m + r";
    return {sp_bad == 0 && spo_bad == 0 && sp_hyp > 0 && spo_hyp > 0, os.str()};
}

// -- 8: determinant and strip identities ------------------------------------

std::vector<int> random_strict(std::mt19937& rng, std::size_t n, bool half) {
    std::vector<int> pool(8);
    for (int i = 0; i < 8; ++i) pool[i] = 2 * i + (half ? 1 : 0);
    std::shuffle(pool.begin(), pool.end(), rng);
    std::vector<int> a(pool.begin(), pool.begin() + static_cast<long>(n));
    std::sort(a.rbegin(), a.rend());
    return a;
}

bool alternant_identity(const std::function<LaurentPoly(const std::vector<int>&)>& alt,
                        const std::vector<int>& alpha, int r) {
    const std::size_t n = alpha.size();
    LaurentPoly rhs(n, 0);
    for (std::size_t j = 0; j < n; ++j) {
        auto up = alpha, down = alpha;
        up[j] += 2 * r;
        down[j] -= 2 * r;
        rhs += alt(up) + alt(down);
    }
    return power_sum_bar(r, n) * alt(alpha) == rhs;
}

Outcome criterion8(CharacterCache& cache) {
    std::mt19937 rng(20240611);
    std::uniform_int_distribution<int> pick_n(1, 3), pick_r(1, 5), coin(0, 1);
    int a_ok = 0, n_ok = 0;
    const int trials = 50;
    for (int t = 0; t < trials; ++t) {
        const auto n = static_cast<std::size_t>(pick_n(rng));
        const int r = pick_r(rng);
        const auto alpha = random_strict(rng, n, coin(rng) == 1);
        if (alternant_identity([](const auto& a) { return alternant_minus(a); }, alpha, r)) ++a_ok;
        const auto beta = random_strict(rng, n, coin(rng) == 1);
        if (alternant_identity([](const auto& a) { return alternant_plus(a); }, beta, r)) ++n_ok;
    }

    std::size_t inter = 0, inter_ok = 0, add = 0, add_ok = 0;
    for (std::size_t n = 1; n <= 2; ++n) {
        for (std::size_t m = 1; m <= 2; ++m) {
            for (int size = 0; size <= 5; ++size) {
                for (const auto& lambda : partitions_of(size)) {
                    for (int r = 1; r <= 4; ++r) {
                        const auto a = add_lemma_sides(lambda, r, n, m, cache);
                        ++add;
                        if (a.lhs == a.rhs) ++add_ok;
                        for (int s = 0; s <= 3; ++s) {
                            const auto p = interchange_sides(lambda, r, s, n, m, cache);
                            ++inter;
                            if (p.lhs == p.rhs) ++inter_ok;
                        }
                    }
                }
            }
        }
    }
    std::ostringstream os;
    os << "A_alpha " << a_ok << "/" << trials << ", N_alpha " << n_ok << "/" << trials
       << ", interchange " << inter_ok << "/" << inter << ", strip addition " << add_ok << "/"
       << add;
    return {a_ok == trials && n_ok == trials && inter_ok == inter && add_ok == add, os.str()};
}

// -- 10: two constructions of the reflected partition -------------------------

std::string reflect_key(const std::function<std::optional<ReflectedTerm>()>& f) {
    try {
        const auto t = f();
        if (!t) return "absent";
        return t->shape.to_string() + "@" + std::to_string(t->position);
    } catch (const std::invalid_argument&) {
        return "rejected";
    }
}

Outcome criterion10() {
    std::size_t compared = 0, present = 0, mismatches = 0;
    std::string first;
    for (auto kind : {StaircaseKind::symplectic, StaircaseKind::odd_orthogonal,
                      StaircaseKind::even_orthogonal}) {
        for (std::size_t n = 1; n <= 4; ++n) {
            const StaircaseDelta delta(kind, n);
            for (int size = 0; size <= 8; ++size) {
                for (const auto& mu : partitions_of(size, n)) {
                    for (int r = 1; r <= 10; ++r) {
                        for (std::size_t q = 1; q <= n; ++q) {
                            const auto a = reflect_key([&] { return mu_q(mu, delta, r, q); });
                            const auto b =
                                reflect_key([&] { return mu_q_combinatorial(mu, delta, r, q); });
                            if (a == "rejected" && b == "rejected") continue;
                            ++compared;
                            if (a != "absent" && a != "rejected") ++present;
                            if (a != b) {
                                ++mismatches;
                                if (first.empty()) {
                                    first = std::string(to_string(kind)) + " " + mu.to_string() +
                                            " r=" + std::to_string(r) + " q=" + std::to_string(q) +
                                            ": " + a + " vs " + b;
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    std::ostringstream os;
    os << compared << " cases (" << present << " present, " << compared - present
       << " absent), " << mismatches << " mismatches";
    if (!first.empty()) os << " (first: " << first << ")";
    return {mismatches == 0 && compared > 0, os.str()};
}

bool readme_has_note(const std::string& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str().find("Typo note (odd orthogonal example)") != std::string::npos;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"acceptance criteria"};
    std::vector<int> known;
    std::string readme = MNRULES_README_PATH;
    app.add_option("--known-deviation", known,
                   "criterion expected to fail for a documented reason");
    app.add_option("--readme", readme, "README checked by criterion 3");
    CLI11_PARSE(app, argc, argv);

    CharacterCache cache;
    std::vector<Criterion> criteria = {
        {1, "symplectic example", 1.0,
         [] {
             return expect_expansion({RuleKind::sp, {4, 3, 1}, 6, 3, 0},
                                     formal(SP, {{{5, 5, 4}, 1}, {{8, 5, 1}, -1},
                                                 {{10, 3, 1}, 1}, {{2}, 1}, {{4}, 1},
                                                 {{4, 3, 3}, -1}}));
         }},
        {2, "even orthogonal example", 1.0,
         [] {
             return expect_expansion({RuleKind::oe, {2, 1}, 3, 3, 0},
                                     formal(OE, {{{5, 1}, 1}, {{3, 3}, -1}, {{2, 2, 2}, -1},
                                                 {{}, -1}, {{2}, 1}}));
         }},
        {3, "odd orthogonal example, r = 2", 1.0,
         [&] {
             auto o = expect_expansion({RuleKind::oo, {2, 1}, 2, 3, 0},
                                       formal(OO, {{{4, 1}, 1}, {{2, 1, 1}, -1}}));
             const bool note = readme_has_note(readme);
             o.detail += note ? "; README typo note present" : "; README typo note MISSING";
             o.passed = o.passed && note;
             return o;
         }},
        {4, "orthosymplectic example and its remark", 1.0, criterion4},
        {5, "classical example and character displays", 0.0, criterion5},
        {6, "oracle route agreement", 60.0, criterion6},
        {7, "master identity sweep", 300.0, [&] { return criterion7(cache); }},
        {8, "lemma identities", 0.0, [&] { return criterion8(cache); }},
        {9, "corollary specializations", 0.0, criterion9},
        {10, "reflected partitions, two constructions", 0.0, criterion10},
    };

    int unexpected = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (c.limit_seconds > 0 && secs > c.limit_seconds) {
            o.passed = false;
            o.detail += "; over the time limit";
        }
        const bool is_known = std::find(known.begin(), known.end(), c.id) != known.end();
        if (o.passed == is_known) ++unexpected;
        std::cout << "criterion " << std::setw(2) << c.id << ": " << (o.passed ? "PASS" : "FAIL")
                  << "  " << std::fixed << std::setprecision(3) << secs << " s  " << c.title
                  << ": " << o.detail << (is_known && !o.passed ? "  [known deviation]" : "")
                  << std::endl;
    }
    return unexpected == 0 ? 0 : 1;
}
