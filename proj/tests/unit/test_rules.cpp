#include <doctest.h>

#include "mnrules/rules.hpp"
#include "mnrules/sweep.hpp"

using namespace mnr;

namespace {

using Expected = std::vector<std::tuple<CharacterKind, Partition, Rational>>;

FormalExpansion make(const Expected& terms) {
    FormalExpansion e;
    for (const auto& [k, p, c] : terms) e.add(k, p, c);
    return e;
}

constexpr auto S = CharacterKind::schur;
constexpr auto SP = CharacterKind::symplectic;
constexpr auto OO = CharacterKind::odd_orthogonal;
constexpr auto OE = CharacterKind::even_orthogonal;
constexpr auto HS = CharacterKind::hook_schur;
constexpr auto SPO = CharacterKind::orthosymplectic;

// applies a Schur-label operator to every term of a Schur expansion
template <class Op>
FormalExpansion apply(const FormalExpansion& e, Op op) {
    FormalExpansion out;
    for (const auto& [label, c] : e.terms()) {
        auto part = op(label.partition);
        part *= c;
        out += part;
    }
    return out;
}

bool has_mixed(const MixedExpansion& e, const Partition& sp, const SkewShape& y, int sign) {
    for (const auto& t : e.mixed_terms) {
        if (t.sp_part == sp && t.y_shape() == y && t.coeff == Rational(sign)) return true;
    }
    return false;
}

} // namespace

TEST_CASE("classical rule and Pieri") {
    CHECK(classical_mn({3, 1}, 4, 6) == make({{S, {7, 1}, 1},
                                              {S, {4, 4}, -1},
                                              {S, {3, 3, 2}, -1},
                                              {S, {3, 2, 2, 1}, 1},
                                              {S, {3, 1, 1, 1, 1, 1}, -1}}));
    // row bound drops the tall strips
    CHECK(classical_mn({3, 1}, 4, 2) == make({{S, {7, 1}, 1}, {S, {4, 4}, -1}}));
    CHECK(pieri_h({1}, 1, 2) == make({{S, {2}, 1}, {S, {1, 1}, 1}}));
    CHECK(pieri_e({1}, 2, 3) == make({{S, {2, 1}, 1}, {S, {1, 1, 1}, 1}}));
    CHECK(pieri_h({2}, 0, 1) == make({{S, {2}, 1}}));
}

TEST_CASE("perp operators") {
    // (3,1)/(2) is disconnected, (3,1)/(1,1) a horizontal domino
    CHECK(p_perp({3, 1}, 2) == make({{S, {1, 1}, 1}}));
    CHECK(p_perp({2, 2}, 2) == make({{S, {2}, 1}, {S, {1, 1}, -1}}));
    CHECK(e_perp({2, 1}, 1) == make({{S, {2}, 1}, {S, {1, 1}, 1}}));
    CHECK(e_perp({1, 1}, 2) == make({{S, {}, 1}}));
    CHECK(p_perp({2}, 3).empty());

    // p_r^perp e_s^perp s_lambda = e_s^perp p_r^perp s_lambda
    for (int size = 0; size <= 6; ++size) {
        for (const auto& lambda : partitions_of(size)) {
            for (int r = 1; r <= size; ++r) {
                for (int s = 0; s <= size - r; ++s) {
                    CAPTURE(lambda.to_string());
                    FormalExpansion one;
                    one.add(S, lambda, 1);
                    const auto pe = apply(apply(one, [&](const Partition& p) { return e_perp(p, s); }),
                                          [&](const Partition& p) { return p_perp(p, r); });
                    const auto ep = apply(apply(one, [&](const Partition& p) { return p_perp(p, r); }),
                                          [&](const Partition& p) { return e_perp(p, s); });
                    CHECK(pe == ep);
                }
            }
        }
    }
}

TEST_CASE("hook rule") {
    CHECK(hook_mn({1}, 1, 1, 1) == make({{HS, {2}, 1}, {HS, {1, 1}, 1}}));
    CHECK(hook_mn({}, 1, 1, 1) == make({{HS, {1}, 1}}));
    // unbounded rows: same signed shapes as the classical rule
    const auto classical = classical_mn({3, 1}, 4, 6);
    FormalExpansion strips_p4;
    for (const auto& [label, c] : classical.terms()) strips_p4.add(HS, label.partition, c);
    CHECK(hook_mn({3, 1}, 4, 1, 1, true) == strips_p4);
    // (3,1,1,1,1,1) has lambda_2 = 1 <= m, (3,3,2) has lambda_2 = 3 > 1
    const auto trimmed = hook_mn({3, 1}, 4, 1, 1);
    CHECK(trimmed.coefficient(HS, {3, 1, 1, 1, 1, 1}) == -1);
    CHECK(trimmed.coefficient(HS, {3, 3, 2}) == 0);
}

TEST_CASE("symplectic and orthogonal examples") {
    CHECK(symplectic_mn({4, 3, 1}, 6, 3) == make({{SP, {5, 5, 4}, 1},
                                                  {SP, {8, 5, 1}, -1},
                                                  {SP, {10, 3, 1}, 1},
                                                  {SP, {2}, 1},
                                                  {SP, {4}, 1},
                                                  {SP, {4, 3, 3}, -1}}));
    CHECK(symplectic_mn({1}, 1, 1) == make({{SP, {2}, 1}, {SP, {}, 1}}));
    CHECK(odd_orthogonal_mn({2, 1}, 2, 3) == make({{OO, {4, 1}, 1}, {OO, {2, 1, 1}, -1}}));

    const auto sums = weyl_rule_sums(StaircaseKind::even_orthogonal, {2, 1}, 3, 3);
    CHECK(sums.additions.coefficient(OE, {2, 2, 2}) == Rational(-1, 2));
    CHECK(sums.reflected.coefficient(OE, {2, 2, 2}) == Rational(-1, 2));
    CHECK(sums.removals == make({{OE, {}, -1}}));
    CHECK(sums.merged() == make({{OE, {5, 1}, 1},
                                 {OE, {3, 3}, -1},
                                 {OE, {2, 2, 2}, -1},
                                 {OE, {}, -1},
                                 {OE, {2}, 1}}));
    CHECK(basis_of(StaircaseKind::odd_orthogonal) == OO);
    CHECK_THROWS(weyl_rule_sums(StaircaseKind::symplectic, {1, 1, 1}, 1, 2));
}

TEST_CASE("orthosymplectic examples") {
    SUBCASE("one mixed term, lambda = (1)") {
        const auto e = orthosymplectic_mn({1}, 3, 2, 1);
        CHECK(e.spo_terms == make({{SPO, {4}, 1}, {SPO, {2, 2}, -1}, {SPO, {1, 1, 1, 1}, 1}}));
        REQUIRE(e.mixed_terms.size() == 1);
        // s_{(1)/(1)}(Y) = 1
        CHECK(has_mixed(e, {1, 1}, SkewShape({1}, {1}), -1));
    }
    SUBCASE("lambda = (2,2), r = 3") {
        const auto e = orthosymplectic_mn({2, 2}, 3, 2, 2);
        CHECK(e.spo_terms == make({{SPO, {5, 2}, 1},
                                   {SPO, {4, 3}, -1},
                                   {SPO, {2, 2, 2, 1}, -1},
                                   {SPO, {2, 2, 1, 1, 1}, 1},
                                   // (2,2)/(1) is a border 3-strip of height 1
                                   {SPO, {1}, -1}}));
        CHECK(e.mixed_terms.size() == 4);
        CHECK(has_mixed(e, {1, 1}, SkewShape({2, 2}, {1}), -1));
        CHECK(has_mixed(e, {2, 1}, SkewShape({2, 2}, {1, 1}), -1));
        CHECK(has_mixed(e, {1}, SkewShape({2, 2}, {2}), -1));
        CHECK(has_mixed(e, {2}, SkewShape({2, 2}, {2, 1}), -1));
    }
    SUBCASE("m = 0 reduces to the symplectic rule") {
        const auto e = orthosymplectic_mn({2, 1}, 3, 2, 0);
        FormalExpansion sp;
        for (const auto& [label, c] : e.spo_terms.terms()) sp.add(SP, label.partition, c);
        for (const auto& t : e.mixed_terms) {
            CHECK(t.skew_outer == t.skew_inner);
            sp.add(SP, t.sp_part, t.coeff);
        }
        CHECK(sp == symplectic_mn({2, 1}, 3, 2));
    }
}

TEST_CASE("third sum vanishes when mu_n + 1 >= r") {
    for (std::size_t n = 1; n <= 3; ++n) {
        for (int size = 0; size <= 8; ++size) {
            for (const auto& mu : partitions_of(size, n)) {
                if (mu.length() != n) continue;
                for (int r = 1; r <= mu.part(n) + 1; ++r) {
                    CAPTURE(mu.to_string());
                    CHECK(weyl_rule_sums(StaircaseKind::symplectic, mu, r, n).reflected.empty());
                }
            }
        }
    }
}

TEST_CASE("mixed terms vanish when lambda_n + 1 >= m + r") {
    for (std::size_t n = 1; n <= 2; ++n) {
        for (std::size_t m = 1; m <= 2; ++m) {
            for (int size = 0; size <= 7; ++size) {
                for (const auto& lambda : partitions_of(size, n)) {
                    for (int r = 1; r + static_cast<int>(m) <= lambda.part(n) + 1; ++r) {
                        CAPTURE(lambda.to_string());
                        CHECK(orthosymplectic_mn(lambda, r, n, m).mixed_terms.empty());
                    }
                }
            }
        }
    }
}

TEST_CASE("mixed expansion merging") {
    MixedExpansion e;
    e.add_mixed({{1}, {2}, {1}, 1});
    e.add_mixed({{1}, {2}, {1}, Rational(1, 2)});
    REQUIRE(e.mixed_terms.size() == 1);
    CHECK(e.mixed_terms[0].coeff == Rational(3, 2));
    e.add_mixed({{1}, {2}, {1}, Rational(-3, 2)});
    CHECK(e.mixed_terms.empty());
}

TEST_CASE("lemma helpers") {
    CharacterCache cache;
    auto agree = [&](const SidePair& p) { return p.lhs == p.rhs; };
    CHECK(agree(interchange_sides({2, 2}, 3, 1, 2, 1, cache)));
    CHECK(agree(interchange_sides({2, 1}, 5, 1, 2, 1, cache)));
    CHECK(interchange_sides({2, 1}, 5, 1, 2, 1, cache).lhs.is_zero());
    CHECK(agree(add_lemma_sides({1}, 2, 1, 1, cache)));
    CHECK(agree(add_lemma_sides({2, 1}, 3, 2, 1, cache)));
    const auto base = add_lemma_sides({}, 1, 1, 1, cache);
    CHECK(base.rhs == orthosymplectic_char({1}, 1, 1));
    CHECK(agree(base));

    for (std::size_t n = 1; n <= 2; ++n) {
        for (std::size_t m = 1; m <= 2; ++m) {
            for (int size = 0; size <= 4; ++size) {
                for (const auto& lambda : partitions_of(size, n)) {
                    for (int r = 1; r <= 3; ++r) {
                        CAPTURE(lambda.to_string());
                        CHECK(agree(add_lemma_sides(lambda, r, n, m, cache)));
                        for (int s = 0; s <= 2; ++s) {
                            CHECK(agree(interchange_sides(lambda, r, s, n, m, cache)));
                        }
                    }
                }
            }
        }
    }
}

TEST_CASE("selectors and sweep plumbing") {
    CHECK(parse_rule("pieri-h") == RuleKind::pieri_h);
    CHECK(rule_name(RuleKind::pieri_e) == "pieri-e");
    CHECK_FALSE(parse_rule("nope").has_value());
    CHECK(uses_y(RuleKind::spo));
    CHECK_FALSE(uses_y(RuleKind::sp));

    CHECK_THROWS(RuleSelector{RuleKind::sp, {1}, 1, 1, 1}.validate());  // m on a rule without y
    CHECK_THROWS(RuleSelector{RuleKind::sp, {1, 1}, 1, 1, 0}.validate());
    CHECK_THROWS(RuleSelector{RuleKind::sp, {1}, 0, 1, 0}.validate());
    CHECK_NOTHROW(RuleSelector{RuleKind::hook, {1, 1, 1}, 2, 1, 1}.validate());
    CHECK_NOTHROW(RuleSelector{RuleKind::pieri_h, {1}, 0, 1, 0}.validate());

    CharacterCache cache;
    const RuleSelector sel{RuleKind::oe, {1}, 1, 2, 0};
    CHECK(check_instance(sel, cache).passed);
    CHECK(evaluate(expand(sel), 2, 0, cache) == rule_lhs(sel, cache));

    SweepConfig small;
    small.fallback = {4, 2, 1, 3};
    small.jobs = 1;
    const auto a = run_sweep(small, cache);
    small.jobs = 4;
    CharacterCache fresh;
    const auto b = run_sweep(small, fresh);
    CHECK(a.ok());
    CHECK(a.total == sweep_instances(small).size());
    CHECK(a.total == b.total);
    CHECK(a.per_rule == b.per_rule);
    CHECK(SweepConfig::standard().bounds_for(RuleKind::spo).max_size == 5);
}
