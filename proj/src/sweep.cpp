#include "mnrules/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "mnrules/rules.hpp"

namespace mnr {

std::string_view rule_name(RuleKind rule) noexcept {
    switch (rule) {
    case RuleKind::classical: return "classical";
    case RuleKind::hook: return "hook";
    case RuleKind::sp: return "sp";
    case RuleKind::oo: return "oo";
    case RuleKind::oe: return "oe";
    case RuleKind::spo: return "spo";
    case RuleKind::pieri_h: return "pieri-h";
    case RuleKind::pieri_e: return "pieri-e";
    }
    return "?";
}

std::vector<RuleKind> all_rules() {
    return {RuleKind::classical, RuleKind::hook, RuleKind::sp,      RuleKind::oo,
            RuleKind::oe,        RuleKind::spo,  RuleKind::pieri_h, RuleKind::pieri_e};
}

std::optional<RuleKind> parse_rule(std::string_view text) {
    for (RuleKind k : all_rules()) {
        if (rule_name(k) == text) return k;
    }
    return std::nullopt;
}

bool uses_y(RuleKind rule) noexcept { return rule == RuleKind::hook || rule == RuleKind::spo; }

void RuleSelector::validate() const {
    const bool pieri = rule == RuleKind::pieri_h || rule == RuleKind::pieri_e;
    if (pieri ? r < 0 : r < 1) throw std::invalid_argument("--r out of range for this rule");
    if (n < 1) throw std::invalid_argument("--n must be at least 1");
    if (!uses_y(rule) && m != 0) {
        throw std::invalid_argument("--m only applies to the hook and spo rules");
    }
    if (rule != RuleKind::hook && mu.length() > n) {
        throw std::invalid_argument("partition " + mu.to_string() + " has more than n rows");
    }
}

std::string RuleSelector::describe() const {
    std::ostringstream os;
    os << "rule=" << rule_name(rule) << " mu=" << mu << " r=" << r << " n=" << n;
    if (uses_y(rule)) os << " m=" << m;
    return os.str();
}

MixedExpansion expand(const RuleSelector& sel) {
    sel.validate();
    MixedExpansion out;
    switch (sel.rule) {
    case RuleKind::classical: out.spo_terms = classical_mn(sel.mu, sel.r, sel.n); break;
    case RuleKind::hook: out.spo_terms = hook_mn(sel.mu, sel.r, sel.n, sel.m); break;
    case RuleKind::sp: out.spo_terms = symplectic_mn(sel.mu, sel.r, sel.n); break;
    case RuleKind::oo: out.spo_terms = odd_orthogonal_mn(sel.mu, sel.r, sel.n); break;
    case RuleKind::oe: out.spo_terms = even_orthogonal_mn(sel.mu, sel.r, sel.n); break;
    case RuleKind::spo: out = orthosymplectic_mn(sel.mu, sel.r, sel.n, sel.m); break;
    case RuleKind::pieri_h: out.spo_terms = pieri_h(sel.mu, sel.r, sel.n); break;
    case RuleKind::pieri_e: out.spo_terms = pieri_e(sel.mu, sel.r, sel.n); break;
    }
    return out;
}

LaurentPoly rule_lhs(const RuleSelector& sel, CharacterCache& cache) {
    sel.validate();
    const std::size_t n = sel.n;
    const std::size_t m = sel.m;
    auto ch = [&](CharacterKind k, const Partition& p) { return *cache.get(k, p, n, m); };
    switch (sel.rule) {
    case RuleKind::classical:
        return power_sum(sel.r, n, m) * ch(CharacterKind::schur, sel.mu);
    case RuleKind::hook:
        return super_power_sum(sel.r, n, m) * ch(CharacterKind::hook_schur, sel.mu);
    case RuleKind::sp:
        return power_sum_bar(sel.r, n, m) * ch(CharacterKind::symplectic, sel.mu);
    case RuleKind::oo:
        return power_sum_bar(sel.r, n, m) * ch(CharacterKind::odd_orthogonal, sel.mu);
    case RuleKind::oe:
        return power_sum_bar(sel.r, n, m) * ch(CharacterKind::even_orthogonal, sel.mu);
    case RuleKind::spo:
        return spo_power_sum(sel.r, n, m) * ch(CharacterKind::orthosymplectic, sel.mu);
    case RuleKind::pieri_h:
        return ch(CharacterKind::schur, Partition{std::vector<int>{sel.r}}) *
               ch(CharacterKind::schur, sel.mu);
    case RuleKind::pieri_e:
        return ch(CharacterKind::schur, Partition(std::vector<int>(sel.r, 1))) *
               ch(CharacterKind::schur, sel.mu);
    }
    throw std::logic_error("unknown rule");
}

SweepConfig SweepConfig::standard() {
    SweepConfig c;
    c.fallback = SweepBounds{6, 3, 2, 6};
    c.bounds[RuleKind::hook] = SweepBounds{5, 2, 2, 4};
    c.bounds[RuleKind::spo] = SweepBounds{5, 2, 2, 4};
    return c;
}

SweepBounds SweepConfig::bounds_for(RuleKind rule) const {
    auto it = bounds.find(rule);
    return it == bounds.end() ? fallback : it->second;
}

std::vector<RuleSelector> sweep_instances(const SweepConfig& config) {
    std::vector<RuleSelector> out;
    for (RuleKind rule : config.rules) {
        const SweepBounds b = config.bounds_for(rule);
        const std::size_t m_lo = uses_y(rule) ? 1 : 0;
        const std::size_t m_hi = uses_y(rule) ? b.max_m : 0;
        for (std::size_t n = 1; n <= b.max_n; ++n) {
            for (std::size_t m = m_lo; m <= m_hi; ++m) {
                for (int size = 0; size <= b.max_size; ++size) {
                    // the spo rule is stated for l(lambda) <= n; hook takes any lambda
                    const auto shapes = rule == RuleKind::hook ? partitions_of(size)
                                                               : partitions_of(size, n);
                    for (const auto& mu : shapes) {
                        for (int r = 1; r <= b.max_r; ++r) {
                            out.push_back(RuleSelector{rule, mu, r, n, m});
                        }
                    }
                }
            }
        }
    }
    return out;
}

InstanceResult check_instance(const RuleSelector& sel, CharacterCache& cache) {
    InstanceResult res{sel, false, false, {}};
    try {
        const LaurentPoly lhs = rule_lhs(sel, cache);
        const LaurentPoly rhs = evaluate(expand(sel), sel.n, sel.m, cache);
        if (lhs == rhs) {
            res.passed = true;
        } else {
            res.detail = "lhs - rhs = " + (lhs - rhs).to_string();
        }
    } catch (const std::exception& e) {
        res.internal_error = true;
        res.detail = e.what();
    }
    return res;
}

SweepReport run_sweep(const SweepConfig& config, CharacterCache& cache) {
    const auto instances = sweep_instances(config);
    std::vector<InstanceResult> results(instances.size());

    unsigned jobs = config.jobs != 0 ? config.jobs : std::thread::hardware_concurrency();
    jobs = std::clamp<unsigned>(jobs, 1, static_cast<unsigned>(std::max<std::size_t>(instances.size(), 1)));

    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < instances.size(); i = next++) {
            results[i] = check_instance(instances[i], cache);
        }
    };
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(jobs);
        for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
    }

    SweepReport report;
    report.total = results.size();
    for (const auto& r : results) {
        ++report.per_rule[r.selector.rule];
        if (r.passed) {
            ++report.passed;
            continue;
        }
        ++(r.internal_error ? report.internal_errors : report.failed);
        if (!report.first_failure) report.first_failure = r;
    }
    return report;
}

} // namespace mnr
