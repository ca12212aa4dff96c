#ifndef MNRULES_SWEEP_HPP
#define MNRULES_SWEEP_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mnrules/expansion.hpp"
#include "mnrules/partition.hpp"

namespace mnr {

enum class RuleKind { classical, hook, sp, oo, oe, spo, pieri_h, pieri_e };

/// CLI spelling: classical, hook, sp, oo, oe, spo, pieri-h, pieri-e.
std::string_view rule_name(RuleKind rule) noexcept;
std::optional<RuleKind> parse_rule(std::string_view text);
std::vector<RuleKind> all_rules();
/// hook and spo live in the ring with y-variables.
bool uses_y(RuleKind rule) noexcept;

struct RuleSelector {
    RuleKind rule = RuleKind::sp;
    Partition mu;
    int r = 1;
    std::size_t n = 1;
    std::size_t m = 0;

    /// Throws std::invalid_argument when the arguments do not fit the rule
    /// (m given to a rule without y-variables, too many rows, r out of range).
    void validate() const;
    [[nodiscard]] std::string describe() const;
    friend bool operator==(const RuleSelector&, const RuleSelector&) = default;
};

/// The expansion a selector produces. Rules without a mixed part leave
/// mixed_terms empty; hook/classical/pieri terms sit in spo_terms too, under
/// their own basis labels.
MixedExpansion expand(const RuleSelector& sel);

/// Left side of the rule's identity: the power sum (or h_r, e_r) times the
/// character.
LaurentPoly rule_lhs(const RuleSelector& sel, CharacterCache& cache);

struct SweepBounds {
    int max_size = 6;
    std::size_t max_n = 3;
    std::size_t max_m = 2;
    int max_r = 6;
};

struct SweepConfig {
    std::vector<RuleKind> rules = all_rules();
    /// Per-rule bounds; rules missing here use `fallback`.
    std::map<RuleKind, SweepBounds> bounds;
    SweepBounds fallback;
    unsigned jobs = 0; // 0: hardware concurrency

    /// |mu| <= 6, n <= 3, r <= 6; hook and spo capped at |lambda| <= 5,
    /// n <= 2, m in {1, 2}, r <= 4.
    static SweepConfig standard();
    [[nodiscard]] SweepBounds bounds_for(RuleKind rule) const;
};

/// Every instance of the config in a fixed order.
std::vector<RuleSelector> sweep_instances(const SweepConfig& config);

struct InstanceResult {
    RuleSelector selector;
    bool passed = false;
    bool internal_error = false;
    std::string detail; // empty on success
};

struct SweepReport {
    std::size_t total = 0;
    std::size_t passed = 0;
    std::size_t failed = 0;
    std::size_t internal_errors = 0;
    std::map<RuleKind, std::size_t> per_rule;
    std::optional<InstanceResult> first_failure;

    [[nodiscard]] bool ok() const noexcept { return failed == 0 && internal_errors == 0; }
};

InstanceResult check_instance(const RuleSelector& sel, CharacterCache& cache);

/// Runs every instance on a bounded worker pool. The report does not depend
/// on the number of workers.
SweepReport run_sweep(const SweepConfig& config, CharacterCache& cache);

} // namespace mnr

#endif
