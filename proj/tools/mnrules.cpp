// mnrules: expand | oracle | verify | golden
//
// exit codes: 0 ok, 1 identity or golden failure, 2 usage, 3 internal
// inconsistency (oracle routes disagree, unexpected exception).

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "mnrules/format.hpp"
#include "mnrules/golden.hpp"
#include "mnrules/rules.hpp"
#include "mnrules/strips.hpp"
#include "mnrules/sweep.hpp"

namespace {

using namespace mnr;

constexpr int kOk = 0;
constexpr int kFailure = 1;
constexpr int kUsage = 2;
constexpr int kInternal = 3;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Partition parse_partition_arg(const std::string& text) {
    try {
        return Partition::parse(text);
    } catch (const std::exception& e) {
        throw UsageError("bad partition '" + text + "': " + e.what());
    }
}

OutputFormat parse_format_arg(const std::string& text) {
    const auto f = parse_format(text);
    if (!f) throw UsageError("unknown format '" + text + "' (text, json, latex)");
    return *f;
}

// writes to --out when given, stdout otherwise
void emit(const std::string& out_path, const std::string& content) {
    if (out_path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream out(out_path, std::ios::binary | std::ios::trunc);
    out << content;
    if (!out) throw std::runtime_error("cannot write " + out_path);
}

struct ExpandArgs {
    std::string rule = "sp";
    std::string mu;
    int r = 1;
    std::size_t n = 1;
    std::size_t m = 0;
    bool m_given = false;
    std::string format = "text";
    std::string out;
    bool unmerged = false;
};

int cmd_expand(const ExpandArgs& a) {
    const auto rule = parse_rule(a.rule);
    if (!rule) throw UsageError("unknown rule '" + a.rule + "'");
    if (a.m_given && !uses_y(*rule)) throw UsageError("--m only applies to the hook and spo rules");
    RuleSelector sel{*rule, parse_partition_arg(a.mu), a.r, a.n, a.m};
    try {
        sel.validate();
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    const OutputFormat format = parse_format_arg(a.format);

    if (a.unmerged) {
        StaircaseKind kind;
        switch (sel.rule) {
        case RuleKind::sp: kind = StaircaseKind::symplectic; break;
        case RuleKind::oo: kind = StaircaseKind::odd_orthogonal; break;
        case RuleKind::oe: kind = StaircaseKind::even_orthogonal; break;
        default: throw UsageError("--unmerged applies to the sp, oo and oe rules");
        }
        if (format != OutputFormat::text) throw UsageError("--unmerged is text only");
        const RuleSums sums = weyl_rule_sums(kind, sel.mu, sel.r, sel.n);
        std::string text;
        for (auto [title, part] : {std::pair{"additions", &sums.additions},
                                   std::pair{"removals", &sums.removals},
                                   std::pair{"reflected", &sums.reflected}}) {
            MixedExpansion e;
            e.spo_terms = *part;
            std::string body = render_text({sel, e});
            text += std::string("[") + title + "] " + body;
        }
        emit(a.out, text);
        return kOk;
    }

    emit(a.out, render({sel, expand(sel)}, format));
    return kOk;
}

struct OracleArgs {
    std::string kind = "s";
    std::string lambda;
    std::string inner;
    std::size_t n = 1;
    std::size_t m = 0;
    std::string format = "text";
    std::string out;
};

int cmd_oracle(const OracleArgs& a) {
    const auto kind = parse_character_kind(a.kind);
    if (!kind) throw UsageError("unknown character '" + a.kind + "'");
    const Partition lambda = parse_partition_arg(a.lambda);
    const OutputFormat format = parse_format_arg(a.format);

    LaurentPoly value;
    switch (*kind) {
    case CharacterKind::skew_schur: {
        const Partition inner = parse_partition_arg(a.inner);
        if (!inner.contained_in(lambda)) throw UsageError("--inner is not inside --lambda");
        value = skew_schur(SkewShape(lambda, inner), a.n);
        break;
    }
    case CharacterKind::schur: {
        value = schur_tableaux(lambda, a.n, a.m);
        if (value != schur_bialternant(lambda, a.n, a.m)) {
            std::cerr << "internal: schur tableau and bialternant routes disagree\n";
            return kInternal;
        }
        break;
    }
    case CharacterKind::symplectic: {
        value = symplectic_weyl(lambda, a.n, a.m);
        if (value != symplectic_king(lambda, a.n, a.m)) {
            std::cerr << "internal: symplectic Weyl and King routes disagree\n";
            return kInternal;
        }
        break;
    }
    case CharacterKind::orthosymplectic: {
        value = orthosymplectic_definition(lambda, a.n, a.m);
        if (value != orthosymplectic_tableaux(lambda, a.n, a.m)) {
            std::cerr << "internal: spo definition and tableau routes disagree\n";
            return kInternal;
        }
        break;
    }
    default: value = character(*kind, lambda, a.n, a.m); break;
    }
    emit(a.out, render_poly(value, format));
    return kOk;
}

struct VerifyArgs {
    std::vector<std::string> rules;
    std::optional<int> max_size;
    std::optional<std::size_t> max_n;
    std::optional<std::size_t> max_m;
    std::optional<int> max_r;
    unsigned jobs = 0;
    std::string format = "text";
    std::string out;
};

std::string failure_record(const InstanceResult& r) {
    nlohmann::ordered_json j;
    j["rule"] = std::string(rule_name(r.selector.rule));
    j["mu"] = r.selector.mu.parts();
    j["r"] = r.selector.r;
    j["n"] = r.selector.n;
    j["m"] = r.selector.m;
    j["kind"] = r.internal_error ? "internal" : "mismatch";
    j["detail"] = r.detail;
    return j.dump();
}

int cmd_verify(const VerifyArgs& a) {
    SweepConfig config = SweepConfig::standard();
    if (!a.rules.empty()) {
        config.rules.clear();
        for (const auto& name : a.rules) {
            const auto rule = parse_rule(name);
            if (!rule) throw UsageError("unknown rule '" + name + "'");
            config.rules.push_back(*rule);
        }
    }
    // an explicit bound applies to every rule
    auto apply = [&](SweepBounds& b) {
        if (a.max_size) b.max_size = *a.max_size;
        if (a.max_n) b.max_n = *a.max_n;
        if (a.max_m) b.max_m = *a.max_m;
        if (a.max_r) b.max_r = *a.max_r;
    };
    apply(config.fallback);
    for (auto& [rule, b] : config.bounds) apply(b);
    config.jobs = a.jobs;
    const OutputFormat format = parse_format_arg(a.format);

    CharacterCache cache;
    const SweepReport report = run_sweep(config, cache);

    std::ostringstream os;
    if (format == OutputFormat::json) {
        nlohmann::ordered_json j;
        j["total"] = report.total;
        j["passed"] = report.passed;
        j["failed"] = report.failed;
        j["internal_errors"] = report.internal_errors;
        nlohmann::ordered_json per = nlohmann::ordered_json::object();
        for (const auto& [rule, count] : report.per_rule) per[std::string(rule_name(rule))] = count;
        j["instances_per_rule"] = per;
        j["first_failure"] = report.first_failure
                                 ? nlohmann::ordered_json::parse(failure_record(*report.first_failure))
                                 : nlohmann::ordered_json(nullptr);
        os << j.dump(2) << '\n';
    } else {
        for (const auto& [rule, count] : report.per_rule) {
            os << rule_name(rule) << ": " << count << " instances\n";
        }
        os << "total " << report.total << ", passed " << report.passed << ", failed "
           << report.failed << ", internal errors " << report.internal_errors << '\n';
        if (report.first_failure) {
            os << "first failure: " << report.first_failure->selector.describe() << '\n'
               << "record: " << failure_record(*report.first_failure) << '\n';
        }
    }
    emit(a.out, os.str());
    if (report.internal_errors) return kInternal;
    return report.failed ? kFailure : kOk;
}

struct GoldenArgs {
    std::string out;
    bool update = false;
};

std::filesystem::path golden_dir() {
    if (const char* env = std::getenv("MNRULES_GOLDEN_DIR"); env && *env) return env;
    return MNRULES_DEFAULT_GOLDEN_DIR;
}

int cmd_golden(const GoldenArgs& a) {
    if (!a.out.empty()) {
        write_golden(a.out);
        std::cout << "wrote " << golden_corpus().size() << " files to " << a.out << '\n';
        return kOk;
    }
    const auto dir = golden_dir();
    if (a.update) {
        write_golden(dir);
        std::cout << "updated " << dir.string() << '\n';
        return kOk;
    }
    const auto drift = check_golden(dir);
    for (const auto& d : drift) std::cout << d.diff;
    std::cout << (drift.empty() ? "golden: ok" : "golden: drift in " + std::to_string(drift.size()) +
                                                   " file(s)")
              << " (" << dir.string() << ")\n";
    return drift.empty() ? kOk : kFailure;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Murnaghan-Nakayama rules for symplectic, orthogonal and orthosymplectic "
                 "characters, with brute-force oracles"};
    app.require_subcommand(1);

    ExpandArgs ea;
    auto* expand_cmd = app.add_subcommand("expand", "expand p_r times a character");
    expand_cmd->add_option("--rule", ea.rule,
                           "classical, hook, sp, oo, oe, spo, pieri-h, pieri-e")
        ->required();
    expand_cmd->add_option("--mu,--lambda", ea.mu, "partition, e.g. 4,3,1 (0 or empty for none)")
        ->required();
    expand_cmd->add_option("--r", ea.r, "power sum index")->required();
    expand_cmd->add_option("--n", ea.n, "number of x-variables")->required();
    auto* m_opt = expand_cmd->add_option("--m", ea.m, "number of y-variables (hook, spo)");
    expand_cmd->add_option("--format", ea.format, "text, json or latex");
    expand_cmd->add_option("--out", ea.out, "write to a file instead of stdout");
    expand_cmd->add_flag("--unmerged", ea.unmerged, "print the three sums separately");

    OracleArgs oa;
    auto* oracle_cmd = app.add_subcommand("oracle", "evaluate a character as a Laurent polynomial");
    oracle_cmd->add_option("--char", oa.kind, "s, skew, sp, oo, oe, hs, spo")->required();
    oracle_cmd->add_option("--lambda,--mu", oa.lambda, "partition")->required();
    oracle_cmd->add_option("--inner", oa.inner, "inner partition for --char skew");
    oracle_cmd->add_option("--n", oa.n, "number of x-variables")->required();
    oracle_cmd->add_option("--m", oa.m, "number of y-variables");
    oracle_cmd->add_option("--format", oa.format, "text, json or latex");
    oracle_cmd->add_option("--out", oa.out, "write to a file instead of stdout");

    VerifyArgs va;
    auto* verify_cmd = app.add_subcommand("verify", "check every rule against the oracles");
    verify_cmd->add_option("--rule", va.rules, "restrict to these rules")->delimiter(',');
    verify_cmd->add_option("--max-size", va.max_size, "largest |mu|");
    verify_cmd->add_option("--max-n", va.max_n, "largest n");
    verify_cmd->add_option("--max-m", va.max_m, "largest m (hook, spo)");
    verify_cmd->add_option("--max-r", va.max_r, "largest r");
    verify_cmd->add_option("--jobs", va.jobs, "worker threads (0: all cores)");
    verify_cmd->add_option("--format", va.format, "text or json");
    verify_cmd->add_option("--out", va.out, "write the report to a file");

    GoldenArgs ga;
    auto* golden_cmd = app.add_subcommand("golden", "check or write the golden corpus");
    golden_cmd->add_option("--out", ga.out, "write the corpus into this directory");
    golden_cmd->add_flag("--update", ga.update, "overwrite the golden directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        ea.m_given = m_opt->count() > 0;
        if (*expand_cmd) return cmd_expand(ea);
        if (*oracle_cmd) return cmd_oracle(oa);
        if (*verify_cmd) return cmd_verify(va);
        if (*golden_cmd) return cmd_golden(ga);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kInternal;
    }
    return kUsage;
}
