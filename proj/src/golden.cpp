#include "mnrules/golden.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <sstream>

#include "mnrules/format.hpp"
#include "mnrules/staircase.hpp"

namespace mnr {

namespace {

using Json = nlohmann::ordered_json;

GoldenFile expansion_file(std::string name, RuleSelector sel) {
    return {std::move(name), render_json({sel, expand(sel)})};
}

GoldenFile oracle_file(std::string name, CharacterKind kind, const Partition& lambda,
                       std::size_t n, std::size_t m) {
    Json j;
    j["char"] = std::string(short_name(kind));
    j["lambda"] = lambda.parts();
    j["n"] = n;
    j["m"] = m;
    j["terms"] = Json::parse(render_poly_json(character(kind, lambda, n, m)));
    return {std::move(name), j.dump(2) + "\n"};
}

GoldenFile reflection_file(std::string name, StaircaseKind kind, const Partition& mu,
                           std::size_t n, int r, std::size_t q) {
    const StaircaseDelta delta(kind, n);
    Json j;
    j["staircase"] = std::string(to_string(kind));
    j["mu"] = mu.parts();
    j["n"] = n;
    j["r"] = r;
    j["q"] = q;
    if (const auto term = mu_q(mu, delta, r, q)) {
        j["mu_q"] = term->shape.parts();
        j["p"] = term->position;
    } else {
        j["mu_q"] = nullptr;
    }
    return {std::move(name), j.dump(2) + "\n"};
}

std::vector<std::string> split_lines(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream is(s);
    for (std::string line; std::getline(is, line);) out.push_back(line);
    return out;
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

} // namespace

std::vector<GoldenFile> golden_corpus() {
    using R = RuleKind;
    std::vector<GoldenFile> out;
    out.push_back(expansion_file("classical_p4_s31.json", {R::classical, {3, 1}, 4, 6, 0}));
    out.push_back(expansion_file("sp_p6_sp431.json", {R::sp, {4, 3, 1}, 6, 3, 0}));
    out.push_back(expansion_file("oo_p2_oo21.json", {R::oo, {2, 1}, 2, 3, 0}));
    out.push_back(expansion_file("oe_p3_oe21.json", {R::oe, {2, 1}, 3, 3, 0}));
    out.push_back(expansion_file("spo_p3_spo22.json", {R::spo, {2, 2}, 3, 2, 2}));
    out.push_back(expansion_file("spo_p3_spo1.json", {R::spo, {1}, 3, 2, 1}));
    out.push_back(reflection_file("reflection_321_r9_q3.json", StaircaseKind::symplectic,
                                  {3, 2, 1}, 4, 9, 3));
    out.push_back(oracle_file("sp11_n2.json", CharacterKind::symplectic, {1, 1}, 2, 0));
    out.push_back(oracle_file("spo11_n2_m1.json", CharacterKind::orthosymplectic, {1, 1}, 2, 1));
    return out;
}

std::vector<GoldenDrift> check_golden(const std::filesystem::path& dir) {
    std::vector<GoldenDrift> drift;
    for (const auto& f : golden_corpus()) {
        const auto path = dir / f.name;
        if (!std::filesystem::exists(path)) {
            drift.push_back({f.name, "missing: " + path.string() + "\n"});
            continue;
        }
        const std::string expected = slurp(path);
        if (expected != f.content) {
            drift.push_back({f.name, unified_diff(expected, f.content, "golden/" + f.name,
                                                  "computed/" + f.name)});
        }
    }
    return drift;
}

void write_golden(const std::filesystem::path& dir) {
    std::filesystem::create_directories(dir);
    for (const auto& f : golden_corpus()) {
        std::ofstream out(dir / f.name, std::ios::binary | std::ios::trunc);
        out << f.content;
        if (!out) throw std::runtime_error("cannot write " + (dir / f.name).string());
    }
}

std::string unified_diff(const std::string& expected, const std::string& actual,
                         const std::string& expected_label, const std::string& actual_label) {
    const auto a = split_lines(expected);
    const auto b = split_lines(actual);
    // LCS table; golden files are a few hundred lines at most
    std::vector<std::vector<int>> lcs(a.size() + 1, std::vector<int>(b.size() + 1, 0));
    for (std::size_t i = a.size(); i-- > 0;) {
        for (std::size_t j = b.size(); j-- > 0;) {
            lcs[i][j] = a[i] == b[j] ? lcs[i + 1][j + 1] + 1
                                     : std::max(lcs[i + 1][j], lcs[i][j + 1]);
        }
    }
    struct Op {
        char tag;
        std::size_t ai, bi;
    };
    std::vector<Op> ops;
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (i < a.size() && j < b.size() && a[i] == b[j]) {
            ops.push_back({' ', i++, j++});
        } else if (i < a.size() && (j == b.size() || lcs[i + 1][j] >= lcs[i][j + 1])) {
            ops.push_back({'-', i++, j});
        } else {
            ops.push_back({'+', i, j++});
        }
    }

    std::ostringstream os;
    os << "--- " << expected_label << "\n+++ " << actual_label << "\n";
    constexpr std::size_t ctx = 3;
    std::size_t k = 0;
    while (k < ops.size()) {
        if (ops[k].tag == ' ') {
            ++k;
            continue;
        }
        // grow a hunk until there are more than 2*ctx unchanged lines in a row
        std::size_t start = k >= ctx ? k - ctx : 0;
        std::size_t end = k;
        std::size_t quiet = 0;
        for (std::size_t t = k; t < ops.size(); ++t) {
            if (ops[t].tag == ' ') {
                if (++quiet > 2 * ctx) break;
            } else {
                quiet = 0;
                end = t;
            }
        }
        end = std::min(ops.size(), end + ctx + 1);
        std::size_t a0 = ops[start].ai, b0 = ops[start].bi, na = 0, nb = 0;
        for (std::size_t t = start; t < end; ++t) {
            if (ops[t].tag != '+') ++na;
            if (ops[t].tag != '-') ++nb;
        }
        os << "@@ -" << a0 + 1 << ',' << na << " +" << b0 + 1 << ',' << nb << " @@\n";
        for (std::size_t t = start; t < end; ++t) {
            const auto& op = ops[t];
            os << op.tag << (op.tag == '+' ? b[op.bi] : a[op.ai]) << '\n';
        }
        k = end;
    }
    return os.str();
}

} // namespace mnr
