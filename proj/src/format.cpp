#include "mnrules/format.hpp"

#include <json.hpp>

#include <sstream>

namespace mnr {

using Json = nlohmann::ordered_json;

std::optional<OutputFormat> parse_format(std::string_view text) {
    if (text == "text") return OutputFormat::text;
    if (text == "json") return OutputFormat::json;
    if (text == "latex") return OutputFormat::latex;
    return std::nullopt;
}

namespace {

// "+ " / "- " for unit coefficients, otherwise the signed fraction
std::string signed_coeff(const Rational& c, bool first) {
    const bool neg = sgn(c) < 0;
    const Rational a = abs(c);
    std::string out = neg ? "- " : (first ? "" : "+ ");
    if (first && neg) out = "-";
    if (a != 1) out += to_string(a) + " ";
    return out;
}

std::string latex_coeff(const Rational& c, bool first) {
    const bool neg = sgn(c) < 0;
    const Rational a = abs(c);
    std::string out = neg ? (first ? "-" : " - ") : (first ? "" : " + ");
    if (a.get_den() != 1) {
        out += "\\tfrac{" + a.get_num().get_str() + "}{" + a.get_den().get_str() + "}";
    } else if (a != 1) {
        out += a.get_num().get_str();
    }
    return out;
}

std::string latex_partition(const Partition& p) {
    return p.empty() ? std::string("\\emptyset") : p.to_string();
}

std::string latex_basis(CharacterKind kind) {
    switch (kind) {
    case CharacterKind::schur:
    case CharacterKind::skew_schur: return "s";
    case CharacterKind::hook_schur: return "\\mathrm{hs}";
    case CharacterKind::symplectic: return "\\mathrm{sp}";
    case CharacterKind::odd_orthogonal: return "\\mathrm{oo}";
    case CharacterKind::even_orthogonal: return "\\mathrm{oe}";
    case CharacterKind::orthosymplectic: return "\\mathrm{spo}";
    }
    return "?";
}

std::string latex_lhs(const RuleSelector& sel) {
    const std::string r = std::to_string(sel.r);
    const std::string mu = latex_partition(sel.mu);
    switch (sel.rule) {
    case RuleKind::classical: return "p_{" + r + "}\\, s_{" + mu + "}";
    case RuleKind::hook: return "P_{" + r + "}(X/Y)\\, \\mathrm{hs}_{" + mu + "}(X/Y)";
    case RuleKind::sp: return "\\overline{p}_{" + r + "}\\, \\mathrm{sp}_{" + mu + "}";
    case RuleKind::oo: return "\\overline{p}_{" + r + "}\\, \\mathrm{oo}_{" + mu + "}";
    case RuleKind::oe: return "\\overline{p}_{" + r + "}\\, \\mathrm{oe}_{" + mu + "}";
    case RuleKind::spo:
        return "P_{" + r + "}(X,\\overline{X}/Y)\\, \\mathrm{spo}_{" + mu + "}(X/Y)";
    case RuleKind::pieri_h: return "h_{" + r + "}\\, s_{" + mu + "}";
    case RuleKind::pieri_e: return "e_{" + r + "}\\, s_{" + mu + "}";
    }
    return "?";
}

Json partition_json(const Partition& p) { return Json(p.parts()); }

Partition partition_from(const Json& j) {
    if (!j.is_array()) throw format_error("partition must be an array");
    std::vector<int> parts;
    for (const auto& v : j) {
        if (!v.is_number_integer() || v.get<long>() < 1) {
            throw format_error("partition entries must be positive integers");
        }
        parts.push_back(v.get<int>());
    }
    try {
        return Partition(parts);
    } catch (const std::exception& e) {
        throw format_error(e.what());
    }
}

Rational rational_from(const Json& j) {
    if (!j.is_string()) throw format_error("coefficient must be a string");
    try {
        return parse_rational(j.get<std::string>());
    } catch (const std::exception& e) {
        throw format_error(e.what());
    }
}

std::string halved(int doubled) {
    return doubled % 2 == 0 ? std::to_string(doubled / 2) : std::to_string(doubled) + "/2";
}

} // namespace

std::string render_text(const ExpansionDocument& doc) {
    const auto& sel = doc.selector;
    std::ostringstream os;
    os << rule_name(sel.rule) << " n=" << sel.n;
    if (uses_y(sel.rule)) os << " m=" << sel.m;
    os << " r=" << sel.r << " mu=" << sel.mu << '\n';
    bool first = true;
    for (const auto& [label, c] : doc.expansion.spo_terms.terms()) {
        os << signed_coeff(c, first) << short_name(label.basis) << label.partition << '\n';
        first = false;
    }
    for (const auto& t : doc.expansion.mixed_terms) {
        const SkewShape y = t.y_shape();
        os << signed_coeff(t.coeff, first) << "sp" << t.sp_part << "(X) * s" << y.outer() << '/'
           << y.inner() << "(Y)\n";
        first = false;
    }
    if (first) os << "0\n";
    return os.str();
}

std::string render_json(const ExpansionDocument& doc) {
    const auto& sel = doc.selector;
    Json j;
    j["rule"] = std::string(rule_name(sel.rule));
    j["n"] = sel.n;
    j["m"] = sel.m;
    j["r"] = sel.r;
    j["mu"] = partition_json(sel.mu);
    Json terms = Json::array();
    for (const auto& [label, c] : doc.expansion.spo_terms.terms()) {
        terms.push_back({{"basis", std::string(short_name(label.basis))},
                         {"partition", partition_json(label.partition)},
                         {"coeff", to_string(c)}});
    }
    j["terms"] = std::move(terms);
    Json mixed = Json::array();
    for (const auto& t : doc.expansion.mixed_terms) {
        mixed.push_back({{"sp", partition_json(t.sp_part)},
                         {"skew_outer", partition_json(t.skew_outer)},
                         {"skew_inner", partition_json(t.skew_inner)},
                         {"coeff", to_string(t.coeff)}});
    }
    j["mixed_terms"] = std::move(mixed);
    return j.dump(2) + "\n";
}

std::string render_latex(const ExpansionDocument& doc) {
    std::string out = latex_lhs(doc.selector) + " = ";
    bool first = true;
    for (const auto& [label, c] : doc.expansion.spo_terms.terms()) {
        out += latex_coeff(c, first) + latex_basis(label.basis) + "_{" +
               latex_partition(label.partition) + "}";
        first = false;
    }
    for (const auto& t : doc.expansion.mixed_terms) {
        const SkewShape y = t.y_shape();
        out += latex_coeff(t.coeff, first) + "\\mathrm{sp}_{" + latex_partition(t.sp_part) +
               "}(X)\\, s_{" + latex_partition(y.outer()) + "/" + latex_partition(y.inner()) +
               "}(Y)";
        first = false;
    }
    if (first) out += "0";
    return out + "\n";
}

std::string render(const ExpansionDocument& doc, OutputFormat format) {
    switch (format) {
    case OutputFormat::text: return render_text(doc);
    case OutputFormat::json: return render_json(doc);
    case OutputFormat::latex: return render_latex(doc);
    }
    return {};
}

ExpansionDocument parse_expansion_json(std::string_view text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw format_error(e.what());
    }
    if (!j.is_object()) throw format_error("expansion document must be an object");
    try {
        ExpansionDocument doc;
        const auto rule = parse_rule(j.at("rule").get<std::string>());
        if (!rule) throw format_error("unknown rule");
        doc.selector.rule = *rule;
        doc.selector.n = j.at("n").get<std::size_t>();
        doc.selector.m = j.at("m").get<std::size_t>();
        doc.selector.r = j.at("r").get<int>();
        doc.selector.mu = partition_from(j.at("mu"));
        for (const auto& t : j.at("terms")) {
            const auto basis = parse_character_kind(t.at("basis").get<std::string>());
            if (!basis) throw format_error("unknown basis");
            const Rational c = rational_from(t.at("coeff"));
            if (sgn(c) == 0) throw format_error("zero coefficient in expansion");
            doc.expansion.spo_terms.add(*basis, partition_from(t.at("partition")), c);
        }
        for (const auto& t : j.at("mixed_terms")) {
            doc.expansion.add_mixed({partition_from(t.at("sp")), partition_from(t.at("skew_outer")),
                                     partition_from(t.at("skew_inner")),
                                     rational_from(t.at("coeff"))});
        }
        return doc;
    } catch (const Json::exception& e) {
        throw format_error(e.what());
    }
}

std::string render_poly_text(const LaurentPoly& p) { return p.to_string() + "\n"; }

std::string render_poly_json(const LaurentPoly& p) {
    Json arr = Json::array();
    for (const auto& [mono, c] : p.sorted_terms()) {
        Json xs = Json::array();
        Json ys = Json::array();
        for (std::size_t i = 0; i < p.num_x(); ++i) xs.push_back(halved(mono.exps[i]));
        for (std::size_t j = 0; j < p.num_y(); ++j) {
            ys.push_back(std::to_string(mono.exps[p.num_x() + j]));
        }
        arr.push_back({{"x_exponents", std::move(xs)},
                       {"y_exponents", std::move(ys)},
                       {"coeff", to_string(c)}});
    }
    return arr.dump(2) + "\n";
}

std::string render_poly_latex(const LaurentPoly& p) {
    if (p.is_zero()) return "0\n";
    std::string out;
    bool first = true;
    for (const auto& [mono, c] : p.sorted_terms()) {
        std::string factors;
        for (std::size_t i = 0; i < p.num_x(); ++i) {
            const int e = mono.exps[i];
            if (e == 0) continue;
            factors += "x_{" + std::to_string(i + 1) + "}";
            if (e != 2) {
                factors += "^{" + (e % 2 == 0 ? std::to_string(e / 2)
                                              : std::string(e < 0 ? "-" : "") + "\\frac{" +
                                                    std::to_string(std::abs(e)) + "}{2}") + "}";
            }
        }
        for (std::size_t j = 0; j < p.num_y(); ++j) {
            const int e = mono.exps[p.num_x() + j];
            if (e == 0) continue;
            factors += "y_{" + std::to_string(j + 1) + "}";
            if (e != 1) factors += "^{" + std::to_string(e) + "}";
        }
        std::string coeff = latex_coeff(c, first);
        if (factors.empty() && abs(c) == 1) coeff += "1";
        out += coeff + factors;
        first = false;
    }
    return out + "\n";
}

std::string render_poly(const LaurentPoly& p, OutputFormat format) {
    switch (format) {
    case OutputFormat::text: return render_poly_text(p);
    case OutputFormat::json: return render_poly_json(p);
    case OutputFormat::latex: return render_poly_latex(p);
    }
    return {};
}

LaurentPoly parse_poly_json(std::string_view text, std::size_t num_x, std::size_t num_y) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw format_error(e.what());
    }
    if (!j.is_array()) throw format_error("polynomial must be an array of terms");
    LaurentPoly out(num_x, num_y);
    try {
        for (const auto& t : j) {
            const auto& xs = t.at("x_exponents");
            const auto& ys = t.at("y_exponents");
            if (xs.size() != num_x || ys.size() != num_y) {
                throw format_error("exponent vector has the wrong length");
            }
            std::vector<int> xd;
            for (const auto& x : xs) {
                const Rational e = rational_from(x);
                const Rational d = e * 2;
                if (d.get_den() != 1) throw format_error("x-exponent is not a half-integer");
                xd.push_back(static_cast<int>(d.get_num().get_si()));
            }
            std::vector<int> yv;
            for (const auto& y : ys) {
                const Rational e = rational_from(y);
                if (e.get_den() != 1) throw format_error("y-exponent is not an integer");
                yv.push_back(static_cast<int>(e.get_num().get_si()));
            }
            out += LaurentPoly::monomial(num_x, num_y, xd, yv, rational_from(t.at("coeff")));
        }
    } catch (const Json::exception& e) {
        throw format_error(e.what());
    } catch (const std::invalid_argument& e) {
        throw format_error(e.what());
    }
    return out;
}

} // namespace mnr
