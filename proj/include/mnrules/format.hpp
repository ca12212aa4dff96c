#ifndef MNRULES_FORMAT_HPP
#define MNRULES_FORMAT_HPP

#include <stdexcept>
#include <string>
#include <string_view>

#include "mnrules/sweep.hpp"

namespace mnr {

class format_error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

enum class OutputFormat { text, json, latex };
std::optional<OutputFormat> parse_format(std::string_view text);

/// An expansion together with the selector that produced it.
struct ExpansionDocument {
    RuleSelector selector;
    MixedExpansion expansion;
    friend bool operator==(const ExpansionDocument&, const ExpansionDocument&) = default;
};

std::string render_text(const ExpansionDocument& doc);
/// Pretty-printed JSON, two-space indent, trailing newline.
std::string render_json(const ExpansionDocument& doc);
std::string render_latex(const ExpansionDocument& doc);
std::string render(const ExpansionDocument& doc, OutputFormat format);

/// Inverse of render_json. Throws format_error on malformed documents.
ExpansionDocument parse_expansion_json(std::string_view text);

/// Polynomial forms. JSON is a list of {"x_exponents", "y_exponents",
/// "coeff"} with exponents as strings in ordinary units ("3/2", "-1").
std::string render_poly_text(const LaurentPoly& p);
std::string render_poly_json(const LaurentPoly& p);
std::string render_poly_latex(const LaurentPoly& p);
std::string render_poly(const LaurentPoly& p, OutputFormat format);
LaurentPoly parse_poly_json(std::string_view text, std::size_t num_x, std::size_t num_y);

} // namespace mnr

#endif
