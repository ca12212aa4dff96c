#include "mnrules/rational.hpp"

#include <stdexcept>

namespace mnr {

std::string to_string(const Rational& q) { return q.get_str(); }

Rational parse_rational(std::string_view text) {
    while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
    while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
    if (!text.empty() && text.front() == '+') text.remove_prefix(1);
    const auto bad = [&] {
        return std::invalid_argument("invalid rational '" + std::string(text) + "'");
    };
    if (text.empty()) throw bad();
    const auto slash = text.find('/');
    const auto digits_ok = [](std::string_view s, bool allow_sign) {
        if (allow_sign && !s.empty() && s.front() == '-') s.remove_prefix(1);
        if (s.empty()) return false;
        for (char c : s) {
            if (c < '0' || c > '9') return false;
        }
        return true;
    };
    if (!digits_ok(text.substr(0, slash), true)) throw bad();
    if (slash != std::string_view::npos) {
        const auto den = text.substr(slash + 1);
        if (!digits_ok(den, false) || den.find_first_not_of('0') == std::string_view::npos) {
            throw bad();
        }
    }
    Rational q(std::string(text), 10);
    q.canonicalize();
    return q;
}

} // namespace mnr
