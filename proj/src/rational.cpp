#include "nestocone/rational.hpp"

#include <cctype>

#include "nestocone/errors.hpp"

namespace nestocone {

namespace {

Integer parse_integer(std::string_view text, std::string_view whole) {
    std::size_t start = (!text.empty() && (text[0] == '-' || text[0] == '+')) ? 1 : 0;
    if (text.size() == start) throw InputError("malformed rational '" + std::string(whole) + "'");
    for (std::size_t i = start; i < text.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(text[i])))
            throw InputError("malformed rational '" + std::string(whole) + "'");
    }
    std::string digits(text[0] == '+' ? text.substr(1) : text);
    return Integer(digits);
}

}  // namespace

std::string to_string(const Rational& q) { return q.str(); }

Rational parse_rational(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_integer(text, text));
    const Integer num = parse_integer(text.substr(0, slash), text);
    const Integer den = parse_integer(text.substr(slash + 1), text);
    if (den == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
    return Rational(num, den);
}

}  // namespace nestocone
