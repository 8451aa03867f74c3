#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <string>
#include <string_view>

namespace nestocone {

using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational, boost::multiprecision::et_off>;
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int, boost::multiprecision::et_off>;

/// "p/q" in lowest terms, or "p" for integers.
std::string to_string(const Rational& q);

/// Accepts "p", "-p", "p/q". Throws InputError on anything else or q = 0.
Rational parse_rational(std::string_view text);

}  // namespace nestocone
