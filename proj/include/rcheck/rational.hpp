#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

namespace rcheck {

using Rational = boost::rational<std::int64_t>;

// "p/q" in lowest terms; integers print without a denominator.
std::string to_string(const Rational& r);

// Accepts "p", "-p", "p/q". Throws InputError on anything else or q == 0.
Rational parse_rational(std::string_view text);

}  // namespace rcheck
