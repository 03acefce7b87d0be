#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace bsgw {

using Integer = mpz_class;
using Rational = mpq_class;

// "p/q" in lowest terms with q > 0, or "p" when q == 1.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

// Accepts "p", "-p", "p/q". Throws InputError on anything else or q == 0.
Rational parse_rational(std::string_view text);

Integer floor(const Rational& q);

std::vector<std::string> to_strings(const std::vector<Rational>& v);

}  // namespace bsgw
