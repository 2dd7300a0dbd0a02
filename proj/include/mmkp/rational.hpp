#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace mmkp {

// Exact rational coefficients. GMP keeps results canonical (lowest terms,
// positive denominator) for all arithmetic; only raw construction needs care.
using Rational = mpq_class;

struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

Rational rat(long num, long den = 1);

// Accepts "n" or "n/d"; canonicalizes.
Rational parse_rational(const std::string& s);

// "n" or "n/d", denominator omitted when 1.
std::string format_rational(const Rational& q);

} // namespace mmkp
