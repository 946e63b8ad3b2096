#ifndef TESLERFORGE_RATIONAL_HPP
#define TESLERFORGE_RATIONAL_HPP

#include <boost/multiprecision/gmp.hpp>
#include <string>
#include <vector>

#include "teslerforge/error.hpp"

namespace teslerforge {

/// Exact rational scalar. GMP keeps values canonical (positive denominator,
/// coprime parts) under arithmetic; parse_rat preserves that for input.
/// There is no floating-point path anywhere in this library.
using Rat = boost::multiprecision::mpq_rational;
using Int = boost::multiprecision::mpz_int;

/// Parses "p" or "p/q" with optional leading '-' on p. Rejects everything
/// else (decimals in particular) and q = 0. Result is canonical.
Rat parse_rat(const std::string& text);

/// Canonical text form: "p" when the denominator is 1, else "p/q".
std::string rat_to_string(const Rat& value);

bool is_integer(const Rat& value);

using RatVector = std::vector<Rat>;

}  // namespace teslerforge

#endif
