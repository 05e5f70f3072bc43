#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string_view>

namespace zknead {

/// Exact integer used for continuants, form coefficients and Pell solutions.
/// Values grow roughly like phi^sum and routinely exceed 64 bits.
using Int = boost::multiprecision::cpp_int;

using boost::multiprecision::abs;
using boost::multiprecision::gcd;

/// floor(sqrt(n)); n must be nonnegative.
Int isqrt(const Int& n);
bool is_square(const Int& n);

/// floor(sqrt(n)) on machine integers; n must be nonnegative.
std::int64_t isqrt64(std::int64_t n);

/// Division rounding toward negative infinity; den must be nonzero.
Int floor_div(const Int& num, const Int& den);

/// Extended gcd: returns g = gcd(a, b) >= 0 and writes x, y with a*x + b*y = g.
Int ext_gcd(const Int& a, const Int& b, Int& x, Int& y);

/// Inverse of a modulo m (m >= 1, gcd(a, m) = 1); result in [0, m).
Int mod_inverse(const Int& a, const Int& m);

/// Narrowing conversion with a range check (errc::overflow).
std::int64_t to_int64_checked(const Int& v);

/// Parses a decimal integer of arbitrary size (errc::parse_error).
Int parse_int(std::string_view text);

} // namespace zknead
