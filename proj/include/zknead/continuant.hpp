#pragma once

#include <span>
#include <utility>

#include "zknead/integer.hpp"
#include "zknead/sequence.hpp"

namespace zknead {

/// Continuant of a quotient sequence; the empty sequence gives 1.
/// Zero entries are accepted so the classical splice identities can be
/// exercised; negative entries are rejected.
Int continuant(std::span<const std::int64_t> q);

/// Exact value of the simple continued fraction with the given quotients,
/// as a (numerator, denominator) pair in lowest terms. Entries must be >= 1.
std::pair<Int, Int> cf_value(std::span<const std::int64_t> q);

/// Alternant: continuant of the whole minus continuant of the interior;
/// q1*q2 for length 2 and q1 for length 1.
Int alternant(const Seq& q);

/// The unique simple-continued-fraction quotient sequence of num/den whose
/// length has the requested parity. Requires gcd(num, den) = 1 and
/// num > den >= 1 (or den = 1). The canonical Euclidean expansion is
/// computed first; a single right pinch flips the parity when needed.
Seq cf_expand(const Int& num, const Int& den, int parity);

} // namespace zknead
