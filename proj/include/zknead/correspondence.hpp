#pragma once

#include <cstdint>
#include <vector>

#include "zknead/continuant.hpp"
#include "zknead/form.hpp"
#include "zknead/integer.hpp"
#include "zknead/sequence.hpp"

namespace zknead {

/// Pair (a, s) encoding the discriminant a^2 + (-1)^s * 4. The pairs (1,1)
/// and (2,1) are excluded: their discriminants would be -3 and 0.
struct DiscSpec {
    Int a;
    int s = 0;
    friend bool operator==(const DiscSpec&, const DiscSpec&) = default;
};

bool spec_excluded(const DiscSpec& spec);
void validate_spec(const DiscSpec& spec);          // errc::excluded_spec / domain_error
Int disc_of_spec(const DiscSpec& spec);

/// Sequence attached to a reduced form of discriminant a^2 + (-1)^s * 4:
/// the parity-s continued fraction of (a + B)/2 over A.
Seq psi(const QForm& f, const DiscSpec& spec);

/// Form attached to a sequence:
/// ([q2..ql], [q1..ql] + [q2..q_{l-1}], [q1..q_{l-1}]),
/// which is Zagier-reduced with discriminant alternant^2 + (-1)^parity * 4.
QForm phi(const Seq& q);

/// (alternant, length parity); errc::excluded_spec on (1,1) and (2,1).
DiscSpec spec_of_sequence(const Seq& q);

/// All specs whose discriminant is D; may be empty, one, or two entries
/// (D = 5 is hit both as 1^2+4 and 3^2-4).
std::vector<DiscSpec> specs_of_discriminant(const Int& D);

/// Sum of the entries of psi(f, spec) — the sum invariant of f.
std::int64_t form_sum(const QForm& f, const DiscSpec& spec);

} // namespace zknead
