#include "zknead/continuant.hpp"

#include "zknead/error.hpp"

namespace zknead {

Int continuant(std::span<const std::int64_t> q) {
    Int prev = 1;       // continuant of the empty prefix
    Int prevprev = 0;
    for (auto e : q) {
        if (e < 0) fail(errc::domain_error, "continuant: negative entry");
        Int cur = e * prev + prevprev;
        prevprev = std::move(prev);
        prev = std::move(cur);
    }
    return prev;
}

std::pair<Int, Int> cf_value(std::span<const std::int64_t> q) {
    if (q.empty()) fail(errc::empty_sequence, "cf_value: empty sequence");
    Int num = 1, den = 0;
    for (std::size_t i = q.size(); i-- > 0;) {
        if (q[i] < 1) fail(errc::nonpositive_entry, "cf_value: entries must be >= 1");
        // q[i] + den/num, folded from the right
        Int next_num = q[i] * num + den;
        den = std::move(num);
        num = std::move(next_num);
    }
    return {std::move(num), std::move(den)};
}

Int alternant(const Seq& q) {
    require_positive_entries(q);
    if (q.empty()) fail(errc::empty_sequence, "alternant: empty sequence");
    if (q.size() == 1) return Int(q[0]);
    std::span<const std::int64_t> all{q};
    return continuant(all) - continuant(all.subspan(1, q.size() - 2));
}

Seq cf_expand(const Int& num, const Int& den, int parity) {
    if (parity != 0 && parity != 1) fail(errc::domain_error, "cf_expand: parity must be 0 or 1");
    if (num < 1 || den < 1) fail(errc::domain_error, "cf_expand: arguments must be positive");
    if (gcd(num, den) != 1) fail(errc::not_coprime, "cf_expand: arguments not coprime");
    if (den > 1 && num <= den) fail(errc::improper_fraction, "cf_expand: requires num > den");

    // Canonical Euclidean expansion; its final quotient is >= 2 except for
    // the single-entry expansions of num/1.
    Seq q;
    Int a = num, b = den;
    while (b != 0) {
        Int quot = a / b;
        Int rem = a % b;
        q.push_back(to_int64_checked(quot));
        a = std::move(b);
        b = std::move(rem);
    }
    if (static_cast<int>(q.size() % 2 == 0 ? 0 : 1) != parity) {
        if (q.back() >= 2) {
            q.back() -= 1;
            q.push_back(1);
        } else {
            fail(errc::no_such_expansion, "1/1 has only the length-1 expansion");
        }
    }
    return q;
}

} // namespace zknead
