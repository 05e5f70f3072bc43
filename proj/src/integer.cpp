#include "zknead/integer.hpp"

#include <cmath>
#include <limits>

#include "zknead/error.hpp"

namespace zknead {

Int isqrt(const Int& n) {
    if (n < 0) fail(errc::domain_error, "isqrt: negative argument");
    return boost::multiprecision::sqrt(n);
}

bool is_square(const Int& n) {
    if (n < 0) return false;
    Int r = boost::multiprecision::sqrt(n);
    return r * r == n;
}

std::int64_t isqrt64(std::int64_t n) {
    if (n < 0) fail(errc::domain_error, "isqrt64: negative argument");
    auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && static_cast<__int128>(r) * r > n) --r;
    while (static_cast<__int128>(r + 1) * (r + 1) <= n) ++r;
    return r;
}

Int floor_div(const Int& num, const Int& den) {
    if (den == 0) fail(errc::domain_error, "floor_div: zero divisor");
    Int q = num / den;   // truncates toward zero
    if (q * den != num && ((num < 0) != (den < 0))) --q;
    return q;
}

Int ext_gcd(const Int& a, const Int& b, Int& x, Int& y) {
    Int old_r = a, r = b;
    Int old_x = 1, cur_x = 0;
    Int old_y = 0, cur_y = 1;
    while (r != 0) {
        Int q = old_r / r;
        Int t = old_r - q * r;
        old_r = r;
        r = t;
        t = old_x - q * cur_x;
        old_x = cur_x;
        cur_x = t;
        t = old_y - q * cur_y;
        old_y = cur_y;
        cur_y = t;
    }
    if (old_r < 0) {
        old_r = -old_r;
        old_x = -old_x;
        old_y = -old_y;
    }
    x = old_x;
    y = old_y;
    return old_r;
}

Int mod_inverse(const Int& a, const Int& m) {
    if (m < 1) fail(errc::domain_error, "mod_inverse: modulus must be positive");
    if (m == 1) return 0;
    Int x, y;
    Int g = ext_gcd(a, m, x, y);
    if (g != 1) fail(errc::domain_error, "mod_inverse: arguments not coprime");
    x %= m;
    if (x < 0) x += m;
    return x;
}

std::int64_t to_int64_checked(const Int& v) {
    if (v > std::numeric_limits<std::int64_t>::max() ||
        v < std::numeric_limits<std::int64_t>::min())
        fail(errc::overflow, "value does not fit in 64 bits");
    return static_cast<std::int64_t>(v);
}

Int parse_int(std::string_view text) {
    if (text.empty()) fail(errc::parse_error, "empty integer");
    std::size_t i = text[0] == '-' || text[0] == '+' ? 1 : 0;
    if (i == text.size()) fail(errc::parse_error, "sign without digits");
    for (std::size_t k = i; k < text.size(); ++k)
        if (text[k] < '0' || text[k] > '9')
            fail(errc::parse_error, "invalid integer: " + std::string(text));
    return Int(std::string(text));
}

const char* errc_name(errc c) {
    switch (c) {
    case errc::empty_sequence: return "empty_sequence";
    case errc::nonpositive_entry: return "nonpositive_entry";
    case errc::not_coprime: return "not_coprime";
    case errc::improper_fraction: return "improper_fraction";
    case errc::no_such_expansion: return "no_such_expansion";
    case errc::not_unimodular: return "not_unimodular";
    case errc::square_discriminant: return "square_discriminant";
    case errc::nonpositive_discriminant: return "nonpositive_discriminant";
    case errc::not_reduced: return "not_reduced";
    case errc::excluded_spec: return "excluded_spec";
    case errc::discriminant_mismatch: return "discriminant_mismatch";
    case errc::not_primitive: return "not_primitive";
    case errc::zero_form: return "zero_form";
    case errc::step_limit_exceeded: return "step_limit_exceeded";
    case errc::internal_inconsistency: return "internal_inconsistency";
    case errc::domain_error: return "domain_error";
    case errc::overflow: return "overflow";
    case errc::parse_error: return "parse_error";
    }
    return "unknown";
}

} // namespace zknead
