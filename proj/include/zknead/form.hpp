#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "zknead/integer.hpp"

namespace zknead {

/// Binary quadratic form A*x^2 + B*x*y + C*y^2.
struct QForm {
    Int A, B, C;
    friend bool operator==(const QForm&, const QForm&) = default;
};

/// Element of SL2(Z); unimodularity is checked where it is consumed.
struct Mat2 {
    Int a, b, c, d;
};

Int discriminant(const QForm& f);

/// Right action f(a*x + b*y, c*x + d*y); errc::not_unimodular if det != 1.
QForm sl2_act(const QForm& f, const Mat2& m);

/// Zagier's condition: A > 0, C > 0, B > A + C.
bool is_zagier_reduced(const QForm& f);

/// The unique n with n-1 < (B + sqrt(D))/(2A) < n, computed exactly with the
/// integer square root (sqrt(D) is irrational for nonsquare D).
/// Requires a reduced form of positive nonsquare discriminant.
Int reducing_number(const QForm& f);

/// One Zagier reduction step: act with [[n,1],[-1,0]] for the reducing
/// number n. Closed form (A*n^2 - B*n + C, 2*A*n - B, A).
QForm reduce_step(const QForm& f);

/// Same step rule without the reducedness requirement; any form of positive
/// nonsquare discriminant.
QForm reduce_step_any(const QForm& f);

/// Iterates the step rule until a reduced form appears; returns it together
/// with the number of steps taken. errc::step_limit_exceeded past the cap.
std::pair<QForm, std::int64_t> reduce_to_reduced(const QForm& f,
                                                 std::int64_t max_steps = 1'000'000);

/// Closed orbit of a reduced form under reduce_step, starting at f.
std::vector<QForm> reduction_cycle(const QForm& f);

/// All Zagier-reduced forms of discriminant D, sorted by (A, B, C).
std::vector<QForm> enumerate_reduced(const Int& D);

/// Canonical representative of f's reduction cycle: smallest B, then
/// smallest A (the convention used for tables).
QForm canonical_cycle_form(const QForm& f);

/// Lexicographic (A, B, C) order used for deterministic listings.
bool form_triple_less(const QForm& x, const QForm& y);

std::string format_form(const QForm& f);      // "A,B,C"
QForm parse_form(std::string_view text);      // accepts optional parentheses

} // namespace zknead
