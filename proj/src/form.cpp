#include "zknead/form.hpp"

#include <algorithm>
#include <tuple>

#include "zknead/error.hpp"

namespace zknead {

Int discriminant(const QForm& f) { return f.B * f.B - 4 * f.A * f.C; }

QForm sl2_act(const QForm& f, const Mat2& m) {
    if (m.a * m.d - m.b * m.c != 1) fail(errc::not_unimodular, "sl2_act: determinant != 1");
    QForm g;
    g.A = f.A * m.a * m.a + f.B * m.a * m.c + f.C * m.c * m.c;
    g.B = 2 * f.A * m.a * m.b + f.B * (m.a * m.d + m.b * m.c) + 2 * f.C * m.c * m.d;
    g.C = f.A * m.b * m.b + f.B * m.b * m.d + f.C * m.d * m.d;
    return g;
}

bool is_zagier_reduced(const QForm& f) { return f.A > 0 && f.C > 0 && f.B > f.A + f.C; }

namespace {

Int positive_nonsquare_disc(const QForm& f) {
    Int D = discriminant(f);
    if (D <= 0) fail(errc::nonpositive_discriminant, "discriminant must be positive");
    if (is_square(D)) fail(errc::square_discriminant, "discriminant must not be a square");
    return D;
}

// floor((B + sqrt(D))/(2A)) + 1 for either sign of A. Exact: sqrt(D) is
// irrational and no integer lies strictly between isqrt(D) and sqrt(D), so
// no multiple of 2A separates B + isqrt(D) from B + sqrt(D).
Int step_number(const QForm& f, const Int& sqrt_d) {
    if (f.A > 0) return floor_div(f.B + sqrt_d, 2 * f.A) + 1;
    if (f.A < 0) return -floor_div(f.B + sqrt_d, -2 * f.A);
    fail(errc::internal_inconsistency, "form with A = 0 has square discriminant");
}

QForm apply_step(const QForm& f, const Int& n) {
    return QForm{f.A * n * n - f.B * n + f.C, 2 * f.A * n - f.B, f.A};
}

} // namespace

Int reducing_number(const QForm& f) {
    if (!is_zagier_reduced(f)) fail(errc::not_reduced, "reducing_number: form not reduced");
    Int D = positive_nonsquare_disc(f);
    return floor_div(f.B + isqrt(D), 2 * f.A) + 1;
}

QForm reduce_step(const QForm& f) { return apply_step(f, reducing_number(f)); }

QForm reduce_step_any(const QForm& f) {
    Int D = positive_nonsquare_disc(f);
    return apply_step(f, step_number(f, isqrt(D)));
}

std::pair<QForm, std::int64_t> reduce_to_reduced(const QForm& f, std::int64_t max_steps) {
    Int D = positive_nonsquare_disc(f);
    Int sqrt_d = isqrt(D);
    QForm g = f;
    for (std::int64_t steps = 0; steps <= max_steps; ++steps) {
        if (is_zagier_reduced(g)) return {g, steps};
        g = apply_step(g, step_number(g, sqrt_d));
    }
    fail(errc::step_limit_exceeded, "reduce_to_reduced: step cap exceeded");
}

std::vector<QForm> reduction_cycle(const QForm& start) {
    if (!is_zagier_reduced(start)) fail(errc::not_reduced, "reduction_cycle: form not reduced");
    Int sqrt_d = isqrt(positive_nonsquare_disc(start));
    std::vector<QForm> cycle{start};
    for (QForm g = apply_step(start, step_number(start, sqrt_d)); g != start;
         g = apply_step(g, step_number(g, sqrt_d))) {
        cycle.push_back(g);
        if (cycle.size() > 10'000'000)
            fail(errc::internal_inconsistency, "reduction_cycle: did not close");
    }
    return cycle;
}

QForm canonical_cycle_form(const QForm& f) {
    if (!is_zagier_reduced(f)) fail(errc::not_reduced, "canonical_cycle_form: form not reduced");
    Int sqrt_d = isqrt(positive_nonsquare_disc(f));
    QForm best = f;
    std::int64_t guard = 0;
    for (QForm g = apply_step(f, step_number(f, sqrt_d)); g != f;
         g = apply_step(g, step_number(g, sqrt_d))) {
        if (std::tie(g.B, g.A) < std::tie(best.B, best.A)) best = g;
        if (++guard > 10'000'000)
            fail(errc::internal_inconsistency, "canonical_cycle_form: cycle did not close");
    }
    return best;
}

namespace {

// Reduced forms of discriminant D satisfy D = 4*A*k + m^2 with
// k = B - A - C >= 1 and m = |B - 2A|, so scanning (A, k) pairs with
// 4*A*k <= D and testing D - 4*A*k for squareness is complete.
template <class Emit>
void scan_reduced_int64(std::int64_t D, Emit&& emit) {
    for (std::int64_t A = 1; 4 * A <= D; ++A) {
        for (std::int64_t k = 1; 4 * A * k <= D; ++k) {
            std::int64_t m2 = D - 4 * A * k;
            std::int64_t m = isqrt64(m2);
            if (m * m != m2) continue;
            // B = 2A + m and, when m > 0, B = 2A - m
            std::int64_t C = A + m - k;
            if (C >= 1) emit(A, 2 * A + m, C);
            if (m > 0) {
                C = A - m - k;
                if (C >= 1) emit(A, 2 * A - m, C);
            }
        }
    }
}

template <class Emit>
void scan_reduced_big(const Int& D, Emit&& emit) {
    for (Int A = 1; 4 * A <= D; ++A) {
        for (Int k = 1; 4 * A * k <= D; ++k) {
            Int m2 = D - 4 * A * k;
            Int m = isqrt(m2);
            if (m * m != m2) continue;
            Int C = A + m - k;
            if (C >= 1) emit(QForm{A, 2 * A + m, C});
            if (m > 0) {
                C = A - m - k;
                if (C >= 1) emit(QForm{A, 2 * A - m, C});
            }
        }
    }
}

} // namespace

std::vector<QForm> enumerate_reduced(const Int& D) {
    if (D <= 0) fail(errc::nonpositive_discriminant, "enumerate_reduced: D must be positive");
    if (is_square(D)) fail(errc::square_discriminant, "enumerate_reduced: D must not be a square");
    std::vector<QForm> out;
    if (D <= std::int64_t{1} << 60) {
        scan_reduced_int64(to_int64_checked(D),
                           [&](std::int64_t A, std::int64_t B, std::int64_t C) {
                               out.push_back(QForm{A, B, C});
                           });
    } else {
        scan_reduced_big(D, [&](QForm f) { out.push_back(std::move(f)); });
    }
    std::sort(out.begin(), out.end(), form_triple_less);
    return out;
}

bool form_triple_less(const QForm& x, const QForm& y) {
    return std::tie(x.A, x.B, x.C) < std::tie(y.A, y.B, y.C);
}

std::string format_form(const QForm& f) {
    return f.A.str() + "," + f.B.str() + "," + f.C.str();
}

QForm parse_form(std::string_view text) {
    std::string cleaned;
    cleaned.reserve(text.size());
    for (char ch : text)
        if (ch != '(' && ch != ')' && ch != ' ') cleaned += ch;
    std::size_t first = cleaned.find(',');
    std::size_t second = first == std::string::npos ? std::string::npos
                                                    : cleaned.find(',', first + 1);
    if (first == std::string::npos || second == std::string::npos ||
        cleaned.find(',', second + 1) != std::string::npos)
        fail(errc::parse_error, "form must be A,B,C");
    return QForm{parse_int(std::string_view(cleaned).substr(0, first)),
                 parse_int(std::string_view(cleaned).substr(first + 1, second - first - 1)),
                 parse_int(std::string_view(cleaned).substr(second + 1))};
}

} // namespace zknead
