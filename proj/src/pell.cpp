#include "zknead/pell.hpp"

#include "zknead/correspondence.hpp"
#include "zknead/error.hpp"
#include "zknead/sequence.hpp"

namespace zknead {

PellSolution pell4(const Int& D) {
    if (D <= 0) fail(errc::nonpositive_discriminant, "pell4: D must be positive");
    Int a0 = isqrt(D);
    if (a0 * a0 == D) fail(errc::square_discriminant, "pell4: D must not be a square");

    // Continued fraction of sqrt(D) via the integer (m, d, a) recurrence.
    // The convergent just before the period closes (a = 2*a0, d = 1) is the
    // fundamental solution of p^2 - D q^2 = (-1)^period.
    Int m = 0, d = 1, a = a0;
    Int p_prev = 1, q_prev = 0;
    Int p = a0, q = 1;
    std::int64_t period = 0;
    while (true) {
        m = d * a - m;
        d = (D - m * m) / d;
        a = (a0 + m) / d;
        ++period;
        if (d == 1 && a == 2 * a0) break;
        Int pn = a * p + p_prev;
        p_prev = std::move(p);
        p = std::move(pn);
        Int qn = a * q + q_prev;
        q_prev = std::move(q);
        q = std::move(qn);
    }

    Int u, v;
    if (period % 2 == 0) {          // p^2 - D q^2 = 1
        u = p;
        v = q;
    } else {                        // norm -1: square the unit
        u = p * p + D * q * q;
        v = 2 * p * q;
    }
    PellSolution sol{2 * u, 2 * v};
    if (sol.x * sol.x - D * sol.y * sol.y != 4)
        fail(errc::internal_inconsistency, "pell4: solution check failed");
    return sol;
}

QForm reduce_via_kneading(const QForm& f) {
    if (!is_zagier_reduced(f)) fail(errc::not_reduced, "reduce_via_kneading: form not reduced");
    PellSolution sol = pell4(discriminant(f));
    // y*f has discriminant y^2*D = x^2 - 4, so its spec is (x, 1)
    QForm scaled{f.A * sol.y, f.B * sol.y, f.C * sol.y};
    QForm g = phi(knead(psi(scaled, DiscSpec{sol.x, 1})));
    if (g.A % sol.y != 0 || g.B % sol.y != 0 || g.C % sol.y != 0)
        fail(errc::internal_inconsistency, "reduce_via_kneading: coefficients not divisible by y");
    return QForm{g.A / sol.y, g.B / sol.y, g.C / sol.y};
}

} // namespace zknead
