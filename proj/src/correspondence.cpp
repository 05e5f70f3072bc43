#include "zknead/correspondence.hpp"

#include <cassert>

#include "zknead/error.hpp"

namespace zknead {

bool spec_excluded(const DiscSpec& spec) {
    return spec.s == 1 && (spec.a == 1 || spec.a == 2);
}

void validate_spec(const DiscSpec& spec) {
    if (spec.a < 1 || (spec.s != 0 && spec.s != 1))
        fail(errc::domain_error, "spec requires a >= 1 and s in {0,1}");
    if (spec_excluded(spec))
        fail(errc::excluded_spec, "specs (1,1) and (2,1) are excluded");
}

Int disc_of_spec(const DiscSpec& spec) {
    return spec.s == 0 ? Int(spec.a * spec.a + 4) : Int(spec.a * spec.a - 4);
}

Seq psi(const QForm& f, const DiscSpec& spec) {
    validate_spec(spec);
    if (!is_zagier_reduced(f)) fail(errc::not_reduced, "psi: form not reduced");
    if (discriminant(f) != disc_of_spec(spec))
        fail(errc::discriminant_mismatch, "psi: discriminant does not match spec");
    // B and a share parity because B^2 = D + 4AC = a^2 + (-1)^s*4 + 4AC
    Int z = (spec.a + f.B) / 2;
    return cf_expand(z, f.A, spec.s);
}

namespace {

struct ContinuantMatrix {
    // product of [[q_i, 1], [1, 0]]:
    // [[ [q1..ql]  [q1..q_{l-1}] ]
    //  [ [q2..ql]  [q2..q_{l-1}] ]]
    Int full = 1, drop_last = 0, drop_first = 0, inner = 1;

    void push(std::int64_t q) {
        Int f2 = q * full + drop_last;
        drop_last = std::move(full);
        full = std::move(f2);
        Int g2 = q * drop_first + inner;
        inner = std::move(drop_first);
        drop_first = std::move(g2);
    }
};

} // namespace

QForm phi(const Seq& q) {
    require_positive_entries(q);
    if (q.empty()) fail(errc::empty_sequence, "phi: empty sequence");
    ContinuantMatrix m;
    for (auto e : q) m.push(e);
    const int s = q.size() % 2 == 0 ? 0 : 1;
    Int a = m.full - m.inner;
    if (spec_excluded(DiscSpec{a, s}))
        fail(errc::excluded_spec, "phi: sequence has an excluded (alternant, parity) pair");
    QForm f{m.drop_first, m.full + m.inner, m.drop_last};
    assert(is_zagier_reduced(f));
    assert(discriminant(f) == a * a + (s == 0 ? 4 : -4));
    return f;
}

DiscSpec spec_of_sequence(const Seq& q) {
    DiscSpec spec{alternant(q), length_parity(q)};
    if (spec_excluded(spec))
        fail(errc::excluded_spec, "sequence lands on an excluded spec");
    return spec;
}

std::vector<DiscSpec> specs_of_discriminant(const Int& D) {
    if (D <= 0) fail(errc::nonpositive_discriminant, "specs_of_discriminant: D must be positive");
    std::vector<DiscSpec> out;
    if (D > 4 && is_square(D - 4)) out.push_back(DiscSpec{isqrt(D - 4), 0});
    if (is_square(D + 4)) {
        DiscSpec spec{isqrt(D + 4), 1};
        if (!spec_excluded(spec)) out.push_back(spec);
    }
    return out;
}

std::int64_t form_sum(const QForm& f, const DiscSpec& spec) { return seq_sum(psi(f, spec)); }

} // namespace zknead
