#include "zknead/classgroup.hpp"

#include <algorithm>
#include <cassert>

#include "zknead/error.hpp"

namespace zknead {

Int content(const QForm& f) {
    if (f.A == 0 && f.B == 0 && f.C == 0) fail(errc::zero_form, "content: zero form");
    return gcd(gcd(abs(f.A), abs(f.B)), abs(f.C));
}

bool is_primitive(const QForm& f) { return content(f) == 1; }

namespace {

Int common_positive_nonsquare_disc(const QForm& f, const QForm& g) {
    Int D = discriminant(f);
    if (D != discriminant(g)) fail(errc::discriminant_mismatch, "forms have different discriminants");
    if (D <= 0) fail(errc::nonpositive_discriminant, "discriminant must be positive");
    if (is_square(D)) fail(errc::square_discriminant, "discriminant must not be a square");
    return D;
}

} // namespace

bool equivalent(const QForm& f, const QForm& g) {
    common_positive_nonsquare_disc(f, g);
    QForm fr = reduce_to_reduced(f).first;
    QForm gr = reduce_to_reduced(g).first;
    if (fr == gr) return true;
    for (const QForm& h : reduction_cycle(fr))
        if (h == gr) return true;
    return false;
}

FormClass class_of(const QForm& f) {
    return FormClass{canonical_cycle_form(reduce_to_reduced(f).first)};
}

std::int64_t class_caliber(const FormClass& c) {
    return static_cast<std::int64_t>(reduction_cycle(c.representative).size());
}

namespace {

// Equivalent form whose leading coefficient is nonzero and coprime to n.
// A primitive form represents such a value at some coprime pair (x, y);
// the matrix [[x, *], [y, *]] moving it to the lead is unimodular.
QForm with_coprime_lead(const QForm& f, const Int& n) {
    if (gcd(abs(f.A), n) == 1 && f.A != 0) return f;
    for (std::int64_t radius = 1; radius <= 10'000; ++radius) {
        for (std::int64_t x = 0; x <= radius; ++x) {
            const std::int64_t y = radius - x;
            Int gx(x), gy(y);
            if (gcd(gx, gy) != 1) continue;
            Int value = f.A * gx * gx + f.B * gx * gy + f.C * gy * gy;
            if (value == 0 || gcd(abs(value), n) != 1) continue;
            Int u, v;
            ext_gcd(gx, gy, u, v);   // u*x + v*y = 1
            Mat2 m{gx, -v, gy, u};
            return sl2_act(f, m);
        }
    }
    fail(errc::internal_inconsistency, "with_coprime_lead: no representation found");
}

} // namespace

FormClass compose(const FormClass& lhs, const FormClass& rhs) {
    const QForm& f1 = lhs.representative;
    if (!is_primitive(f1) || !is_primitive(rhs.representative))
        fail(errc::not_primitive, "compose: classes must be primitive");
    Int D = common_positive_nonsquare_disc(f1, rhs.representative);

    // Dirichlet composition after arranging gcd(a1, a2) = 1: with
    // B = b2 + 2*a2*t and a2*t = -(b2-b1)/2 (mod a1), the composed form is
    // (a1*a2, B, (B^2-D)/(4*a1*a2)).
    QForm f2 = with_coprime_lead(rhs.representative, f1.A);
    const Int& a1 = f1.A;
    const Int& a2 = f2.A;
    Int n = (f2.B - f1.B) / 2;
    Int t = a1 == 1 ? Int(0) : (-n % a1) * mod_inverse(((a2 % a1) + a1) % a1, a1) % a1;
    Int A3 = a1 * a2;
    Int B3 = f2.B + 2 * a2 * t;
    Int num = B3 * B3 - D;
    if (num % (4 * A3) != 0)
        fail(errc::internal_inconsistency, "compose: congruence solution invalid");
    QForm g{A3, B3, num / (4 * A3)};
    assert(discriminant(g) == D);
    assert(is_primitive(g));
    return class_of(g);
}

FormClass principal_class(const DiscSpec& spec) {
    validate_spec(spec);
    if (spec.s == 0) return class_of(QForm{1, spec.a + 2, spec.a});
    return class_of(QForm{1, spec.a, 1});
}

FormClass c_class(std::int64_t a) {
    if (a < 4) fail(errc::domain_error, "c_class: requires a >= 4");
    return class_of(QForm{a - 2, 3 * a - 6, 2 * a - 5});
}

FormClass c_tilde_class(std::int64_t k) {
    if (k < 3 || k % 3 == 2) fail(errc::domain_error, "c_tilde_class: requires k >= 3, k != 2 mod 3");
    return class_of(QForm{2 * k - 1, 2 * k * k + 1, k * k - k + 1});
}

std::vector<CycleInfo> cycle_partition(const Int& D) {
    std::vector<QForm> forms = enumerate_reduced(D);   // sorted by triple
    std::vector<bool> seen(forms.size(), false);
    auto index_of = [&](const QForm& f) {
        auto it = std::lower_bound(forms.begin(), forms.end(), f, form_triple_less);
        if (it == forms.end() || !(*it == f))
            fail(errc::internal_inconsistency, "cycle_partition: step left the reduced set");
        return static_cast<std::size_t>(it - forms.begin());
    };

    std::vector<CycleInfo> out;
    for (std::size_t i = 0; i < forms.size(); ++i) {
        if (seen[i]) continue;
        CycleInfo info;
        info.canonical = forms[i];
        info.caliber = 0;
        QForm g = forms[i];
        do {
            std::size_t j = index_of(g);
            if (seen[j]) fail(errc::internal_inconsistency, "cycle_partition: cycles overlap");
            seen[j] = true;
            ++info.caliber;
            if (std::tie(g.B, g.A) < std::tie(info.canonical.B, info.canonical.A))
                info.canonical = g;
            g = reduce_step(g);
        } while (!(g == forms[i]));
        info.content = content(info.canonical);
        out.push_back(std::move(info));
    }
    std::sort(out.begin(), out.end(), [](const CycleInfo& x, const CycleInfo& y) {
        return form_triple_less(x.canonical, y.canonical);
    });
    return out;
}

std::vector<FormClass> class_list(const Int& D) {
    std::vector<FormClass> out;
    for (const CycleInfo& info : cycle_partition(D))
        if (info.content == 1) out.push_back(FormClass{info.canonical});
    return out;
}

} // namespace zknead
