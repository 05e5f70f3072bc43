#pragma once

#include <cstdint>
#include <vector>

#include "zknead/correspondence.hpp"
#include "zknead/form.hpp"
#include "zknead/integer.hpp"

namespace zknead {

/// gcd of the coefficients; errc::zero_form when all are zero.
Int content(const QForm& f);
bool is_primitive(const QForm& f);

/// Two forms of the same positive nonsquare discriminant are equivalent iff
/// their reductions land in the same cycle.
bool equivalent(const QForm& f, const QForm& g);

/// Equivalence class of forms, keyed by the canonical reduced representative
/// of its cycle (smallest B, then smallest A).
struct FormClass {
    QForm representative;
    friend bool operator==(const FormClass&, const FormClass&) = default;
};

FormClass class_of(const QForm& f);

/// Caliber: number of forms in the class's reduction cycle.
std::int64_t class_caliber(const FormClass& c);

/// Dirichlet composition of primitive classes of a common discriminant.
/// Abelian group law; the principal class is the identity.
FormClass compose(const FormClass& lhs, const FormClass& rhs);

/// Class of x^2 + (a+2)xy + a*y^2 (s = 0) or x^2 + a*xy + y^2 (s = 1).
FormClass principal_class(const DiscSpec& spec);

/// Order-two class of (a-2, 3a-6, 2a-5), discriminant a^2 - 4; a >= 4.
FormClass c_class(std::int64_t a);

/// Class of (2k-1, 2k^2+1, k^2-k+1), discriminant (2k^2-2k+3)^2 - 4, whose
/// square is c_class(2k^2-2k+3); k >= 3 and k != 2 (mod 3).
FormClass c_tilde_class(std::int64_t k);

/// One class per cycle of primitive reduced forms of D, sorted by
/// representative triple.
std::vector<FormClass> class_list(const Int& D);

/// One entry per reduction cycle of D (primitive and imprimitive alike).
struct CycleInfo {
    QForm canonical;
    std::int64_t caliber = 0;
    Int content;
};
std::vector<CycleInfo> cycle_partition(const Int& D);

} // namespace zknead
