#pragma once

#include "zknead/form.hpp"
#include "zknead/integer.hpp"

namespace zknead {

/// Solution of x^2 - D*y^2 = 4 with x, y >= 1.
struct PellSolution {
    Int x, y;
    friend bool operator==(const PellSolution&, const PellSolution&) = default;
};

/// A solution of x^2 - D*y^2 = 4 for positive nonsquare D, derived from the
/// fundamental unit found by the continued fraction of sqrt(D): a solution
/// (u, v) of u^2 - D*v^2 = 1 (squaring the unit when the expansion yields
/// norm -1) promoted to (2u, 2v). Not necessarily minimal, which is fine for
/// the rescaling trick.
PellSolution pell4(const Int& D);

/// Reduction of a reduced form of arbitrary positive nonsquare discriminant
/// D through kneading: scale by y so the discriminant becomes x^2 - 4, map to
/// a sequence, knead, map back, divide by y. Agrees with reduce_step exactly.
QForm reduce_via_kneading(const QForm& f);

} // namespace zknead
