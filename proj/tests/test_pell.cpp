#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "test_util.hpp"
#include "zknead/classgroup.hpp"
#include "zknead/pell.hpp"

using namespace zknead;
using zknead::testing::thrown_code;

namespace {

// Minimal solution by brute force over y; oracle only.
PellSolution pell4_minimal(std::int64_t D) {
    for (std::int64_t y = 1;; ++y) {
        Int x2 = Int(D) * y * y + 4;
        if (is_square(x2)) return PellSolution{isqrt(x2), y};
    }
}

} // namespace

TEST_CASE("pell4 values") {
    CHECK(pell4(8) == PellSolution{6, 2});
    CHECK(pell4(20) == PellSolution{18, 4});
    // norm -1 expansion: the unit is squared, so not the minimal solution
    CHECK(pell4(5) == PellSolution{18, 8});
    CHECK(pell4_minimal(5) == PellSolution{3, 1});
    CHECK(pell4_minimal(8) == PellSolution{6, 2});
    CHECK(pell4_minimal(20) == PellSolution{18, 4});
}

TEST_CASE("pell4 errors") {
    CHECK(thrown_code([] { pell4(16); }) == errc::square_discriminant);
    CHECK(thrown_code([] { pell4(0); }) == errc::nonpositive_discriminant);
    CHECK(thrown_code([] { pell4(-5); }) == errc::nonpositive_discriminant);
}

TEST_CASE("pell4 satisfies its equation for every nonsquare D up to 300") {
    for (std::int64_t D = 2; D <= 300; ++D) {
        if (D == isqrt64(D) * isqrt64(D)) continue;
        PellSolution sol = pell4(D);
        CHECK(sol.y >= 1);
        CHECK(sol.x * sol.x - D * sol.y * sol.y == 4);
    }
}

TEST_CASE("reduce_via_kneading worked examples") {
    CHECK(reduce_via_kneading({1, 4, 2}) == QForm{2, 4, 1});
    CHECK(reduce_via_kneading({1, 3, 1}) == QForm{1, 3, 1});
    // (a, 1) solves the equation for D = a^2 - 4, but the unit route scales
    // by its own y; the path must still agree with the direct step
    CHECK(Int(15 * 15) - 221 == 4);
    CHECK(reduce_via_kneading({1, 15, 1}) == reduce_step({1, 15, 1}));
    CHECK(thrown_code([] { reduce_via_kneading({1, 2, 5}); }) == errc::not_reduced);
}

TEST_CASE("kneading path equals the direct step for every reduced form, D <= 160") {
    for (std::int64_t D = 2; D <= 160; ++D) {
        if (D == isqrt64(D) * isqrt64(D)) continue;
        for (const QForm& f : enumerate_reduced(D))
            CHECK(reduce_via_kneading(f) == reduce_step(f));
    }
}

TEST_CASE("scaling by y maps cycles onto cycles of the scaled discriminant") {
    for (std::int64_t D = 2; D <= 150; ++D) {
        if (D == isqrt64(D) * isqrt64(D)) continue;
        PellSolution sol = pell4(D);
        for (const CycleInfo& info : cycle_partition(D)) {
            const QForm& f = info.canonical;
            QForm scaled{f.A * sol.y, f.B * sol.y, f.C * sol.y};
            CHECK(discriminant(scaled) == sol.x * sol.x - 4);
            auto cycle = reduction_cycle(f);
            auto scaled_cycle = reduction_cycle(scaled);
            CHECK(cycle.size() == scaled_cycle.size());
            std::set<std::string> lifted;
            for (const QForm& g : cycle)
                lifted.insert(format_form(QForm{g.A * sol.y, g.B * sol.y, g.C * sol.y}));
            std::set<std::string> target;
            for (const QForm& g : scaled_cycle) target.insert(format_form(g));
            CHECK(lifted == target);
        }
    }
}
