#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "zknead/classgroup.hpp"
#include "zknead/correspondence.hpp"
#include "zknead/form.hpp"
#include "zknead/sequence.hpp"

namespace zknead {

/// One kneading cycle of compositions of `sum`, with its invariants and the
/// attached cycle of forms. `primitive` is the cycle's canonical form
/// (smallest middle coefficient, the table convention) divided by the
/// content d. Cycles whose (alternant, parity) is an excluded spec carry no
/// form: content is 0 and `primitive` is all zeros.
struct CycleRecord {
    std::int64_t sum = 0;
    std::int64_t caliber = 0;
    int parity = 0;
    std::int64_t alternant = 0;
    std::int64_t content = 0;
    QForm primitive{0, 0, 0};
    Seq representative;   // lexicographically smallest member

    bool has_form() const { return content != 0; }
};

struct CensusOptions {
    std::optional<int> parity;   // keep only cycles of this length parity
    int workers = 0;             // 0 = all hardware threads
};

/// Enumerates every composition of n (as bit masks, ascending).
template <class F>
void for_each_composition(std::int64_t n, F&& fn);

std::vector<Seq> compositions(std::int64_t n);

/// Partition of the compositions of n into kneading cycles, one record per
/// cycle. A composition is expanded only when it is the lexicographic
/// minimum of its cycle, so no visited set is kept. Output is sorted by
/// (caliber, content, primitive triple, representative) and is identical
/// for any worker count.
std::vector<CycleRecord> cycle_census(std::int64_t n, const CensusOptions& opt = {});

/// Serial reference implementation built directly on knead/phi; kept for
/// testing the OpenMP kernel against.
std::vector<CycleRecord> cycle_census_serial(std::int64_t n, const CensusOptions& opt = {});

int mobius(std::int64_t n);

/// (1/(2l)) * sum over odd d | l of mu(d) * 2^(l/d); the conjectured number
/// of even-parity cycles of caliber l at each admissible sum.
std::int64_t predicted_cycle_count(std::int64_t caliber);

struct VerifyReport {
    std::string conjecture;
    std::int64_t range_max = 0;
    std::vector<std::string> violations;
    std::int64_t cycles_checked = 0;
    double elapsed_seconds = 0.0;

    bool ok() const { return violations.empty(); }
};

/// Every even-parity cycle with 2 <= sum <= n_max must have
/// sum - 1 = (2r+1) * caliber, and r > 0 forces imprimitive forms.
VerifyReport verify_divisor_conjecture(std::int64_t n_max, const CensusOptions& opt = {});

/// At each admissible (sum, caliber) pair the observed number of even-parity
/// cycles must equal predicted_cycle_count(caliber); also checks the
/// 2^(n-2) form-count identity per sum.
VerifyReport verify_formula_conjecture(std::int64_t n_max, const CensusOptions& opt = {});

/// For every a <= a_max and every ordered pair of primitive classes of
/// discriminant a^2 - 4 composing to the order-two class of
/// (a-2, 3a-6, 2a-5): equal sums n <= a and calibers adding to n - 1.
VerifyReport verify_composition_conjecture(std::int64_t a_max);

/// Sum bounds: max sum over cycles of a^2 + 4 is a + 1 (principal cycle
/// only); over cycles of a^2 - 4 it is a (principal and the order-two class
/// exactly).
VerifyReport sum_bound_check(std::int64_t a_max);

/// Even-parity cycles with caliber < sum - 1 for all sums <= sum_max,
/// in the deterministic census order.
std::vector<CycleRecord> short_cycle_table(std::int64_t sum_max, const CensusOptions& opt = {});

/// CSV with header sum_minus_1,caliber,d,A,B,C (the paper's table layout).
std::string records_to_csv(const std::vector<CycleRecord>& records);

/// {"conjecture", "range", "violations", "cycles_checked", "elapsed"}.
std::string report_to_json(const VerifyReport& report);

namespace detail {
void check_composition_bound(std::int64_t n);
}

template <class F>
void for_each_composition(std::int64_t n, F&& fn) {
    detail::check_composition_bound(n);
    const std::uint64_t total = std::uint64_t{1} << (n - 1);
    Seq s;
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        s.clear();
        std::int64_t run = 1;
        for (std::int64_t i = 0; i + 1 < n; ++i) {
            if (mask >> i & 1) {
                s.push_back(run);
                run = 1;
            } else {
                ++run;
            }
        }
        s.push_back(run);
        fn(static_cast<const Seq&>(s));
    }
}

} // namespace zknead
