#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <set>

#include "json.hpp"
#include "test_util.hpp"
#include "zknead/census.hpp"

using namespace zknead;
using zknead::testing::thrown_code;

namespace {

bool records_equal(const std::vector<CycleRecord>& a, const std::vector<CycleRecord>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i].sum != b[i].sum || a[i].caliber != b[i].caliber || a[i].parity != b[i].parity ||
            a[i].alternant != b[i].alternant || a[i].content != b[i].content ||
            !(a[i].primitive == b[i].primitive) || a[i].representative != b[i].representative)
            return false;
    return true;
}

Seq expected_order2_member(std::int64_t a, std::int64_t j) {
    // cycle of (2, a-3, 1): j = 0, 1, then (1, a-2-j, 1, j-1, 1)
    if (j == 0) return {2, a - 3, 1};
    if (j == 1) return {1, a - 3, 2};
    return {1, a - 2 - j, 1, j - 1, 1};
}

} // namespace

TEST_CASE("compositions") {
    auto all = compositions(3);
    CHECK(all.size() == 4);
    std::set<Seq> got(all.begin(), all.end());
    CHECK(got == std::set<Seq>{{3}, {1, 2}, {2, 1}, {1, 1, 1}});
    CHECK(compositions(10).size() == 512);
    CHECK(compositions(1) == std::vector<Seq>{{1}});
    CHECK(thrown_code([] { compositions(0); }) == errc::domain_error);
    CHECK(thrown_code([] { compositions(41); }) == errc::domain_error);
}

TEST_CASE("kernel census matches the serial reference") {
    for (std::int64_t n : {1, 2, 3, 7, 12, 14}) {
        auto reference = cycle_census_serial(n);
        CHECK(records_equal(reference, cycle_census(n)));
        for (int workers : {1, 2, 3}) {
            CensusOptions opt;
            opt.workers = workers;
            CHECK(records_equal(reference, cycle_census(n, opt)));
        }
        for (int parity : {0, 1}) {
            CensusOptions opt;
            opt.parity = parity;
            CHECK(records_equal(cycle_census_serial(n, opt), cycle_census(n, opt)));
        }
    }
}

TEST_CASE("census of n = 4, even parity") {
    auto records = cycle_census(4, CensusOptions{.parity = 0, .workers = 0});
    REQUIRE(records.size() == 2);
    CHECK(records[0].caliber == 1);
    CHECK(records[0].representative == Seq{2, 2});
    CHECK(records[0].alternant == 4);
    CHECK(records[0].content == 2);
    CHECK(records[0].primitive == QForm{1, 3, 1});
    CHECK(records[1].caliber == 3);
    CHECK(records[1].representative == Seq{1, 1, 1, 1});
    CHECK(records[1].alternant == 3);
    CHECK(records[1].content == 1);
    CHECK(records[1].primitive == QForm{1, 5, 3});
}

TEST_CASE("census records carry consistent invariants") {
    for (std::int64_t n : {6, 9, 11}) {
        for (const CycleRecord& rec : cycle_census(n)) {
            CHECK(seq_sum(rec.representative) == n);
            CHECK(length_parity(rec.representative) == rec.parity);
            CHECK(alternant(rec.representative) == rec.alternant);
            auto orbit = kneading_cycle(rec.representative);
            CHECK(static_cast<std::int64_t>(orbit.size()) == rec.caliber);
            for (const Seq& member : orbit) {
                CHECK(!seq_less(member, rec.representative));
                CHECK(alternant(member) == rec.alternant);
                CHECK(length_parity(member) == rec.parity);
            }
            if (rec.has_form()) {
                // the stored form is the smallest-B member of the form cycle
                QForm scaled{rec.primitive.A * rec.content, rec.primitive.B * rec.content,
                             rec.primitive.C * rec.content};
                CHECK(canonical_cycle_form(phi(rec.representative)) == scaled);
                CHECK(content(scaled) == rec.content);
            } else {
                CHECK(rec.parity == 1);
                CHECK((rec.alternant == 1 || rec.alternant == 2));
            }
        }
    }
}

TEST_CASE("census partitions the composition space") {
    for (std::int64_t n = 1; n <= 14; ++n) {
        std::int64_t total = 0, even = 0;
        for (const CycleRecord& rec : cycle_census(n)) {
            total += rec.caliber;
            if (rec.parity == 0) even += rec.caliber;
        }
        CHECK(total == std::int64_t{1} << (n - 1));
        if (n >= 2) CHECK(even == std::int64_t{1} << (n - 2));
    }
}

TEST_CASE("the worked cycles appear in their censuses") {
    auto c13 = cycle_census(13, CensusOptions{.parity = 0, .workers = 0});
    bool found12 = false;
    for (const auto& rec : c13)
        if (rec.caliber == 12 && rec.representative == Seq{1, 1, 1, 1, 2, 3, 3, 1}) found12 = true;
    CHECK(found12);

    // both alternant-11 cycles: the 11-cycle has sum 12, the fixed sequence sum 6
    auto c12 = cycle_census(12, CensusOptions{.parity = 0, .workers = 0});
    bool found11 = false;
    for (const auto& rec : c12)
        if (rec.caliber == 11 && rec.representative == Seq{1, 1, 9, 1} && rec.alternant == 11)
            found11 = true;
    CHECK(found11);

    bool found_fixed = false;
    for (const auto& rec : cycle_census(6, CensusOptions{.parity = 0, .workers = 0}))
        if (rec.caliber == 1 && rec.representative == Seq{2, 1, 1, 2} && rec.alternant == 11)
            found_fixed = true;
    CHECK(found_fixed);
}

TEST_CASE("mobius") {
    CHECK(mobius(1) == 1);
    CHECK(mobius(6) == 1);
    CHECK(mobius(12) == 0);
    CHECK(mobius(30) == -1);
    CHECK(thrown_code([] { mobius(0); }) == errc::domain_error);
}

TEST_CASE("predicted cycle counts") {
    CHECK(predicted_cycle_count(1) == 1);
    CHECK(predicted_cycle_count(2) == 1);
    CHECK(predicted_cycle_count(3) == 1);
    CHECK(predicted_cycle_count(4) == 2);
    CHECK(predicted_cycle_count(5) == 3);
    CHECK(predicted_cycle_count(6) == 5);
    CHECK(predicted_cycle_count(7) == 9);
    CHECK(predicted_cycle_count(8) == 16);
}

TEST_CASE("verifiers pass on small ranges") {
    auto divisor = verify_divisor_conjecture(13);
    CHECK(divisor.ok());
    CHECK(divisor.cycles_checked > 0);
    CHECK(verify_formula_conjecture(14).ok());
    CHECK(verify_composition_conjecture(20).ok());
    CHECK(sum_bound_check(40).ok());
}

TEST_CASE("short cycle table matches the published rows up to sum 16") {
    using Row = std::tuple<std::int64_t, std::int64_t, std::int64_t, std::int64_t, std::int64_t,
                           std::int64_t>;
    const std::vector<Row> published{
        {3, 1, 2, 1, 3, 1},    {5, 1, 5, 1, 3, 1},    {6, 2, 5, 1, 4, 2},
        {7, 1, 13, 1, 3, 1},   {9, 1, 34, 1, 3, 1},   {9, 3, 10, 1, 5, 3},
        {10, 2, 29, 1, 4, 2},  {11, 1, 89, 1, 3, 1},  {12, 4, 17, 1, 6, 4},
        {12, 4, 37, 2, 8, 3},  {13, 1, 233, 1, 3, 1}, {14, 2, 169, 1, 4, 2},
        {15, 1, 610, 1, 3, 1}, {15, 3, 109, 1, 5, 3}, {15, 5, 130, 1, 5, 2},
        {15, 5, 26, 1, 7, 5},  {15, 5, 82, 3, 11, 3}};
    std::multiset<Row> expected(published.begin(), published.end());
    std::multiset<Row> got;
    for (const CycleRecord& rec : short_cycle_table(16))
        got.insert({rec.sum - 1, rec.caliber, rec.content, to_int64_checked(rec.primitive.A),
                    to_int64_checked(rec.primitive.B), to_int64_checked(rec.primitive.C)});
    CHECK(got == expected);
}

TEST_CASE("principal kneading cycle pattern") {
    for (std::int64_t a = 3; a <= 100; ++a) {
        std::vector<Seq> expected{{a, 1}, {1, a}};
        for (std::int64_t k = 2; k <= a - 1; ++k) expected.push_back({1, a - k, k - 1, 1});
        CHECK(kneading_cycle({a, 1}) == expected);
        CHECK(phi(Seq{a, 1}) == QForm{1, a + 2, a});
    }
}

TEST_CASE("order-two kneading cycle pattern") {
    for (std::int64_t a = 5; a <= 100; ++a) {
        auto orbit = kneading_cycle({2, a - 3, 1});
        REQUIRE(static_cast<std::int64_t>(orbit.size()) == a - 2);
        for (std::int64_t j = 0; j < a - 2; ++j) CHECK(orbit[j] == expected_order2_member(a, j));
    }
    CHECK(kneading_cycle({2, 1, 1}) == std::vector<Seq>{{2, 1, 1}, {1, 1, 2}});
}

TEST_CASE("square-root-of-order-two kneading cycle pattern") {
    for (std::int64_t k = 3; k <= 40; ++k) {
        if (k % 3 == 2) continue;
        auto orbit = kneading_cycle({k, k - 1, 2});
        REQUIRE(static_cast<std::int64_t>(orbit.size()) == k);
        CHECK(orbit[1] == Seq{1, k - 2, 1, 1, k});
        for (std::int64_t j = 2; j <= k - 2; ++j)
            CHECK(orbit[j] == Seq{1, k - 1 - j, 1, 1, k - 1, j - 1, 1});
        CHECK(orbit[k - 1] == Seq{2, 1, k - 1, k - 2, 1});
        CHECK(phi(orbit[0]) == QForm{2 * k - 1, 2 * k * k + 1, k * k - k + 1});
        CHECK(seq_sum(orbit[0]) == 2 * k + 1);
    }
}

TEST_CASE("csv output") {
    auto records = cycle_census(4, CensusOptions{.parity = 0, .workers = 0});
    std::string csv = records_to_csv(records);
    CHECK(csv == "sum_minus_1,caliber,d,A,B,C\n3,1,2,1,3,1\n3,3,1,1,5,3\n");
}

TEST_CASE("json report") {
    auto rep = verify_divisor_conjecture(8);
    auto parsed = nlohmann::json::parse(report_to_json(rep));
    CHECK(parsed["conjecture"] == "divisor");
    CHECK(parsed["range"] == 8);
    CHECK(parsed["violations"].empty());
    CHECK(parsed["cycles_checked"].get<std::int64_t>() > 0);
    CHECK(parsed.contains("elapsed"));
}

TEST_CASE("census bounds") {
    CHECK(thrown_code([] { cycle_census(0); }) == errc::domain_error);
    CHECK(thrown_code([] { cycle_census(41); }) == errc::domain_error);
}
