#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>

#include "test_util.hpp"
#include "zknead/census.hpp"
#include "zknead/correspondence.hpp"

using namespace zknead;
using zknead::testing::thrown_code;

namespace {

// Exhaustive count of sequences by (alternant, parity), independent of the
// form side. A DFS over prefix products of [[q,1],[1,0]] matrices; prefix
// continuants only grow, and a valid sequence of alternant a <= a_max has
// continuant (a+B)/2 with B <= 3*(a_max^2+4)/4 among reduced coefficients,
// so capping the prefix continuant keeps the tree finite and complete.
// Keys with excluded specs ((1,1), (2,1)) pick up truncated counts; they
// are never read.
using CountKey = std::pair<std::int64_t, int>;

struct Prefix {
    std::int64_t full, drop_last, drop_first, inner;
};

void count_extensions(const Prefix& p, int parity, std::int64_t a_max, std::int64_t z_max,
                      std::map<CountKey, std::int64_t>& counts) {
    for (std::int64_t x = 1;; ++x) {
        const Prefix child{x * p.full + p.drop_last, p.full, x * p.drop_first + p.inner,
                           p.drop_first};
        if (child.full > z_max) break;
        const std::int64_t alt = child.full - child.inner;
        const int child_parity = parity ^ 1;
        if (alt <= a_max) ++counts[{alt, child_parity}];
        count_extensions(child, child_parity, a_max, z_max, counts);
    }
}

std::map<CountKey, std::int64_t> count_sequences_by_alternant(std::int64_t a_max) {
    std::map<CountKey, std::int64_t> counts;
    const std::int64_t z_max = (a_max + 3 * (a_max * a_max + 4) / 4) / 2 + 1;
    count_extensions(Prefix{1, 0, 0, 1}, 0, a_max, z_max, counts);
    return counts;
}

} // namespace

TEST_CASE("spec helpers") {
    CHECK(disc_of_spec({100, 0}) == 10004);
    CHECK(disc_of_spec({11, 0}) == 125);
    CHECK(disc_of_spec({15, 1}) == 221);
    CHECK(spec_excluded({1, 1}));
    CHECK(spec_excluded({2, 1}));
    CHECK(!spec_excluded({2, 0}));
    CHECK(thrown_code([] { validate_spec({2, 1}); }) == errc::excluded_spec);
    CHECK(thrown_code([] { validate_spec({0, 0}); }) == errc::domain_error);
}

TEST_CASE("psi worked examples") {
    CHECK(psi({44, 114, 17}, {100, 0}) == Seq{2, 2, 3, 6});
    CHECK(psi({71, 150, 44}, {100, 0}) == Seq{1, 1, 3, 5, 1, 2});
    CHECK(psi({1, 3, 1}, {3, 1}) == Seq{3});
    CHECK(psi({1, 3, 1}, {1, 0}) == Seq{1, 1});
    CHECK(thrown_code([] { psi({1, 3, 1}, {2, 1}); }) == errc::excluded_spec);
    CHECK(thrown_code([] { psi({1, 3, 1}, {4, 0}); }) == errc::discriminant_mismatch);
    CHECK(thrown_code([] { psi({1, 2, 1}, {1, 0}); }) == errc::not_reduced);
}

TEST_CASE("phi worked examples") {
    CHECK(phi({2, 2, 3, 6}) == QForm{44, 114, 17});
    CHECK(phi({11, 1}) == QForm{1, 13, 11});
    CHECK(phi({9}) == QForm{1, 9, 1});
    CHECK(thrown_code([] { phi({}); }) == errc::empty_sequence);
    CHECK(thrown_code([] { phi({1}); }) == errc::excluded_spec);
    CHECK(thrown_code([] { phi({2}); }) == errc::excluded_spec);
    CHECK(thrown_code([] { phi({1, 7, 1}); }) == errc::excluded_spec);
}

TEST_CASE("spec of a sequence") {
    CHECK(spec_of_sequence({2, 2, 3, 6}) == DiscSpec{100, 0});
    CHECK(spec_of_sequence({3}) == DiscSpec{3, 1});
    CHECK(spec_of_sequence({1, 11}) == DiscSpec{11, 0});
    CHECK(thrown_code([] { spec_of_sequence({1, 4, 1}); }) == errc::excluded_spec);
}

TEST_CASE("specs of a discriminant") {
    CHECK(specs_of_discriminant(125) == std::vector<DiscSpec>{{11, 0}});
    CHECK(specs_of_discriminant(5) == std::vector<DiscSpec>{{1, 0}, {3, 1}});
    CHECK(specs_of_discriminant(7).empty());
    CHECK(specs_of_discriminant(221) == std::vector<DiscSpec>{{15, 1}});
    CHECK(thrown_code([] { specs_of_discriminant(0); }) == errc::nonpositive_discriminant);
}

TEST_CASE("psi inverts phi on all small compositions") {
    for (std::int64_t n = 1; n <= 12; ++n) {
        for_each_composition(n, [&](const Seq& s) {
            DiscSpec spec{alternant(s), length_parity(s)};
            if (spec_excluded(spec)) return;
            QForm f = phi(s);
            CHECK(is_zagier_reduced(f));
            CHECK(discriminant(f) == disc_of_spec(spec));
            CHECK(psi(f, spec) == s);
        });
    }
}

TEST_CASE("phi inverts psi on all reduced forms of small a^2 +- 4") {
    for (std::int64_t a = 3; a <= 60; ++a) {
        for (int s = 0; s <= 1; ++s) {
            DiscSpec spec{a, s};
            for (const QForm& f : enumerate_reduced(disc_of_spec(spec))) {
                Seq q = psi(f, spec);
                CHECK(alternant(q) == a);
                CHECK(length_parity(q) == s);
                CHECK(phi(q) == f);
            }
        }
    }
}

TEST_CASE("kneading corresponds to the reduction step") {
    for (std::int64_t n = 1; n <= 12; ++n) {
        for_each_composition(n, [&](const Seq& s) {
            DiscSpec spec{alternant(s), length_parity(s)};
            if (spec_excluded(spec)) return;
            CHECK(phi(knead(s)) == reduce_step(phi(s)));
        });
    }
}

TEST_CASE("reducing number of phi(q) follows the head entry") {
    for (std::int64_t n = 1; n <= 18; ++n) {
        for_each_composition(n, [&](const Seq& s) {
            DiscSpec spec{alternant(s), length_parity(s)};
            if (spec_excluded(spec)) return;
            Int expected;
            if (s.size() >= 3) expected = s[0] + 1;
            else if (s.size() == 2) expected = s[1] >= 2 ? s[0] + 1 : s[0] + 2;
            else expected = s[0];
            CHECK(reducing_number(phi(s)) == expected);
        });
    }
}

TEST_CASE("sequence counts match reduced-form counts for every alternant up to 40") {
    auto counts = count_sequences_by_alternant(40);
    for (std::int64_t a = 1; a <= 40; ++a) {
        for (int s = 0; s <= 1; ++s) {
            if (spec_excluded({a, s})) continue;
            auto it = counts.find({a, s});
            const std::int64_t seq_count = it == counts.end() ? 0 : it->second;
            const std::int64_t form_count =
                static_cast<std::int64_t>(enumerate_reduced(disc_of_spec({a, s})).size());
            CHECK(seq_count == form_count);
        }
    }
}

TEST_CASE("form sums") {
    CHECK(form_sum({44, 114, 17}, {100, 0}) == 13);
    CHECK(form_sum({5, 15, 5}, {11, 0}) == 6);
    CHECK(form_sum({5, 30, 11}, {26, 0}) == 9);
    CHECK(form_sum({7, 34, 17}, {26, 0}) == 9);
}
