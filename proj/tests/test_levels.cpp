#include "levels.hpp"

#include "arrangement.hpp"
#include "digraph.hpp"
#include "error.hpp"

#include <doctest.h>

using namespace braidlevel;
using arrangement::make_preset;
using arrangement::make_spec;
using arrangement::Preset;
using levels::Family;

namespace {

std::vector<Rat> rats(std::initializer_list<long> xs) {
    std::vector<Rat> out;
    for (long x : xs) out.emplace_back(x);
    return out;
}

levels::R1Table table_for(std::vector<Rat> offsets, unsigned N) {
    return levels::make_r1_table(offsets, N);
}

std::vector<digraph::LevelCensus> censuses_up_to(const std::vector<Rat>& offsets, unsigned N) {
    std::vector<digraph::LevelCensus> out;
    for (unsigned i = 0; i <= N; ++i) {
        arrangement::ArrangementSpec spec;
        if (i > 0) spec = make_spec(i, offsets);
        out.push_back(digraph::enumerate_census(spec));
    }
    return out;
}

} // namespace

TEST_SUITE("levels") {

TEST_CASE("r1 tables from Zaslavsky") {
    const auto shi = table_for(rats({0, 1}), 4);
    CHECK(shi.values[1] == 1);
    CHECK(shi.values[2] == 1);
    CHECK(shi.values[3] == 4);   // chi(1) of t(t-3)^2 is 4
    CHECK(shi.values[4] == 27);  // t(t-4)^3 at 1

    const auto worked = table_for(rats({1, 2}), 3);
    CHECK(worked.values[3] == 6);
}

TEST_CASE("multinomial convolution reproduces the census") {
    const auto worked = table_for(rats({1, 2}), 3);
    CHECK(levels::rl_from_r1(3, 3, worked) == 6);
    CHECK(levels::rl_from_r1(3, 2, worked) == 6);
    CHECK(levels::rl_from_r1(3, 1, worked) == 6);

    // n parts of size one: n! * r_1(B_1)^n = n!
    for (auto offsets : {rats({0, 1}), rats({1, 2})}) {
        const auto table = table_for(offsets, 4);
        CHECK(levels::rl_from_r1(4, 4, table) == factorial(4));
    }

    const auto shi = table_for(rats({0, 1}), 3);
    CHECK(levels::rl_from_r1(3, 1, shi) == 4);

    CHECK_THROWS_AS(levels::rl_from_r1(5, 2, shi), Error);
}

TEST_CASE("convolution against full censuses") {
    for (auto offsets : {rats({0, 1}), rats({1, 2}), rats({-1, 0, 1})}) {
        const auto cs = censuses_up_to(offsets, 4);
        for (unsigned n = 0; n <= 4; ++n)
            for (unsigned l = 0; l <= n; ++l)
                for (unsigned k = 0; k <= l; ++k)
                    CHECK(levels::convolution_identity_check(n, l, k, cs));
    }
}

TEST_CASE("triple-sum closed form") {
    CHECK(levels::rl_closed_ab(3, 1, 0, 1) == 4);
    CHECK(levels::rl_closed_ab(3, 2, 0, 1) == 6);
    CHECK(levels::rl_closed_ab(3, 3, 0, 1) == 6);
    CHECK(levels::rl_closed_ab(2, 1, 1, 1) == 2);
    CHECK(levels::rl_closed_ab(0, 0, 0, 1) == 1);
    CHECK(levels::rl_closed_ab(1, 1, 0, 2) == 1);
    CHECK(levels::rl_closed_ab(1, 0, 0, 2) == 0);
    CHECK_THROWS_AS(levels::rl_closed_ab(3, 1, 2, 1), Error);
}

TEST_CASE("triple-sum closed form equals census on interval sweeps") {
    for (unsigned n = 2; n <= 4; ++n)
        for (unsigned long b = 0; b <= 2; ++b)
            for (unsigned long a = 0; a <= b; ++a) {
                const auto census =
                    digraph::enumerate_census(make_preset(Preset::Interval, n, a, b));
                for (unsigned l = 0; l <= n; ++l)
                    CHECK(levels::rl_closed_ab(n, l, a, b) == census.counts[l]);
            }
}

TEST_CASE("family formulas at b=1 against the census") {
    // Shi(1), n=3: (4, 6, 6)
    CHECK(levels::rl_family(Family::Shi, 3, 1, 1) == 4);
    CHECK(levels::rl_family(Family::Shi, 3, 2, 1) == 6);
    CHECK(levels::rl_family(Family::Shi, 3, 3, 1) == 6);
    // Catalan(1), n=3: (12, 12, 6), total 30
    CHECK(levels::rl_family(Family::Catalan, 3, 1, 1) == 12);
    CHECK(levels::rl_family(Family::Catalan, 3, 2, 1) == 12);
    CHECK(levels::rl_family(Family::Catalan, 3, 3, 1) == 6);
    // Linial(1), n=3 with the corrected formula: (1, 0, 6), total 7
    CHECK(levels::rl_family(Family::Linial, 3, 1, 1) == 1);
    CHECK(levels::rl_family(Family::Linial, 3, 2, 1) == 0);
    CHECK(levels::rl_family(Family::Linial, 3, 3, 1) == 6);

    for (auto family : {Family::Shi, Family::Catalan, Family::Linial}) {
        const Preset preset = family == Family::Shi      ? Preset::Shi
                              : family == Family::Catalan ? Preset::Catalan
                                                          : Preset::Linial;
        for (unsigned n = 2; n <= 4; ++n) {
            const auto census = digraph::enumerate_census(make_preset(preset, n, {}, 1));
            for (unsigned l = 0; l <= n; ++l)
                CHECK(levels::rl_family(family, n, l, 1) == census.counts[l]);
        }
    }
}

TEST_CASE("family formulas translate to interval parameters") {
    for (unsigned n = 2; n <= 4; ++n)
        for (unsigned long b = 1; b <= 2; ++b)
            for (unsigned l = 0; l <= n; ++l) {
                CHECK(levels::rl_family(Family::Shi, n, l, b) ==
                      levels::rl_closed_ab(n, l, b - 1, b));
                CHECK(levels::rl_family(Family::Catalan, n, l, b) ==
                      levels::rl_closed_ab(n, l, b, b));
                if (b >= 2)
                    CHECK(levels::rl_family(Family::Linial, n, l, b) ==
                          levels::rl_closed_ab(n, l, b - 2, b));
            }
}

TEST_CASE("printed extended-Linial formula is non-integral") {
    const Rat printed = levels::rl_linial_printed(3, 1, 1);
    CHECK(printed == make_rat(20, 8));
    CHECK_FALSE(is_integer(printed));
    // and where the missing factor is invisible (n = 2) both forms agree
    for (unsigned l = 0; l <= 2; ++l)
        CHECK(levels::rl_linial_printed(2, l, 1) == Rat(levels::rl_family(Family::Linial, 2, l, 1)));
}

TEST_CASE("level counts are non-negative integers across sweeps") {
    for (unsigned n = 0; n <= 5; ++n)
        for (unsigned l = 0; l <= n + 1; ++l) {
            CHECK(levels::rl_closed_ab(n, l, 1, 2) >= 0);
            CHECK(levels::rl_family(Family::Shi, n, l, 2) >= 0);
            CHECK(levels::rl_family(Family::Catalan, n, l, 2) >= 0);
            CHECK(levels::rl_family(Family::Linial, n, l, 2) >= 0);
        }
}

TEST_CASE("truncated generating functions") {
    const auto worked = table_for(rats({1, 2}), 3);
    const auto r1 = levels::egf_truncated(1, 3, worked);
    for (unsigned n = 1; n <= 3; ++n) CHECK(levels::egf_value(r1, n) == worked.values[n]);

    const auto r2 = levels::egf_truncated(2, 3, worked);
    CHECK(levels::egf_value(r2, 3) == 6);

    // R_l = R_k R_{l-k} at truncation 4 for Shi(1)
    const auto shi = table_for(rats({0, 1}), 4);
    for (unsigned l = 1; l <= 4; ++l) {
        const auto rl = levels::egf_truncated(l, 4, shi);
        for (unsigned k = 0; k <= l; ++k) {
            const auto prod =
                levels::egf_mul(levels::egf_truncated(k, 4, shi),
                                levels::egf_truncated(l - k, 4, shi), 4);
            CHECK(rl.coeffs == prod.coeffs);
        }
    }

    // and the coefficients match the census levels
    const auto cs = censuses_up_to(rats({0, 1}), 4);
    for (unsigned l = 1; l <= 4; ++l) {
        const auto rl = levels::egf_truncated(l, 4, shi);
        for (unsigned n = 0; n <= 4; ++n)
            CHECK(levels::egf_value(rl, n) ==
                  (l < cs[n].counts.size() ? cs[n].counts[l] : BigInt(0)));
    }
}

TEST_CASE("total regions equal the sum of level counts") {
    for (auto offsets : {rats({0, 1}), rats({1, 2})}) {
        const auto table = table_for(offsets, 4);
        const auto census = digraph::enumerate_census(make_spec(4, offsets));
        BigInt sum(0);
        for (unsigned l = 1; l <= 4; ++l) sum += levels::rl_from_r1(4, l, table);
        CHECK(sum == census.total());
    }
}

} // TEST_SUITE
