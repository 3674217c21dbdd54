#include "roots.hpp"

#include "charpoly.hpp"
#include "error.hpp"
#include "polyalg.hpp"

#include <doctest.h>

using namespace braidlevel;
using polyalg::RatPoly;
using roots::RootFamily;

namespace {

RatPoly make_poly(std::initializer_list<long> coeffs) {
    std::vector<Rat> v;
    for (long c : coeffs) v.emplace_back(c);
    return RatPoly(std::move(v));
}

} // namespace

TEST_SUITE("roots") {

TEST_CASE("sturm counts") {
    CHECK(roots::sturm_count(make_poly({21, -9, 1}), std::nullopt, std::nullopt) == 0);
    CHECK(roots::sturm_count(make_poly({0, -2, 1}), std::nullopt, std::nullopt) == 2);
    CHECK(roots::sturm_count(make_poly({0, 11, -6, 1}), std::nullopt, std::nullopt) == 1);
    // squarefree reduction: (t-1)^3 t^2 has two distinct roots
    const RatPoly p =
        make_poly({-1, 1}) * make_poly({-1, 1}) * make_poly({-1, 1}) * RatPoly::monomial(2);
    CHECK(roots::sturm_count(p, std::nullopt, std::nullopt) == 2);
    CHECK_THROWS_AS(roots::sturm_count(RatPoly(), std::nullopt, std::nullopt), Error);
}

TEST_CASE("sturm counts over half-open intervals") {
    const RatPoly p = make_poly({0, -2, 1});  // roots 0 and 2
    CHECK(roots::sturm_count(p, Rat(-1), Rat(0)) == 1);   // (-1, 0] catches 0
    CHECK(roots::sturm_count(p, Rat(0), Rat(2)) == 1);    // (0, 2] catches 2
    CHECK(roots::sturm_count(p, Rat(0), Rat(1)) == 0);
    CHECK(roots::sturm_count(p, std::nullopt, Rat(-1)) == 0);
    CHECK(roots::sturm_count(p, Rat(2), std::nullopt) == 0);
    CHECK(roots::sturm_count(p, Rat(5), Rat(3)) == 0);
}

TEST_CASE("sturm count agrees with a sign-grid scan") {
    // polynomials with known integer roots; scan a fine grid for sign changes
    const std::vector<RatPoly> polys = {
        make_poly({0, -2, 1}),
        make_poly({-6, 11, -6, 1}),         // (t-1)(t-2)(t-3)
        make_poly({0, 11, -6, 1}),          // one real root
        make_poly({21, -9, 1}),             // rootless
        make_poly({-1, 0, 1}) * make_poly({5, 1}),
    };
    for (const auto& p : polys) {
        unsigned grid_roots = 0;
        const Rat step = make_rat(1, 4);
        Rat prev_x(-10);
        int prev_sign = sgn(p.eval(prev_x));
        for (Rat x = prev_x + step; x <= Rat(10); x += step) {
            const int s = sgn(p.eval(x));
            if (s == 0)
                ++grid_roots;  // grid hit the root exactly
            else if (prev_sign != 0 && s != prev_sign)
                ++grid_roots;  // sign change across the cell
            prev_sign = s;
        }
        CHECK(roots::sturm_count(p, Rat(-10), Rat(10)) == grid_roots);
    }
}

TEST_CASE("rational roots with multiplicities") {
    const auto rr = roots::rational_roots(make_poly({0, 9, -6, 1}));  // t(t-3)^2
    REQUIRE(rr.size() == 2);
    CHECK(rr[0] == std::make_pair(Rat(0), 1u));
    CHECK(rr[1] == std::make_pair(Rat(3), 2u));

    // leading coefficient 2: half-integer root
    const auto half = roots::rational_roots(make_poly({-1, 2}));
    REQUIRE(half.size() == 1);
    CHECK(half[0].first == make_rat(1, 2));

    CHECK(roots::rational_roots(make_poly({21, -9, 1})).empty());
}

TEST_CASE("analyze produces isolating intervals") {
    const auto report = roots::analyze(make_poly({0, -2, 1}));
    CHECK(report.real_root_count == 2);
    REQUIRE(report.certified_roots.size() == 2);
    REQUIRE(report.interval_counts.size() == 3);
    CHECK(report.interval_counts[0].count == 1);
    CHECK(report.interval_counts[1].count == 1);
    CHECK(report.interval_counts[2].count == 0);
}

TEST_CASE("root structure on small cases") {
    const auto shi2 = roots::verify_root_structure(2, 0, 1, RootFamily::Interval);
    CHECK(shi2.within_hypotheses);
    CHECK(shi2.verdict);
    REQUIRE(shi2.report.certified_roots.size() == 2);
    CHECK(shi2.report.certified_roots[0].first == Rat(0));
    CHECK(shi2.report.certified_roots[1].first == Rat(2));

    const auto odd = roots::verify_root_structure(3, 0, 2, RootFamily::Interval);
    CHECK(odd.within_hypotheses);
    CHECK(odd.verdict);
    REQUIRE(odd.report.certified_roots.size() == 1);
    CHECK(odd.report.certified_roots[0].first == Rat(0));

    const auto single = roots::verify_root_structure(2, 0, 1, RootFamily::PositiveRange);
    CHECK(single.within_hypotheses);
    CHECK(single.verdict);
    REQUIRE(single.report.certified_roots.size() == 2);
    CHECK(single.report.certified_roots[1].first == Rat(1));  // nb/2
}

TEST_CASE("root structure sweeps within hypotheses") {
    for (unsigned n = 2; n <= 5; ++n)
        for (unsigned long b = 0; b <= 4; ++b) {
            for (unsigned long a = 0; a <= b; ++a)
                if (b - a >= n - 1) {
                    const auto v = roots::verify_root_structure(n, a, b, RootFamily::Interval);
                    CHECK(v.within_hypotheses);
                    CHECK(v.verdict);
                }
            if (b >= 1 && b + 2 >= n) {
                const auto v = roots::verify_root_structure(n, 0, b, RootFamily::PositiveRange);
                CHECK(v.within_hypotheses);
                CHECK(v.verdict);
            }
        }
}

TEST_CASE("outside the hypotheses the facts are still reported") {
    // Catalan(1) at n=3: b-a = 0 < n-1.
    const auto v = roots::verify_root_structure(3, 1, 1, RootFamily::Interval);
    CHECK_FALSE(v.within_hypotheses);
    CHECK(v.note == "outside theorem hypotheses");
    CHECK(v.report.real_root_count >= 1);
}

TEST_CASE("symmetry identity") {
    CHECK(roots::symmetry_identity_check(3, 1));  // (t-3)^2 about 3
    CHECK(roots::symmetry_identity_check(2, 1));  // t-2 antisymmetric about 2
    CHECK(roots::symmetry_identity_check(3, 2));  // t^2-9t+21 about 9/2
    for (unsigned n = 2; n <= 6; ++n)
        for (unsigned long b = 0; b <= 4; ++b) CHECK(roots::symmetry_identity_check(n, b));
}

TEST_CASE("chi vanishes at zero for n >= 1") {
    for (unsigned n = 1; n <= 5; ++n)
        for (unsigned long b = 0; b <= 3; ++b)
            CHECK(charpoly::charpoly_closed_ab(n, 0, b).poly.eval(Rat(0)) == 0);
}

} // TEST_SUITE
