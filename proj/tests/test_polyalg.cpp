#include "polyalg.hpp"

#include "combinat.hpp"
#include "error.hpp"

#include <doctest.h>

#include <random>

using namespace braidlevel;
using polyalg::Basis;
using polyalg::BasisCoeffs;
using polyalg::RatPoly;

namespace {

RatPoly make_poly(std::initializer_list<long> coeffs) {
    std::vector<Rat> v;
    for (long c : coeffs) v.emplace_back(c);
    return RatPoly(std::move(v));
}

// Fixed-seed random integer polynomials for the property tests.
std::vector<RatPoly> random_polys(unsigned count, unsigned max_degree) {
    std::mt19937 rng(20240517);
    std::uniform_int_distribution<int> coeff(-9, 9);
    std::uniform_int_distribution<unsigned> deg(0, max_degree);
    std::vector<RatPoly> out;
    for (unsigned i = 0; i < count; ++i) {
        std::vector<Rat> c(deg(rng) + 1);
        for (auto& x : c) x = Rat(coeff(rng));
        out.emplace_back(std::move(c));
    }
    return out;
}

} // namespace

TEST_SUITE("polyalg") {

TEST_CASE("arithmetic basics") {
    const RatPoly t = RatPoly::monomial(1);
    CHECK(t * make_poly({-1, 1}) == make_poly({0, -1, 1}));  // t(t-1) = t^2 - t
    const RatPoly p = make_poly({21, -9, 1});
    CHECK(p + RatPoly() == p);
    CHECK(p - p == RatPoly());
    CHECK(make_poly({1, 1}) - make_poly({0, 1}) == make_poly({1}));
    // (t-3)^2 * t = t^3 - 6t^2 + 9t
    const RatPoly sq = make_poly({-3, 1}) * make_poly({-3, 1});
    CHECK(sq * t == make_poly({0, 9, -6, 1}));
}

TEST_CASE("evaluation") {
    const RatPoly chi = make_poly({0, 11, -6, 1});  // t^3 - 6t^2 + 11t
    CHECK(chi.eval(Rat(-1)) == Rat(-18));
    CHECK(chi.eval(Rat(1)) == Rat(6));
    CHECK(make_poly({7, 3, 2}).eval(Rat(0)) == Rat(7));
}

TEST_CASE("falling factorial expansion") {
    CHECK(polyalg::falling_factorial_poly(0) == make_poly({1}));
    CHECK(polyalg::falling_factorial_poly(2) == make_poly({0, -1, 1}));
    CHECK(polyalg::falling_factorial_poly(3) == make_poly({0, 2, -3, 1}));
    // coefficients are the signed Stirling numbers
    for (unsigned n = 0; n <= 8; ++n) {
        const RatPoly ff = polyalg::falling_factorial_poly(n);
        for (unsigned k = 0; k <= n; ++k)
            CHECK(ff.coeff(k) == Rat(combinat::stirling_first_signed(n, k)));
    }
}

TEST_CASE("binomial basis of the worked example") {
    const RatPoly chi = make_poly({0, 11, -6, 1});
    const auto bc = polyalg::to_basis(chi, Basis::Binomial);
    REQUIRE(bc.coeffs.size() == 4);
    CHECK(bc.coeffs[0] == 0);
    CHECK(bc.coeffs[1] == 6);
    CHECK(bc.coeffs[2] == -6);
    CHECK(bc.coeffs[3] == 6);
    CHECK(polyalg::from_basis(bc) == chi);
}

TEST_CASE("binomial basis second example") {
    // t^3 - 3t^2 + 3t = (t)_3 + (t)_1 -> binomial coefficients (0, 1, 0, 6)
    const RatPoly p = make_poly({0, 3, -3, 1});
    const auto bc = polyalg::to_basis(p, Basis::Binomial);
    REQUIRE(bc.coeffs.size() == 4);
    CHECK(bc.coeffs[0] == 0);
    CHECK(bc.coeffs[1] == 1);
    CHECK(bc.coeffs[2] == 0);
    CHECK(bc.coeffs[3] == 6);
}

TEST_CASE("falling basis unit vectors") {
    for (unsigned n = 0; n <= 6; ++n) {
        const auto bc = polyalg::to_basis(polyalg::falling_factorial_poly(n), Basis::Falling);
        for (unsigned k = 0; k < bc.coeffs.size(); ++k)
            CHECK(bc.coeffs[k] == (k == n ? Rat(1) : Rat(0)));
    }
    BasisCoeffs unit;
    unit.basis = Basis::Falling;
    unit.coeffs = {Rat(0), Rat(0), Rat(0), Rat(1)};
    CHECK(polyalg::from_basis(unit) == make_poly({0, 2, -3, 1}));
}

TEST_CASE("stirling expansion of t^n as identity") {
    // t^n == sum_k S(n,k) (t)_k for n <= 8
    for (unsigned n = 0; n <= 8; ++n) {
        BasisCoeffs bc;
        bc.basis = Basis::Falling;
        for (unsigned k = 0; k <= n; ++k) bc.coeffs.emplace_back(combinat::stirling_second(n, k));
        CHECK(polyalg::from_basis(bc) == RatPoly::monomial(n));
    }
}

TEST_CASE("basis round trips on random polynomials") {
    for (const auto& p : random_polys(60, 8))
        for (Basis basis : {Basis::Power, Basis::Falling, Basis::Binomial})
            CHECK(polyalg::from_basis(polyalg::to_basis(p, basis)) == p);
}

TEST_CASE("lagrange interpolation") {
    // four exact samples of the worked-example chi
    const RatPoly chi = make_poly({0, 11, -6, 1});
    std::vector<std::pair<Rat, Rat>> pts;
    for (long x : {0L, 1L, 2L, 5L}) pts.emplace_back(Rat(x), chi.eval(Rat(x)));
    CHECK(polyalg::lagrange_interpolate(pts) == chi);

    CHECK(polyalg::lagrange_interpolate({{Rat(0), Rat(42)}}) == make_poly({42}));
    CHECK(polyalg::lagrange_interpolate({{Rat(1), Rat(1)}, {Rat(2), Rat(4)}, {Rat(3), Rat(9)}}) ==
          RatPoly::monomial(2));

    CHECK_THROWS_WITH_AS(polyalg::lagrange_interpolate({{Rat(1), Rat(1)}, {Rat(1), Rat(2)}}),
                         "degenerate interpolation node", Error);
}

TEST_CASE("lagrange recovers random polynomials from exact samples") {
    for (const auto& p : random_polys(25, 6)) {
        std::vector<std::pair<Rat, Rat>> pts;
        for (long x = 0; x <= p.degree(); ++x) pts.emplace_back(Rat(x), p.eval(Rat(x)));
        if (pts.empty()) pts.emplace_back(Rat(0), Rat(0));  // zero polynomial
        CHECK(polyalg::lagrange_interpolate(pts) == p);
    }
}

TEST_CASE("affine composition") {
    CHECK(make_poly({-3, 1}).compose_affine(Rat(1), Rat(-2)) == make_poly({-5, 1}));
    const RatPoly p = make_poly({4, -2, 7, 1});
    CHECK(p.compose_affine(Rat(1), Rat(0)) == p);
    CHECK(RatPoly::monomial(2).compose_affine(Rat(1), Rat(1)) == make_poly({1, 2, 1}));
    // p(2-t) composed twice returns p
    CHECK(p.compose_affine(Rat(-1), Rat(2)).compose_affine(Rat(-1), Rat(2)) == p);
}

TEST_CASE("division and gcd") {
    const RatPoly num = make_poly({0, 9, -6, 1});
    auto [q, r] = num.divmod(make_poly({-3, 1}));
    CHECK(r.is_zero());
    CHECK(q == make_poly({0, -3, 1}));
    CHECK(polyalg::poly_gcd(make_poly({0, -3, 1}) * make_poly({-3, 1}), make_poly({-3, 1})) ==
          make_poly({-3, 1}));
}

TEST_CASE("readable rendering") {
    CHECK(make_poly({0, 11, -6, 1}).to_string() == "t^3 - 6*t^2 + 11*t");
    CHECK(make_poly({-1, 1}).to_string() == "t - 1");
    CHECK(RatPoly().to_string() == "0");
    CHECK(RatPoly({make_rat(1, 2)}).to_string() == "1/2");
    CHECK(make_poly({0, -1}).to_string() == "-t");
}

TEST_CASE("coefficient serialization round trip") {
    const RatPoly p = RatPoly({make_rat(1, 2), Rat(-3), Rat(0), Rat(5)});
    const auto strings = polyalg::coeff_strings(p);
    CHECK(strings == std::vector<std::string>{"1/2", "-3", "0", "5"});
    CHECK(polyalg::poly_from_strings(strings) == p);
    CHECK(polyalg::coeff_strings(RatPoly()) == std::vector<std::string>{"0"});
}

} // TEST_SUITE
