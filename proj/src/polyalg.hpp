#pragma once

#include "numeric.hpp"

#include <string>
#include <utility>
#include <vector>

namespace braidlevel::polyalg {

// Dense univariate polynomial over exact rationals; power basis is the
// canonical internal form (coeffs[i] multiplies t^i). The zero polynomial
// has an empty coefficient vector.
class RatPoly {
public:
    RatPoly() = default;
    explicit RatPoly(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }
    static RatPoly constant(Rat c);
    static RatPoly monomial(std::size_t power, Rat c = Rat(1));

    bool is_zero() const { return coeffs_.empty(); }
    // Degree of the zero polynomial is reported as -1.
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    Rat coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rat(0); }
    const std::vector<Rat>& coeffs() const { return coeffs_; }
    Rat leading() const { return is_zero() ? Rat(0) : coeffs_.back(); }

    RatPoly operator+(const RatPoly& o) const;
    RatPoly operator-(const RatPoly& o) const;
    RatPoly operator*(const RatPoly& o) const;
    RatPoly operator-() const;
    RatPoly operator*(const Rat& s) const;
    bool operator==(const RatPoly& o) const { return coeffs_ == o.coeffs_; }

    Rat eval(const Rat& x) const;
    RatPoly derivative() const;

    // Quotient and remainder of exact division; divisor must be nonzero.
    std::pair<RatPoly, RatPoly> divmod(const RatPoly& divisor) const;

    // p(alpha*t + beta).
    RatPoly compose_affine(const Rat& alpha, const Rat& beta) const;

    std::string to_string(const std::string& var = "t") const;

private:
    void normalize();
    std::vector<Rat> coeffs_;
};

enum class Basis { Power, Falling, Binomial };

// Coefficients of a polynomial in one of the three bases: power t^k,
// falling factorial (t)_k, binomial C(t,k) = (t)_k / k!.
struct BasisCoeffs {
    Basis basis = Basis::Power;
    std::vector<Rat> coeffs;
};

// (t)_n = t(t-1)...(t-n+1); (t)_0 = 1.
RatPoly falling_factorial_poly(unsigned long n);

// C(t, k) = (t)_k / k!.
RatPoly binomial_poly(unsigned long k);

BasisCoeffs to_basis(const RatPoly& p, Basis basis);
RatPoly from_basis(const BasisCoeffs& bc);

// Unique polynomial of degree < #points through all points. Throws on a
// repeated abscissa ("degenerate interpolation node").
RatPoly lagrange_interpolate(const std::vector<std::pair<Rat, Rat>>& points);

// Monic gcd; gcd(0,0) = 0.
RatPoly poly_gcd(RatPoly a, RatPoly b);

std::vector<std::string> coeff_strings(const RatPoly& p);
RatPoly poly_from_strings(const std::vector<std::string>& coeffs);

} // namespace braidlevel::polyalg
