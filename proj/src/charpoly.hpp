#pragma once

#include "arrangement.hpp"
#include "digraph.hpp"
#include "numeric.hpp"
#include "polyalg.hpp"

#include <string>
#include <utility>

namespace braidlevel::charpoly {

struct CharPolyResult {
    polyalg::RatPoly poly;
    std::string method;  // finite_field | whitney | closed_ab | from_census
    arrangement::ArrangementSpec spec;
};

// Checked on every engine output: monic of degree n, t divides chi for
// n >= 1, integer coefficients with alternating signs.
void validate_charpoly(const CharPolyResult& r);

inline BigInt default_ff_cap() { return BigInt(100000000); }        // 1e8
inline BigInt default_whitney_cap() { return BigInt(1) << 22; }     // 2^22

// Finite-field method: counts points of (Z_q)^n avoiding all hyperplanes mod
// q for n+1 primes q above the validity bound n*(2*max|a|+2)+1, interpolates
// exactly, and verifies against one extra prime. Rational offsets are
// cleared to integers first (same arrangement up to scaling).
CharPolyResult charpoly_finite_field(const arrangement::ArrangementSpec& spec,
                                     const BigInt& cap = default_ff_cap(), unsigned jobs = 1);

// Whitney-style signed sum over hyperplane subsets with nonempty
// intersection; consistency and intersection dimension are maintained
// exactly (one elimination pivot per added difference equation).
CharPolyResult charpoly_whitney(const arrangement::ArrangementSpec& spec,
                                const BigInt& cap = default_whitney_cap());

// chi(t) = t * sum_{k=1}^{n-1} A(n-1,k) binom(t - a(n-k) - bk - 1, n-1) for
// the arrangement with offsets [-a, b]; n in {0,1} return the conventions
// 1 and t.
CharPolyResult charpoly_closed_ab(unsigned n, unsigned long a, unsigned long b);

// Same for an arbitrary integer interval [-a, b] containing 0: when a > b
// the formula is applied to the mirror arrangement [-b, a] (x -> -x is an
// isomorphism, so chi is unchanged).
CharPolyResult charpoly_closed_interval(unsigned n, unsigned long a, unsigned long b);

// chi(t) = sum_l (-1)^{n-l} r_l binom(t, l).
CharPolyResult charpoly_from_census(const digraph::LevelCensus& census);
CharPolyResult charpoly_from_census(const digraph::LevelCensus& census,
                                    const arrangement::ArrangementSpec& spec);

// (number of regions, number of relatively bounded regions):
// r = (-1)^n chi(-1), r1 = (-1)^{n-1} chi(1).
std::pair<BigInt, BigInt> zaslavsky_counts(const CharPolyResult& r);

// chi~_{[-a,b]}(t) == chi~_{[0,b-a]}(t - a n), with the two sides computed by
// independent engines. Returns false on mismatch.
bool shift_identity_check(unsigned n, unsigned long a, unsigned long b);

// chi~_{[b]}(t) == chi~_{[0,b+1]}(t + n) for the single-offset arrangement
// A = {b}, b >= 1.
bool linial_shift_identity_check(unsigned n, unsigned long b);

// Truncated exponential-sequence identity: sum_{n<=N} chi_n(t) x^n/n! equals
// (sum_{n<=N} (-1)^n r(B_n^A) x^n/n!)^(-t) mod x^{N+1}, as polynomials in t
// coefficient-wise. The (-t)-th power is exp(-t log(series)) over truncated
// rational series.
bool esa_identity_check(const std::vector<Rat>& offsets, unsigned N,
                        const BigInt& census_cap = digraph::default_census_cap());

// chi / t for n >= 1.
polyalg::RatPoly reduced_charpoly(const polyalg::RatPoly& chi);

} // namespace braidlevel::charpoly
