#pragma once

#include "digraph.hpp"
#include "numeric.hpp"

#include <vector>

namespace braidlevel::levels {

// r_1(B_n^A) for n = 1..N of one offset family; feeds the convolution and
// generating-function identities.
struct R1Table {
    std::vector<Rat> offsets;
    std::vector<BigInt> values;  // values[n] = r_1(B_n^A); index 0 unused (0)

    unsigned max_n() const { return values.empty() ? 0 : static_cast<unsigned>(values.size() - 1); }
};

R1Table make_r1_table(const std::vector<Rat>& offsets, unsigned N,
                      const BigInt& cap = digraph::default_census_cap(), unsigned jobs = 1);

// Multinomial convolution over compositions of n into l positive parts:
// r_l(B_n) = sum binom(n; n_1..n_l) prod r_1(B_{n_i}).
BigInt rl_from_r1(unsigned n, unsigned l, const R1Table& table);

// r_l(B_n) == sum_i binom(n,i) r_k(B_i) r_{l-k}(B_{n-i}), exactly.
// censuses[i] must hold the census of B_i^A for i = 0..n.
bool convolution_identity_check(unsigned n, unsigned l, unsigned k,
                                const std::vector<digraph::LevelCensus>& censuses);

// Triple-sum closed form for r_l(B_n^{[-a,b]}); n in {0,1} by convention.
BigInt rl_closed_ab(unsigned n, unsigned l, unsigned long a, unsigned long b);

// As above for any integer interval containing 0; a > b goes through the
// mirror arrangement [-b, a], which has the same level counts.
BigInt rl_closed_interval(unsigned n, unsigned l, unsigned long a, unsigned long b);

enum class Family { Linial, Shi, Catalan };

// Closed formulas for the extended Linial / Shi / Catalan families. The
// Linial case uses the corrected form with a binom(n-1,j) factor inside the
// j-sum; the printed form (rl_linial_printed) is kept for documentation and
// is non-integral already at n=3, l=1, b=1.
BigInt rl_family(Family family, unsigned n, unsigned l, unsigned long b);
Rat rl_linial_printed(unsigned n, unsigned l, unsigned long b);

// Truncated exponential generating function, coefficients of x^n.
struct EgfSeries {
    std::vector<Rat> coeffs;
};

EgfSeries egf_mul(const EgfSeries& a, const EgfSeries& b, unsigned N);
// R_1(A;x) truncated at x^N from the table.
EgfSeries egf_r1(const R1Table& table, unsigned N);
// R_l = R_1^l truncated at x^N.
EgfSeries egf_truncated(unsigned l, unsigned N, const R1Table& table);
// n! * [x^n]; the series used here always have integral such values.
BigInt egf_value(const EgfSeries& s, unsigned n);

} // namespace braidlevel::levels
