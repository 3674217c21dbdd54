#pragma once

#include "numeric.hpp"
#include "polyalg.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace braidlevel::roots {

// Number of distinct real roots of p in (lo, hi]; absent bounds mean
// -inf / +inf. p is squarefree-reduced internally.
unsigned sturm_count(const polyalg::RatPoly& p, const std::optional<Rat>& lo,
                     const std::optional<Rat>& hi);

// All rational roots with multiplicities, ascending, by candidate testing
// over divisors of the cleared constant and leading coefficients;
// multiplicity by repeated exact division.
std::vector<std::pair<Rat, unsigned>> rational_roots(const polyalg::RatPoly& p);

struct IntervalCount {
    std::optional<Rat> lo;  // open end
    std::optional<Rat> hi;  // closed end
    unsigned count = 0;
};

struct RootReport {
    polyalg::RatPoly poly;
    unsigned real_root_count = 0;  // distinct, over all of R
    std::vector<std::pair<Rat, unsigned>> certified_roots;
    std::vector<IntervalCount> interval_counts;  // between consecutive certified roots
};

RootReport analyze(const polyalg::RatPoly& p);

// Interval is the arrangement with offsets [-a, b]; PositiveRange the one
// with offsets {1, ..., b}.
enum class RootFamily { Interval, PositiveRange };

// Expected real-root structure of chi: n odd -> single simple root 0;
// n even -> simple roots 0 and n(a+b+1)/2 (interval) or nb/2 (positive
// range). Hypotheses: b-a >= n-1, resp. b >= n-2; outside them the facts
// are still reported with within_hypotheses = false.
struct RootVerdict {
    RootReport report;
    bool within_hypotheses = false;
    bool verdict = false;
    std::string note;
};

RootVerdict verify_root_structure(unsigned n, unsigned long a, unsigned long b, RootFamily family);

// chi~_{[0,b]}(n(b+1) - t) == (-1)^{n-1} chi~_{[0,b]}(t), exactly.
bool symmetry_identity_check(unsigned n, unsigned long b);

} // namespace braidlevel::roots
