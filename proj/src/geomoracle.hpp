#pragma once

#include "arrangement.hpp"
#include "digraph.hpp"
#include "numeric.hpp"

#include <optional>
#include <vector>

namespace braidlevel::geom {

// Open difference system: lower < x_i - x_j < upper per constraint, with
// absent bounds meaning -inf / +inf. This is the geometry-side view of a
// region; nothing here reuses the digraph cycle/SCC machinery.
struct StrictSystem {
    unsigned n = 0;
    struct Constraint {
        unsigned i = 0;  // i < j, 1-based
        unsigned j = 0;
        std::optional<Rat> lower;
        std::optional<Rat> upper;
    };
    std::vector<Constraint> constraints;
};

// The system selecting, for each pair, the k-th open interval of A.
StrictSystem system_from_choices(const arrangement::ArrangementSpec& spec,
                                 const std::vector<int>& choices);

// Exact Fourier-Motzkin feasibility with strict-inequality bookkeeping: a
// derived inequality is strict iff any parent was strict, and a variable-free
// system is feasible iff no constant row contradicts.
bool fm_feasible(const StrictSystem& s);
// Same, eliminating variables in the given order (a permutation of 1..n);
// the verdict is order-independent.
bool fm_feasible_with_order(const StrictSystem& s, const std::vector<unsigned>& order);

// Dimension of the recession cone {x : x_i-x_j >= 0 for finite lowers,
// x_i-x_j <= 0 for finite uppers}: implicit equalities found by exact
// elimination, then n - rank of the equality subsystem by exact Gaussian
// elimination. Requires a feasible system.
unsigned recession_cone_dim(const StrictSystem& s);

inline BigInt default_geometric_cap() { return BigInt(1000000); }  // 1e6

// Enumerates every pair-choice system, keeps the FM-feasible ones, and bins
// them by recession-cone dimension.
digraph::LevelCensus geometric_census(const arrangement::ArrangementSpec& spec,
                                      const BigInt& cap = default_geometric_cap(),
                                      unsigned jobs = 1);

} // namespace braidlevel::geom
