#pragma once

#include "numeric.hpp"

#include <functional>
#include <vector>

namespace braidlevel::combinat {

// Arbitrary-precision combinatorial numbers. All tables are filled by
// recurrence behind a lock and cached process-wide; reads after fill are
// plain lookups, so concurrent use is safe.

// C(n, k); 0 when k > n.
BigInt binomial(unsigned long n, unsigned long k);

// Eulerian number A(n, k): permutations of [n] with exactly k-1 descents.
// NOTE: 1-based in k (A(n,1) = A(n,n) = 1), following the convention used by
// the level-count formulas here, not the 0-based one common elsewhere.
// Returns 0 outside 1 <= k <= n.
BigInt eulerian(unsigned long n, unsigned long k);

// Signless Stirling number of the first kind c(n, k): permutations of [n]
// with exactly k cycles.
BigInt stirling_first_unsigned(unsigned long n, unsigned long k);

// Signed Stirling number of the first kind s(n, k) = (-1)^{n-k} c(n, k).
BigInt stirling_first_signed(unsigned long n, unsigned long k);

// Stirling number of the second kind S(n, k): partitions of an n-set into
// k blocks.
BigInt stirling_second(unsigned long n, unsigned long k);

// n! / (k_1! ... k_m!) with sum(k) == n required.
BigInt multinomial(unsigned long n, const std::vector<unsigned long>& parts);

// Streams every composition of n into exactly l positive parts, in
// lexicographic order. Yields nothing when l > n or (l == 0 and n > 0);
// yields a single empty tuple when n == l == 0. The callback may return
// false to stop early.
void for_each_composition(unsigned long n, unsigned long l,
                          const std::function<bool(const std::vector<unsigned long>&)>& visit);

std::vector<std::vector<unsigned long>> compositions(unsigned long n, unsigned long l);

} // namespace braidlevel::combinat
